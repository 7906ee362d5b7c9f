#include "qdv/qd/qd.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qdv::qd {

namespace {

Residue md(long long x, unsigned p) {
  long long r = x % static_cast<long long>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

Residue inv_mod(long long x, unsigned p) {
  const Residue a = md(x, p);
  if (a == 0) throw std::domain_error("inverse of zero mod " + std::to_string(p));
  for (unsigned y = 1; y < p; ++y)
    if (unsigned(a) * y % p == 1) return static_cast<Residue>(y);
  throw std::domain_error("modulus is not prime");
}

void require_prime(unsigned p) {
  if (!gf::is_prime(p) || p >= 256) throw std::invalid_argument("Qd: p must be a prime below 256, got " + std::to_string(p));
}

void require_odd_prime(unsigned p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("expects an odd prime");
}

}  // namespace

SL2 SL2::make(unsigned p, long a, long b, long c, long d) {
  require_prime(p);
  SL2 m;
  m.p = static_cast<std::uint8_t>(p);
  m.a = md(a, p);
  m.b = md(b, p);
  m.c = md(c, p);
  m.d = md(d, p);
  if (md(static_cast<long long>(m.a) * m.d - static_cast<long long>(m.b) * m.c, p) != 1)
    throw std::invalid_argument("SL2: determinant is not 1: " + m.to_string());
  return m;
}

SL2 SL2::operator*(const SL2& o) const {
  SL2 r;
  r.p = p;
  r.a = md(unsigned(a) * o.a + unsigned(b) * o.c, p);
  r.b = md(unsigned(a) * o.b + unsigned(b) * o.d, p);
  r.c = md(unsigned(c) * o.a + unsigned(d) * o.c, p);
  r.d = md(unsigned(c) * o.b + unsigned(d) * o.d, p);
  return r;
}

SL2 SL2::inverse() const {
  SL2 r;
  r.p = p;
  r.a = d;
  r.b = md(-static_cast<long>(b), p);
  r.c = md(-static_cast<long>(c), p);
  r.d = a;
  return r;
}

SL2 SL2::power(long k) const {
  SL2 base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -k : k;
  SL2 r = identity(p);
  for (; e; e >>= 1, base = base * base)
    if (e & 1) r = r * base;
  return r;
}

std::array<Residue, 2> SL2::apply(Residue x, Residue y) const {
  return {md(unsigned(a) * x + unsigned(b) * y, p), md(unsigned(c) * x + unsigned(d) * y, p)};
}

std::string SL2::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," + std::to_string(d) + "]]";
}

QdElement QdElement::translation(unsigned p, long x, long y) {
  QdElement e = identity(p);
  e.v = {md(x, p), md(y, p)};
  return e;
}

QdElement QdElement::operator*(const QdElement& o) const {
  auto w = A.apply(o.v[0], o.v[1]);
  QdElement r;
  r.p = p;
  r.v = {md(unsigned(v[0]) + w[0], p), md(unsigned(v[1]) + w[1], p)};
  r.A = A * o.A;
  return r;
}

// (v,A)^-1 = (-A^-1 v, A^-1)
QdElement QdElement::inverse() const {
  QdElement r;
  r.p = p;
  r.A = A.inverse();
  auto w = r.A.apply(v[0], v[1]);
  r.v = {md(-static_cast<long>(w[0]), p), md(-static_cast<long>(w[1]), p)};
  return r;
}

QdElement QdElement::power(long k) const {
  QdElement base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? -k : k;
  QdElement r = identity(p);
  for (; e; e >>= 1, base = base * base)
    if (e & 1) r = r * base;
  return r;
}

std::string QdElement::to_string() const {
  return "((" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")," + A.to_string() + ")";
}

SL2 alpha(unsigned p) { return SL2::make(p, 1, 1, 0, 1); }
SL2 beta(unsigned p) { return SL2::make(p, 1, 0, 1, 1); }
SL2 gamma(unsigned p) { return SL2::make(p, 0, -1, 1, 0); }
SL2 nu(unsigned p, long r) { return SL2::make(p, r, 0, 0, inv_mod(r, p)); }
QdElement t_element(unsigned p) { return QdElement::translation(p, 1, 0); }

QdGroup build_qd(unsigned p, group::GroupLimits limits) {
  require_prime(p);
  if (qd_order(p) > limits.max_order)
    throw group::CapExceeded("build_qd", limits.max_order, "|Qd(" + std::to_string(p) + ")| = " + std::to_string(qd_order(p)));
  auto g = QdGroup::closure({t_element(p), QdElement::translation(p, 0, 1), QdElement::linear(alpha(p)),
                             QdElement::linear(beta(p))},
                            QdElement::identity(p), limits, "build_qd");
  if (g.order() != qd_order(p)) throw std::logic_error("build_qd: wrong order " + std::to_string(g.order()));
  return g;
}

QdSubgroup sylow_P(const QdGroup& m) {
  const unsigned p = m.identity().p;
  auto P = QdSubgroup::generated(
      m, {m.index_of(t_element(p)), m.index_of(QdElement::translation(p, 0, 1)), m.index_of(QdElement::linear(alpha(p)))});
  if (P.order() != std::uint64_t{p} * p * p) throw std::logic_error("sylow_P: wrong order");
  return P;
}

QdSubgroup subgroup_V(const QdGroup& m) {
  const unsigned p = m.identity().p;
  return QdSubgroup::generated(m, {m.index_of(t_element(p)), m.index_of(QdElement::translation(p, 0, 1))});
}

std::vector<QdElement> P_elements(unsigned p) {
  std::vector<QdElement> out;
  for (const auto& v : V_elements(p))
    for (long i = 0; i < static_cast<long>(p); ++i) out.push_back(v * QdElement::linear(alpha(p).power(i)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QdElement> V_elements(unsigned p) {
  require_prime(p);
  std::vector<QdElement> out;
  for (long x = 0; x < static_cast<long>(p); ++x)
    for (long y = 0; y < static_cast<long>(p); ++y) out.push_back(QdElement::translation(p, x, y));
  return out;
}

std::size_t CosetRepTable::coset_of(const QdElement& x) const {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (in_P(reps[i].inverse() * x)) return i;
  throw std::logic_error("coset_of: no representative for " + x.to_string());
}

CosetRepTable coset_reps(unsigned p) {
  require_prime(p);
  CosetRepTable t;
  t.p = p;
  t.n = std::size_t{p} * p - 1;
  for (std::size_t j = 1; j <= t.n; ++j) {
    SL2 m;
    if (j <= std::size_t{p} * p - p) {
      const long s = static_cast<long>((j - 1) / (p - 1)), r = static_cast<long>((j - 1) % (p - 1));
      m = beta(p).power(s) * nu(p, r + 1);
    } else {
      const long r = static_cast<long>(j - 1 - std::size_t{p} * (p - 1));
      m = gamma(p) * nu(p, r + 1);
    }
    t.reps.push_back(QdElement::linear(m));
  }
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = i + 1; j < t.n; ++j)
      if (in_P(t.reps[i].inverse() * t.reps[j]))
        throw std::logic_error("coset_reps: m_" + std::to_string(i + 1) + " and m_" + std::to_string(j + 1) + " share a coset");
  return t;
}

void validate_partition(const CosetRepTable& table, const QdGroup& m) {
  const auto P = sylow_P(m);
  std::vector<int> hits(m.order(), 0);
  for (const auto& r : table.reps)
    for (group::Index u : P.members()) ++hits[m.index_of(r * m.element(u))];
  for (std::size_t x = 0; x < hits.size(); ++x)
    if (hits[x] != 1)
      throw std::logic_error("validate_partition: element " + m.element(static_cast<group::Index>(x)).to_string() + " covered " +
                             std::to_string(hits[x]) + " times");
}

bool check_alpha_beta_relation(unsigned p, unsigned s) {
  require_odd_prime(p);
  if (s >= p) throw std::invalid_argument("check_alpha_beta_relation: s out of range");
  const SL2 lhs = alpha(p) * beta(p).power(s);
  if (s + 1 == p) return lhs == gamma(p) * nu(p, p - 1) * alpha(p).power(p - 1);
  const Residue inv = inv_mod(s + 1, p);
  const long exp = md(static_cast<long long>(s) * inv, p);
  return lhs == beta(p).power(exp) * nu(p, s + 1) * alpha(p).power(inv);
}

bool check_alpha_gamma_relation(unsigned p) {
  require_odd_prime(p);
  return alpha(p) * gamma(p) == beta(p) * alpha(p).power(p - 1);
}

FIteration f_iteration(unsigned p) {
  require_odd_prime(p);
  FIteration out;
  Residue x = 1;
  for (std::size_t s = 0; s < p; ++s) {
    out.values.push_back(x);
    if (x == p - 1) {
      out.first_hit = s;
      break;
    }
    x = md(static_cast<long long>(x) * inv_mod(x + 1, p), p);
  }
  return out;
}

bool f_is_bijection(unsigned p) {
  require_odd_prime(p);
  std::set<Residue> image;
  for (unsigned s = 1; s + 1 < p; ++s) {
    const Residue y = md(static_cast<long long>(s) * inv_mod(s + 1, p), p);
    if (y == 0 || y == 1) return false;
    image.insert(y);
  }
  return image.size() == p - 2;
}

SL2 beta_nu_alpha_product(unsigned p, long r, long r2, long i) {
  return beta(p) * nu(p, r) * alpha(p).power(-i) * nu(p, r2).inverse() * beta(p).inverse();
}

SL2 beta_nu_alpha_matrix(unsigned p, long r, long r2, long i) {
  const long long a = r, b = r2, ri = inv_mod(r, p), bi = inv_mod(r2, p);
  return SL2::make(p, md(a * bi + i * a * b, p), md(-i * a * b, p), md(a * bi + i * a * b - ri * b, p),
                   md(-i * a * b + ri * b, p));
}

}  // namespace qdv::qd
