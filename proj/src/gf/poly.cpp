#include "qdv/gf/poly.hpp"

#include <sstream>

namespace qdv::gf {

FpPoly::FpPoly(unsigned p, std::vector<long long> coeffs_low_first) : p_(p) {
  c_.reserve(coeffs_low_first.size());
  for (long long v : coeffs_low_first) {
    long long r = v % static_cast<long long>(p);
    c_.push_back(static_cast<Residue>(r < 0 ? r + p : r));
  }
  trim();
}

FpPoly FpPoly::monomial(unsigned p, std::size_t degree, Residue c) {
  FpPoly f(p);
  f.c_.assign(degree + 1, 0);
  f.c_[degree] = static_cast<Residue>(c % p);
  f.trim();
  return f;
}

FpPoly FpPoly::constant(unsigned p, Residue c) { return monomial(p, 0, c); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  PrimeField f(p_);
  const Residue inv = f.inv(leading());
  FpPoly out(*this);
  for (auto& x : out.c_) x = f.mul(x, inv);
  return out;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  FpPoly out(p_);
  out.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = static_cast<Residue>((coeff(i) + o.coeff(i)) % p_);
  out.trim();
  return out;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  FpPoly out(p_);
  out.c_.assign(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i)
    out.c_[i] = static_cast<Residue>((coeff(i) + p_ - o.coeff(i)) % p_);
  out.trim();
  return out;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  FpPoly out(p_);
  if (is_zero() || o.is_zero()) return out;
  std::vector<unsigned long long> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += static_cast<unsigned>(c_[i]) * o.c_[j];
  out.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out.c_[i] = static_cast<Residue>(acc[i] % p_);
  out.trim();
  return out;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw std::domain_error("FpPoly::divmod: division by zero polynomial");
  PrimeField f(p_);
  FpPoly q(p_), r(*this);
  if (r.degree() < d.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), 0);
  const Residue lead_inv = f.inv(d.leading());
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    const Residue factor = f.mul(r.leading(), lead_inv);
    q.c_[shift] = factor;
    for (std::size_t i = 0; i < d.c_.size(); ++i)
      r.c_[i + shift] = f.sub(r.c_[i + shift], f.mul(factor, d.c_[i]));
    r.trim();
  }
  q.trim();
  return {q, r};
}

FpMatrix FpPoly::evaluate(const FpMatrix& a) const {
  if (!a.is_square()) throw DimensionMismatch("FpPoly::evaluate: non-square matrix");
  FpMatrix result(a.p(), a.rows(), a.cols());
  for (std::size_t i = c_.size(); i-- > 0;) {
    result = result * a;
    for (std::size_t k = 0; k < a.rows(); ++k) result(k, k) = static_cast<Residue>((result(k, k) + c_[i]) % p_);
  }
  return result;
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << unsigned(c_[i]);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

FpPoly lcm(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p());
  return (a * b).divmod(gcd(a, b)).first.monic();
}

ExtendedGcd extended_gcd(const FpPoly& a, const FpPoly& b) {
  const unsigned p = a.p();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p);
  FpPoly t0(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    FpPoly s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    FpPoly t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  PrimeField f(p);
  const Residue inv = f.inv(r0.leading());
  const FpPoly scale = FpPoly::constant(p, inv);
  return {r0 * scale, s0 * scale, t0 * scale};
}

namespace {

FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly pow_mod(FpPoly base, unsigned long long e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(base.p(), 1) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

/// x^(p^k) mod f by repeated p-th powering.
FpPoly frobenius_power(const FpPoly& f, unsigned k) {
  FpPoly x = FpPoly::monomial(f.p(), 1) % f;
  for (unsigned i = 0; i < k; ++i) x = pow_mod(x, f.p(), f);
  return x;
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const unsigned n = static_cast<unsigned>(f.degree());
  const FpPoly x = FpPoly::monomial(f.p(), 1);
  // Rabin: x^(p^n) = x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for each prime q | n.
  if (!((frobenius_power(f, n) - x) % f).is_zero()) return false;
  for (unsigned q = 2; q <= n; ++q) {
    if (n % q != 0 || !is_prime(q)) continue;
    FpPoly g = gcd(frobenius_power(f, n / q) - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace qdv::gf
