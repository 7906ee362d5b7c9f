#include "qdv/rep/endo.hpp"

#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qdv/group/finite_group.hpp"

namespace qdv::rep {

FpMatrix PermModule::action_matrix(const group::Perm& g) const {
  FpMatrix m(p, degree, degree);
  for (std::uint32_t x = 0; x < degree; ++x) m(g(x), x) = 1;
  return m;
}

Algebra::Algebra(unsigned p, std::size_t dim, std::vector<Residue> constants, FpVector one)
    : p_(p), dim_(dim), c_(std::move(constants)), one_(std::move(one)) {
  if (c_.size() != dim_ * dim_ * dim_ || one_.size() != dim_) throw gf::DimensionMismatch("Algebra: structure constant shape");
}

FpVector Algebra::basis(std::size_t i) const {
  FpVector v(dim_, 0);
  v.at(i) = 1;
  return v;
}

FpVector Algebra::mul(const FpVector& a, const FpVector& b) const {
  std::vector<unsigned> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      const unsigned s = unsigned(a[i]) * b[j] % p_;
      const Residue* row = &c_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k]) acc[k] = (acc[k] + s * row[k]) % p_;
    }
  }
  return FpVector(acc.begin(), acc.end());
}

FpMatrix Algebra::left_regular(const FpVector& a) const {
  FpMatrix L(p_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Residue* row = &c_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row[k]) L(k, j) = static_cast<Residue>((L(k, j) + unsigned(a[i]) * row[k]) % p_);
    }
  }
  return L;
}

FpVector Algebra::evaluate(const gf::FpPoly& f, const FpVector& a) const {
  const FpMatrix L = left_regular(a);
  FpVector v(dim_, 0);
  for (int d = f.degree(); d >= 0; --d) {
    v = L * v;
    const Residue c = f.coeff(static_cast<std::size_t>(d));
    for (std::size_t k = 0; k < dim_; ++k) v[k] = static_cast<Residue>((v[k] + unsigned(c) * one_[k]) % p_);
  }
  return v;
}

Algebra Algebra::quotient(const FpSubspace& ideal) const {
  std::vector<char> pivot(dim_, 0);
  for (auto c : ideal.pivots()) pivot[c] = 1;
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < dim_; ++k)
    if (!pivot[k]) keep.push_back(k);
  const std::size_t q = keep.size();
  std::vector<Residue> c(q * q * q, 0);
  auto project = [&](const FpVector& v) {
    FpVector r = ideal.reduce(v), out(q);
    for (std::size_t s = 0; s < q; ++s) out[s] = r[keep[s]];
    return out;
  };
  for (std::size_t s = 0; s < q; ++s)
    for (std::size_t t = 0; t < q; ++t) {
      FpVector prod(&c_[(keep[s] * dim_ + keep[t]) * dim_], &c_[(keep[s] * dim_ + keep[t]) * dim_] + dim_);
      FpVector r = project(prod);
      std::copy(r.begin(), r.end(), c.begin() + (s * q + t) * q);
    }
  return Algebra(p_, q, std::move(c), project(one_));
}

bool Algebra::is_associative_unital() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const FpVector ei = basis(i);
    if (mul(one_, ei) != ei || mul(ei, one_) != ei) return false;
    for (std::size_t j = 0; j < dim_; ++j) {
      const FpVector eij = mul(ei, basis(j));
      for (std::size_t k = 0; k < dim_; ++k)
        if (mul(eij, basis(k)) != mul(ei, mul(basis(j), basis(k)))) return false;
    }
  }
  return true;
}

FpMatrix EndoAlgebra::basis_matrix(std::size_t i) const {
  FpMatrix m(algebra.p(), degree, degree);
  for (std::size_t x = 0; x < degree; ++x)
    for (std::size_t y = 0; y < degree; ++y)
      if (label[x * degree + y] == i) m(x, y) = 1;
  return m;
}

FpMatrix EndoAlgebra::to_matrix(const FpVector& coords) const {
  FpMatrix m(algebra.p(), degree, degree);
  for (std::size_t x = 0; x < degree; ++x)
    for (std::size_t y = 0; y < degree; ++y) m(x, y) = coords[label[x * degree + y]];
  return m;
}

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

EndoAlgebra endo_algebra(const PermModule& m, const AlgebraLimits& limits) {
  const std::size_t d = m.degree;
  if (d > limits.max_degree) throw group::CapExceeded("endo_algebra", limits.max_degree, "module degree " + std::to_string(d));
  for (const auto& g : m.generators)
    if (g.degree() != d) throw gf::DimensionMismatch("endo_algebra: generator degree");
  std::vector<std::uint32_t> parent(d * d);
  std::iota(parent.begin(), parent.end(), 0u);
  for (const auto& g : m.generators)
    for (std::uint32_t x = 0; x < d; ++x)
      for (std::uint32_t y = 0; y < d; ++y) {
        auto a = find_root(parent, static_cast<std::uint32_t>(x * d + y));
        auto b = find_root(parent, static_cast<std::uint32_t>(g(x) * d + g(y)));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  EndoAlgebra e{d, std::vector<std::uint32_t>(d * d), {}, {}, Algebra(m.p, 0, {}, {})};
  std::vector<std::uint32_t> root_label(d * d, UINT32_MAX);
  for (std::uint32_t xy = 0; xy < d * d; ++xy) {
    auto r = find_root(parent, xy);
    if (root_label[r] == UINT32_MAX) {
      root_label[r] = static_cast<std::uint32_t>(e.orbit_rep.size());
      e.orbit_rep.emplace_back(xy / d, xy % d);
      e.orbit_size.push_back(0);
      if (e.orbit_rep.size() > limits.max_dim)
        throw group::CapExceeded("endo_algebra", limits.max_dim, "more orbits on pairs than allowed");
    }
    e.label[xy] = root_label[r];
    ++e.orbit_size[root_label[r]];
  }
  const std::size_t r = e.orbit_rep.size();
  std::vector<unsigned> counts(r * r * r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    const auto [x, y] = e.orbit_rep[k];
    for (std::size_t z = 0; z < d; ++z) ++counts[(e.label[x * d + z] * r + e.label[z * d + y]) * r + k];
  }
  std::vector<Residue> c(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) c[i] = static_cast<Residue>(counts[i] % m.p);
  FpVector one(r, 0);
  for (std::size_t x = 0; x < d; ++x) one[e.label[x * d + x]] = 1;
  e.algebra = Algebra(m.p, r, std::move(c), std::move(one));
  return e;
}

namespace {

using Wide = std::vector<std::uint64_t>;

Wide wide_mul(const Wide& a, const Wide& b, std::size_t n, std::uint64_t mod) {
  Wide r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) r[i * n + j] += x * b[k * n + j];
      if (k % 64 == 63)
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] %= mod;
    }
  for (auto& x : r) x %= mod;
  return r;
}

Wide wide_pow(Wide base, std::uint64_t e, std::size_t n, std::uint64_t mod) {
  Wide r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % mod;
  for (; e; e >>= 1) {
    if (e & 1) r = wide_mul(r, base, n, mod);
    if (e > 1) base = wide_mul(base, base, n, mod);
  }
  return r;
}

/// Tr(lift(L)^(p^i)) mod p^(i+1), divided by p^i.
Residue trace_form(const FpMatrix& L, unsigned p, std::size_t i) {
  const std::size_t n = L.rows();
  std::uint64_t pi = 1;
  for (std::size_t k = 0; k < i; ++k) pi *= p;
  const std::uint64_t mod = pi * p;
  Wide x(L.data().begin(), L.data().end());
  for (std::size_t k = 0; k < i; ++k) x = wide_pow(std::move(x), p, n, mod);
  std::uint64_t tr = 0;
  for (std::size_t j = 0; j < n; ++j) tr = (tr + x[j * n + j]) % mod;
  if (tr % pi != 0) throw std::logic_error("radical: trace of p-power map not divisible as expected");
  return static_cast<Residue>(tr / pi);
}

bool is_zero(const FpVector& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

}  // namespace

RadicalResult radical(const Algebra& a) {
  const std::size_t n = a.dim();
  const unsigned p = a.p();
  std::size_t l = 0;
  for (std::size_t q = p; q <= n; q *= p) ++l;
  FpSubspace I = FpSubspace::full(p, n);
  RadicalResult res{I, 0, 0};
  for (std::size_t i = 0; i <= l && I.dim() > 0; ++i) {
    const std::size_t m = I.dim();
    std::vector<FpVector> basis(m);
    FpVector g(m);
    for (std::size_t s = 0; s < m; ++s) {
      basis[s] = I.basis_vector(s);
      g[s] = trace_form(a.left_regular(basis[s]), p, i);
    }
    // a in I_i iff g(a e_t) = 0 for every t; g is linear on I_(i-1).
    FpMatrix C(p, n, m);
    for (std::size_t s = 0; s < m; ++s) {
      const FpMatrix L = a.left_regular(basis[s]);
      for (std::size_t t = 0; t < n; ++t) {
        const FpVector coords = I.coordinates(L.column_vector(t));
        unsigned acc = 0;
        for (std::size_t u = 0; u < m; ++u) acc += unsigned(coords[u]) * g[u];
        C(t, s) = static_cast<Residue>(acc % p);
      }
    }
    const FpSubspace lambda = nullspace(C);
    std::vector<FpVector> next;
    for (std::size_t k = 0; k < lambda.dim(); ++k) {
      const FpVector lam = lambda.basis_vector(k);
      FpVector v(n, 0);
      for (std::size_t s = 0; s < m; ++s)
        if (lam[s])
          for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<Residue>((v[j] + unsigned(lam[s]) * basis[s][j]) % p);
      next.push_back(std::move(v));
    }
    I = FpSubspace::span(p, n, next);
    res.chain_length = i + 1;
  }
  res.J = I;

  for (std::size_t s = 0; s < I.dim(); ++s) {
    const FpVector j = I.basis_vector(s);
    for (std::size_t t = 0; t < n; ++t)
      if (!I.contains(a.mul(j, a.basis(t))) || !I.contains(a.mul(a.basis(t), j)))
        throw std::logic_error("radical: result is not a two-sided ideal");
  }
  std::vector<FpVector> power;
  for (std::size_t s = 0; s < I.dim(); ++s) power.push_back(I.basis_vector(s));
  std::size_t k = 1;
  while (!power.empty()) {
    if (k > I.dim() + 1) throw std::logic_error("radical: result is not nilpotent");
    std::vector<FpVector> next;
    for (const auto& x : power)
      for (std::size_t s = 0; s < I.dim(); ++s) {
        FpVector y = a.mul(x, I.basis_vector(s));
        if (!is_zero(y)) next.push_back(std::move(y));
      }
    const FpSubspace span = FpSubspace::span(p, n, next);
    power.clear();
    for (std::size_t s = 0; s < span.dim(); ++s) power.push_back(span.basis_vector(s));
    ++k;
  }
  res.nilpotency_index = k;
  return res;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IndecomposableAbs:
      return "INDECOMPOSABLE_ABS";
    case Verdict::IndecomposableNotAbs:
      return "INDECOMPOSABLE_NOT_ABS";
    case Verdict::Decomposable:
      return "DECOMPOSABLE";
  }
  return "?";
}

namespace {

FpVector random_element(std::mt19937_64& rng, unsigned p, std::size_t n) {
  std::uniform_int_distribution<unsigned> d(0, p - 1);
  FpVector v(n);
  for (auto& x : v) x = static_cast<Residue>(d(rng));
  return v;
}

/// x^a h with h(0) != 0, a >= 1, deg h >= 1: the CRT idempotent for the x^a factor complement.
std::optional<FpVector> splitting_idempotent(const Algebra& a, const FpVector& x) {
  const gf::FpPoly mp = gf::min_poly(a.left_regular(x));
  std::size_t mult = 0;
  while (mult < mp.coeffs().size() && mp.coeff(mult) == 0) ++mult;
  if (mult == 0 || static_cast<int>(mult) == mp.degree()) return std::nullopt;
  const gf::FpPoly xa = gf::FpPoly::monomial(a.p(), mult);
  const gf::FpPoly h = mp.divmod(xa).first;
  const auto eg = gf::extended_gcd(xa, h);
  if (eg.g.degree() != 0) throw std::logic_error("splitting_idempotent: factors not coprime");
  // e = s x^a is 0 on the nilpotent part and 1 on the invertible part.
  return a.evaluate(eg.s * xa, x);
}

}  // namespace

IndecomposabilityVerdict indecomposable(const EndoAlgebra& e, std::uint64_t seed) {
  const Algebra& a = e.algebra;
  IndecomposabilityVerdict v;
  v.dim_end = a.dim();
  const RadicalResult rad = radical(a);
  v.dim_radical = rad.J.dim();
  v.dim_quotient = v.dim_end - v.dim_radical;
  if (v.dim_quotient == 0) throw std::logic_error("indecomposable: zero algebra");
  if (v.dim_quotient == 1) {
    v.status = Verdict::IndecomposableAbs;
    return v;
  }
  std::mt19937_64 rng(seed);
  std::vector<FpVector> candidates;
  for (std::size_t i = 0; i < a.dim(); ++i) candidates.push_back(a.basis(i));
  for (int k = 0; k < 64; ++k) candidates.push_back(random_element(rng, a.p(), a.dim()));
  for (const auto& x : candidates) {
    auto idem = splitting_idempotent(a, x);
    if (!idem) continue;
    if (a.mul(*idem, *idem) != *idem || is_zero(*idem) || *idem == a.one())
      throw std::logic_error("indecomposable: splitter produced a bad idempotent");
    v.status = Verdict::Decomposable;
    v.idempotent = *idem;
    v.idempotent_matrix = e.to_matrix(*idem);
    v.summand_image = FpSubspace::span(v.idempotent_matrix->transpose());
    v.summand_kernel = gf::nullspace(*v.idempotent_matrix);
    return v;
  }
  // No splitter: End/J should be a field; certify with a primitive element.
  const Algebra q = a.quotient(rad.J);
  std::vector<FpVector> qc;
  for (std::size_t i = 0; i < q.dim(); ++i) qc.push_back(q.basis(i));
  for (int k = 0; k < 256; ++k) qc.push_back(random_element(rng, q.p(), q.dim()));
  for (const auto& x : qc) {
    const gf::FpPoly mp = gf::min_poly(q.left_regular(x));
    if (mp.degree() == static_cast<int>(q.dim()) && gf::is_irreducible(mp)) {
      v.status = Verdict::IndecomposableNotAbs;
      v.field_certificate = mp;
      return v;
    }
  }
  throw std::logic_error("indecomposable: neither a splitter nor a field certificate was found");
}

IndecomposabilityVerdict indecomposable(const PermModule& m, std::uint64_t seed, const AlgebraLimits& limits) {
  return indecomposable(endo_algebra(m, limits), seed);
}

IdempotentScan exhaustive_idempotents(const Algebra& a) {
  const std::size_t r = a.dim();
  if (a.p() != 2 || r > 24) throw std::invalid_argument("exhaustive_idempotents: needs p = 2 and dim <= 24");
  std::vector<std::uint32_t> prod(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (a.c(i, j, k)) prod[i * r + j] |= std::uint32_t{1} << k;
  std::vector<std::uint32_t> cross(r, 0);  // cross[k] = sum over i in S of e_i e_k + e_k e_i
  std::uint32_t S = 0, sq = 0;
  IdempotentScan scan;
  scan.elements = std::uint64_t{1} << r;
  scan.idempotents = 1;  // zero
  for (std::uint64_t t = 1; t < scan.elements; ++t) {
    const std::size_t k = static_cast<std::size_t>(std::countr_zero(t));
    sq ^= cross[k] ^ prod[k * r + k];
    for (std::size_t j = 0; j < r; ++j) cross[j] ^= prod[k * r + j] ^ prod[j * r + k];
    S ^= std::uint32_t{1} << k;
    if (sq == S) ++scan.idempotents;
  }
  return scan;
}

}  // namespace qdv::rep
