#include "qdv/gf/linalg.hpp"

namespace qdv::gf {

namespace {

RrefResult rref_generic(const FpMatrix& m) {
  const PrimeField f(m.p());
  RrefResult out{m, 0, {}};
  FpMatrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t found = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r)
      if (a(r, c) != 0) {
        found = r;
        break;
      }
    if (found == a.rows()) continue;
    if (found != pivot_row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(found, k), a(pivot_row, k));
    const Residue inv = f.inv(a(pivot_row, c));
    if (inv != 1)
      for (std::size_t k = c; k < a.cols(); ++k) a(pivot_row, k) = f.mul(a(pivot_row, k), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, c) == 0) continue;
      const Residue factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = f.sub(a(r, k), f.mul(factor, a(pivot_row, k)));
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.rank = out.pivots.size();
  return out;
}

RrefResult rref_gf2(const FpMatrix& m) {
  Gf2Matrix packed(m);
  auto pivots = packed.rref_in_place();
  RrefResult out{packed.to_fp(), pivots.size(), std::move(pivots)};
  return out;
}

void require_square(const FpMatrix& a, const char* what) {
  if (!a.is_square()) throw DimensionMismatch(std::string(what) + ": matrix is not square");
}

}  // namespace

RrefResult rref(const FpMatrix& m) { return m.p() == 2 ? rref_gf2(m) : rref_generic(m); }

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

FpSubspace::FpSubspace(unsigned p, std::size_t ambient_dim) : basis_(p, 0, ambient_dim) {}

FpSubspace FpSubspace::span(const FpMatrix& generators) {
  RrefResult r = rref(generators);
  FpSubspace s(generators.p(), generators.cols());
  s.basis_ = FpMatrix(generators.p(), r.rank, generators.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
  s.pivots_ = std::move(r.pivots);
  return s;
}

FpSubspace FpSubspace::span(unsigned p, std::size_t ambient_dim, const std::vector<FpVector>& vectors) {
  return span(FpMatrix::from_rows(p, vectors, ambient_dim));
}

FpSubspace FpSubspace::full(unsigned p, std::size_t ambient_dim) {
  return span(FpMatrix::identity(p, ambient_dim));
}

FpVector FpSubspace::reduce(FpVector v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("FpSubspace::reduce: vector length");
  const PrimeField f(p());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Residue c = v[pivots_[i]];
    if (c == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (row[k]) v[k] = f.sub(v[k], f.mul(c, row[k]));
  }
  return v;
}

bool FpSubspace::contains(const FpVector& v) const {
  for (Residue x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool FpSubspace::contains(const FpSubspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

FpVector FpSubspace::coordinates(const FpVector& v) const {
  if (!contains(v)) throw std::invalid_argument("FpSubspace::coordinates: vector not in subspace");
  FpVector c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

FpSubspace FpSubspace::operator+(const FpSubspace& o) const {
  if (o.ambient_dim() != ambient_dim()) throw DimensionMismatch("FpSubspace::operator+");
  FpMatrix stacked(p(), dim() + o.dim(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) stacked(i, j) = basis_(i, j);
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) stacked(dim() + i, j) = o.basis_(i, j);
  return span(stacked);
}

FpSubspace FpSubspace::intersect(const FpSubspace& o) const {
  if (o.ambient_dim() != ambient_dim()) throw DimensionMismatch("FpSubspace::intersect");
  const PrimeField f(p());
  // Columns are the basis vectors of both spaces; null vectors (a, b) give a·U = b·W.
  FpMatrix cols(p(), ambient_dim(), dim() + o.dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) cols(j, i) = basis_(i, j);
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) cols(j, dim() + i) = f.neg(o.basis_(i, j));
  FpSubspace ns = nullspace(cols);
  std::vector<FpVector> vecs;
  for (std::size_t k = 0; k < ns.dim(); ++k) {
    FpVector v(ambient_dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      const Residue a = ns.basis()(k, i);
      if (a == 0) continue;
      for (std::size_t j = 0; j < ambient_dim(); ++j) v[j] = f.add(v[j], f.mul(a, basis_(i, j)));
    }
    vecs.push_back(std::move(v));
  }
  if (vecs.empty()) return FpSubspace(p(), ambient_dim());
  return span(p(), ambient_dim(), vecs);
}

std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve: a.rows() != length(b)");
  FpMatrix aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  FpVector x(a.cols(), 0);
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  return x;
}

FpSubspace nullspace(const FpMatrix& a) {
  const PrimeField f(a.p());
  const RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<FpVector> vecs;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    vecs.push_back(std::move(v));
  }
  if (vecs.empty()) return FpSubspace(a.p(), a.cols());
  return FpSubspace::span(a.p(), a.cols(), vecs);
}

namespace {

/// Monic polynomial q of least degree with q(a)·v = 0.
FpPoly local_min_poly(const FpMatrix& a, const FpVector& v) {
  const unsigned p = a.p();
  const PrimeField f(p);
  const std::size_t n = a.rows();
  struct Stored {
    FpVector row;
    std::size_t pivot;
    FpPoly combo;
  };
  std::vector<Stored> stored;
  FpVector power = v;  // a^k v
  for (std::size_t k = 0; k <= n; ++k) {
    FpVector u = power;
    FpPoly combo = FpPoly::monomial(p, k);
    for (const Stored& s : stored) {
      const Residue c = u[s.pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) u[j] = f.sub(u[j], f.mul(c, s.row[j]));
      combo = combo - s.combo * FpPoly::constant(p, c);
    }
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j)
      if (u[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == n) return combo.monic();
    const Residue inv = f.inv(u[pivot]);
    for (auto& x : u) x = f.mul(x, inv);
    combo = combo * FpPoly::constant(p, inv);
    // Keep stored rows reduced against the new pivot so later reductions stay single-pass.
    for (Stored& s : stored) {
      const Residue c = s.row[pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) s.row[j] = f.sub(s.row[j], f.mul(c, u[j]));
      s.combo = s.combo - combo * FpPoly::constant(p, c);
    }
    stored.push_back({std::move(u), pivot, std::move(combo)});
    power = a * power;
  }
  throw std::logic_error("local_min_poly: Krylov sequence did not terminate");
}

FpVector apply_poly(const FpPoly& q, const FpMatrix& a, const FpVector& v) {
  const PrimeField f(a.p());
  FpVector acc(v.size(), 0);
  for (std::size_t i = q.coeffs().size(); i-- > 0;) {
    acc = a * acc;
    const Residue c = q.coeffs()[i];
    if (c)
      for (std::size_t j = 0; j < v.size(); ++j) acc[j] = f.add(acc[j], f.mul(c, v[j]));
  }
  return acc;
}

}  // namespace

FpPoly min_poly(const FpMatrix& a) {
  require_square(a, "min_poly");
  const unsigned p = a.p();
  const std::size_t n = a.rows();
  FpPoly q = FpPoly::constant(p, 1);
  for (std::size_t j = 0; j < n; ++j) {
    FpVector e(n, 0);
    e[j] = 1;
    bool annihilated = true;
    for (Residue x : apply_poly(q, a, e))
      if (x) {
        annihilated = false;
        break;
      }
    if (annihilated) continue;
    q = lcm(q, local_min_poly(a, e));
  }
  return q;
}

bool is_nilpotent(const FpMatrix& a) {
  require_square(a, "is_nilpotent");
  if (a.rows() == 0) return true;
  const FpPoly q = min_poly(a);
  return q == FpPoly::monomial(a.p(), static_cast<std::size_t>(q.degree()));
}

bool is_invertible(const FpMatrix& a) {
  require_square(a, "is_invertible");
  return rank(a) == a.rows();
}

std::optional<FpMatrix> inverse(const FpMatrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  FpMatrix aug(a.p(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const RrefResult r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
  FpMatrix inv(a.p(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

FittingDecomposition fitting_decomposition(const FpMatrix& a) {
  require_square(a, "fitting_decomposition");
  const std::size_t n = a.rows();
  const FpMatrix an = a.power(n);
  FpSubspace image = FpSubspace::span(an.transpose());
  FpSubspace kernel = nullspace(an);
  // Columns of `basis` are the image basis followed by the kernel basis.
  FpMatrix basis(a.p(), n, n);
  for (std::size_t i = 0; i < image.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) basis(r, i) = image.basis()(i, r);
  for (std::size_t i = 0; i < kernel.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) basis(r, image.dim() + i) = kernel.basis()(i, r);
  auto basis_inv = inverse(basis);
  if (!basis_inv) throw std::logic_error("fitting_decomposition: image and kernel are not complementary");
  FpMatrix diag(a.p(), n, n);
  for (std::size_t i = 0; i < image.dim(); ++i) diag(i, i) = 1;
  FpMatrix projection = basis * diag * *basis_inv;
  return {std::move(image), std::move(kernel), std::move(projection)};
}

}  // namespace qdv::gf
