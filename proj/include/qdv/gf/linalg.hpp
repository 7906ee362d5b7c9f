#pragma once

#include <optional>
#include <vector>

#include "qdv/gf/matrix.hpp"
#include "qdv/gf/poly.hpp"

namespace qdv::gf {

struct RrefResult {
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivots are taken as the first nonzero entry in
/// column order, so results are reproducible bit-for-bit. GF(2) inputs are
/// eliminated on packed rows.
RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Row space of vectors in a fixed ambient dimension, stored as an RREF basis.
class FpSubspace {
 public:
  FpSubspace(unsigned p, std::size_t ambient_dim);
  /// Span of the rows of `generators`.
  static FpSubspace span(const FpMatrix& generators);
  static FpSubspace span(unsigned p, std::size_t ambient_dim, const std::vector<FpVector>& vectors);
  static FpSubspace full(unsigned p, std::size_t ambient_dim);

  unsigned p() const { return basis_.p(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FpVector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Subtracts basis multiples so the result has zeros in every pivot column.
  FpVector reduce(FpVector v) const;
  bool contains(const FpVector& v) const;
  bool contains(const FpSubspace& other) const;
  /// Coordinates of v in the RREF basis (read off at the pivots); v must lie in the space.
  FpVector coordinates(const FpVector& v) const;

  FpSubspace operator+(const FpSubspace& o) const;
  FpSubspace intersect(const FpSubspace& o) const;

  bool operator==(const FpSubspace& o) const { return basis_ == o.basis_; }

 private:
  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Solves a·x = b. Empty when the system is inconsistent.
std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b);

/// Right nullspace {v : a·v = 0}.
FpSubspace nullspace(const FpMatrix& a);

/// Minimal polynomial by Krylov sequences from each standard basis vector,
/// combined by lcm. Throws DimensionMismatch for non-square input.
FpPoly min_poly(const FpMatrix& a);

bool is_nilpotent(const FpMatrix& a);
bool is_invertible(const FpMatrix& a);
std::optional<FpMatrix> inverse(const FpMatrix& a);

/// Fitting decomposition V = im(a^N) ⊕ ker(a^N) for N = dim.
struct FittingDecomposition {
  FpSubspace image;   // a acts invertibly here
  FpSubspace kernel;  // a acts nilpotently here
  FpMatrix projection_to_image;  // idempotent along the kernel
};
FittingDecomposition fitting_decomposition(const FpMatrix& a);

}  // namespace qdv::gf
