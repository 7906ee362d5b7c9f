#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdv/gf/linalg.hpp"
#include "qdv/group/perm.hpp"

namespace qdv::rep {

using gf::FpMatrix;
using gf::FpSubspace;
using gf::FpVector;
using gf::Residue;

/// Permutation module k[Omega] over GF(p); the acting group is given by permutations of Omega.
struct PermModule {
  unsigned p = 2;
  std::size_t degree = 0;
  std::vector<group::Perm> generators;

  FpMatrix action_matrix(const group::Perm& g) const;
};

struct AlgebraLimits {
  std::size_t max_degree = 2048;  // |Omega| for the orbit computation on pairs
  std::size_t max_dim = 400;      // structure constants are dim^3 bytes
};

/// Finite-dimensional associative unital algebra over GF(p) by structure constants:
/// e_i e_j = sum_k c(i, j, k) e_k.
class Algebra {
 public:
  Algebra(unsigned p, std::size_t dim, std::vector<Residue> constants, FpVector one);

  unsigned p() const { return p_; }
  std::size_t dim() const { return dim_; }
  Residue c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const FpVector& one() const { return one_; }

  FpVector mul(const FpVector& a, const FpVector& b) const;
  /// Matrix of b -> a b in the standard basis (columns are images of basis vectors).
  FpMatrix left_regular(const FpVector& a) const;
  FpVector basis(std::size_t i) const;
  /// Evaluates a polynomial at an element, via the left regular representation.
  FpVector evaluate(const gf::FpPoly& f, const FpVector& a) const;

  /// Quotient by a two-sided ideal, on the complement spanned by the non-pivot basis vectors.
  Algebra quotient(const FpSubspace& ideal) const;
  /// Checks e_i (e_j e_k) = (e_i e_j) e_k and that `one` is a two-sided unit.
  bool is_associative_unital() const;

 private:
  unsigned p_;
  std::size_t dim_;
  std::vector<Residue> c_;
  FpVector one_;
};

/// End_K(k Omega) in the orbit basis: one 0/1 matrix per K-orbit on Omega x Omega.
struct EndoAlgebra {
  std::size_t degree = 0;
  std::vector<std::uint32_t> label;  // label[x * degree + y] = orbit of (x, y)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> orbit_rep;
  std::vector<std::size_t> orbit_size;
  Algebra algebra;

  std::size_t dim() const { return algebra.dim(); }
  FpMatrix basis_matrix(std::size_t i) const;
  /// The degree x degree matrix of an algebra element.
  FpMatrix to_matrix(const FpVector& coords) const;
};

/// Throws group::CapExceeded when the degree or the orbit count exceeds the limits.
EndoAlgebra endo_algebra(const PermModule& m, const AlgebraLimits& limits = {});

struct RadicalResult {
  FpSubspace J;
  std::size_t chain_length = 0;  // number of trace-form steps run
  std::size_t nilpotency_index = 0;
};

/// Jacobson radical by the characteristic-p trace-form chain on the left regular representation.
/// The result is checked to be a nilpotent two-sided ideal; a failure throws std::logic_error.
RadicalResult radical(const Algebra& a);

enum class Verdict { IndecomposableAbs, IndecomposableNotAbs, Decomposable };
std::string to_string(Verdict v);

struct IndecomposabilityVerdict {
  Verdict status = Verdict::Decomposable;
  std::size_t dim_end = 0;
  std::size_t dim_radical = 0;
  std::size_t dim_quotient = 0;
  std::optional<FpVector> idempotent;          // coordinates in End, when decomposable
  std::optional<FpMatrix> idempotent_matrix;   // the same as a degree x degree matrix
  std::optional<FpSubspace> summand_image, summand_kernel;
  std::optional<gf::FpPoly> field_certificate; // irreducible min poly of a generator of End/J
};

/// Verdict for End of a permutation module. A splitter is searched among basis elements and then among
/// seeded random elements; locality is certified by an element of End/J with irreducible minimal
/// polynomial of full degree.
IndecomposabilityVerdict indecomposable(const PermModule& m, std::uint64_t seed = 1, const AlgebraLimits& limits = {});
IndecomposabilityVerdict indecomposable(const EndoAlgebra& e, std::uint64_t seed = 1);

struct IdempotentScan {
  std::uint64_t elements = 0;
  std::uint64_t idempotents = 0;  // including 0 and 1
  bool indecomposable() const { return idempotents == 2; }
};

/// Exhaustive idempotent count over all 2^dim elements; p = 2 and dim <= 24 only.
IdempotentScan exhaustive_idempotents(const Algebra& a);

}  // namespace qdv::rep
