#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdv/gf/field.hpp"
#include "qdv/gf/matrix.hpp"

namespace qdv::gf {

/// Polynomial over GF(p), coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has an empty coefficient list.
class FpPoly {
 public:
  explicit FpPoly(unsigned p) : p_(p) {}
  FpPoly(unsigned p, std::vector<long long> coeffs_low_first);

  static FpPoly monomial(unsigned p, std::size_t degree, Residue c = 1);
  static FpPoly constant(unsigned p, Residue c);

  unsigned p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Residue coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Residue{0}; }
  Residue leading() const { return c_.empty() ? Residue{0} : c_.back(); }
  const std::vector<Residue>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  FpPoly monic() const;
  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  /// Quotient and remainder; throws on division by zero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly operator%(const FpPoly& d) const { return divmod(d).second; }

  bool operator==(const FpPoly& o) const = default;

  FpMatrix evaluate(const FpMatrix& a) const;
  std::string to_string() const;

 private:
  void trim();

  unsigned p_;
  std::vector<Residue> c_;
};

FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly lcm(const FpPoly& a, const FpPoly& b);

struct ExtendedGcd {
  FpPoly g, s, t;  // g = s*a + t*b, g monic
};
ExtendedGcd extended_gcd(const FpPoly& a, const FpPoly& b);

/// Rabin's test; the zero polynomial and constants are not irreducible.
bool is_irreducible(const FpPoly& f);

}  // namespace qdv::gf
