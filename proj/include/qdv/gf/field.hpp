#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdv::gf {

/// Residue type used for every GF(p) entry. All supported primes are < 256.
using Residue = std::uint8_t;

bool is_prime(unsigned n);

/// Arithmetic in the prime field GF(p), 2 <= p < 256.
class PrimeField {
 public:
  explicit PrimeField(unsigned p);

  unsigned p() const { return p_; }

  Residue reduce(long long x) const {
    long long r = x % static_cast<long long>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    unsigned s = unsigned(a) + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue a, Residue b) const {
    return static_cast<Residue>(a >= b ? a - b : a + p_ - b);
  }
  Residue neg(Residue a) const { return static_cast<Residue>(a == 0 ? 0 : p_ - a); }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((unsigned(a) * b) % p_);
  }
  /// Throws std::domain_error on zero.
  Residue inv(Residue a) const;

 private:
  unsigned p_;
  std::vector<Residue> inverse_;
};

/// A single field element carrying its modulus.
class FpScalar {
 public:
  FpScalar(long long value, unsigned p);

  Residue value() const { return value_; }
  unsigned modulus() const { return p_; }

  FpScalar operator+(const FpScalar& o) const;
  FpScalar operator-(const FpScalar& o) const;
  FpScalar operator*(const FpScalar& o) const;
  FpScalar operator-() const;
  FpScalar inverse() const;

  bool operator==(const FpScalar& o) const = default;

 private:
  void same_field(const FpScalar& o) const;

  Residue value_;
  unsigned p_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qdv::gf
