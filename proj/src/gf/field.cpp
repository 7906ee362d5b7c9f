#include "qdv/gf/field.hpp"

namespace qdv::gf {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(unsigned p) : p_(p), inverse_(p, 0) {
  if (p >= 256 || !is_prime(p))
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " is not a prime below 256");
  for (unsigned a = 1; a < p; ++a)
    for (unsigned b = 1; b < p; ++b)
      if ((a * b) % p == 1) {
        inverse_[a] = static_cast<Residue>(b);
        break;
      }
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
  return inverse_[a % p_];
}

FpScalar::FpScalar(long long value, unsigned p) : value_(0), p_(p) {
  if (p >= 256 || !is_prime(p))
    throw std::invalid_argument("FpScalar: modulus is not a prime below 256");
  long long r = value % static_cast<long long>(p);
  value_ = static_cast<Residue>(r < 0 ? r + p : r);
}

void FpScalar::same_field(const FpScalar& o) const {
  if (o.p_ != p_) throw std::invalid_argument("FpScalar: mixed moduli");
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
  same_field(o);
  return FpScalar(static_cast<long long>(value_) + o.value_, p_);
}
FpScalar FpScalar::operator-(const FpScalar& o) const {
  same_field(o);
  return FpScalar(static_cast<long long>(value_) - o.value_, p_);
}
FpScalar FpScalar::operator*(const FpScalar& o) const {
  same_field(o);
  return FpScalar(static_cast<long long>(value_) * o.value_, p_);
}
FpScalar FpScalar::operator-() const { return FpScalar(-static_cast<long long>(value_), p_); }

FpScalar FpScalar::inverse() const {
  if (value_ == 0) throw std::domain_error("FpScalar: zero has no inverse");
  long long result = 1, base = value_, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return FpScalar(result, p_);
}

}  // namespace qdv::gf
