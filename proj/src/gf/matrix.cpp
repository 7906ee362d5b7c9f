#include "qdv/gf/matrix.hpp"

#include <bit>
#include <string>

namespace qdv::gf {

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p >= 256 || !is_prime(p)) throw std::invalid_argument("FpMatrix: modulus is not a prime below 256");
}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned p, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  FpMatrix m(p, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("FpMatrix::from_rows: ragged rows");
    std::size_t j = 0;
    for (long long v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned p, const std::vector<FpVector>& rows, std::size_t cols) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("FpMatrix::from_rows: row length");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long long v) {
  long long x = v % static_cast<long long>(p_);
  data_[r * cols_ + c] = static_cast<Residue>(x < 0 ? x + p_ : x);
}

FpVector FpMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return FpVector(s.begin(), s.end());
}

FpVector FpMatrix::column_vector(std::size_t c) const {
  FpVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw DimensionMismatch("FpMatrix::operator*: shape mismatch");
  if (p_ == 2) return (Gf2Matrix(*this) * Gf2Matrix(o)).to_fp();
  FpMatrix out(p_, rows_, o.cols_);
  std::vector<unsigned long long> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const Residue a = (*this)(i, k);
      if (a == 0) continue;
      const Residue* orow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += static_cast<unsigned>(a) * orow[j];
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = static_cast<Residue>(acc[j] % p_);
  }
  return out;
}

FpVector FpMatrix::operator*(const FpVector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("FpMatrix::operator*: vector length");
  FpVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    unsigned long long s = 0;
    for (std::size_t k = 0; k < cols_; ++k) s += static_cast<unsigned>((*this)(i, k)) * v[k];
    out[i] = static_cast<Residue>(s % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw DimensionMismatch("FpMatrix::operator+");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = static_cast<Residue>((data_[i] + o.data_[i]) % p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw DimensionMismatch("FpMatrix::operator-");
  FpMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = static_cast<Residue>((data_[i] + p_ - o.data_[i]) % p_);
  return out;
}

FpMatrix FpMatrix::scaled(Residue s) const {
  FpMatrix out(*this);
  for (auto& x : out.data_) x = static_cast<Residue>((unsigned(x) * s) % p_);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

FpMatrix FpMatrix::power(unsigned long long e) const {
  if (!is_square()) throw DimensionMismatch("FpMatrix::power: non-square");
  FpMatrix result = identity(p_, rows_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool FpMatrix::is_zero() const {
  for (Residue x : data_)
    if (x != 0) return false;
  return true;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * ((cols + 63) / 64), 0) {}

Gf2Matrix::Gf2Matrix(const FpMatrix& m) : Gf2Matrix(m.rows(), m.cols()) {
  if (m.p() != 2) throw std::invalid_argument("Gf2Matrix: source matrix is not over GF(2)");
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (m(r, c)) set(r, c, true);
}

std::vector<std::size_t> Gf2Matrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t found = rows_;
    for (std::size_t r = pivot_row; r < rows_; ++r)
      if (bits_[r * words_ + w] & mask) {
        found = r;
        break;
      }
    if (found == rows_) continue;
    if (found != pivot_row)
      for (std::size_t k = 0; k < words_; ++k) std::swap(bits_[found * words_ + k], bits_[pivot_row * words_ + k]);
    const std::uint64_t* prow = bits_.data() + pivot_row * words_;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row) continue;
      std::uint64_t* row = bits_.data() + r * words_;
      if (row[w] & mask)
        for (std::size_t k = w; k < words_; ++k) row[k] ^= prow[k];
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("Gf2Matrix::operator*: shape mismatch");
  Gf2Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t* dst = out.bits_.data() + i * out.words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[i * words_ + w];
      while (word) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        const std::uint64_t* src = o.bits_.data() + k * o.words_;
        for (std::size_t j = 0; j < out.words_; ++j) dst[j] ^= src[j];
      }
    }
  }
  return out;
}

FpMatrix Gf2Matrix::to_fp() const {
  FpMatrix m(2, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) m(r, c) = 1;
  return m;
}

}  // namespace qdv::gf
