#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "qdv/gf/field.hpp"

namespace qdv::gf {

using FpVector = std::vector<Residue>;

/// Dense row-major matrix over GF(p). Entries are always reduced.
class FpMatrix {
 public:
  FpMatrix() : FpMatrix(2, 0, 0) {}
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(unsigned p, std::size_t n);
  /// Entries are reduced mod p; every row must have the same length.
  static FpMatrix from_rows(unsigned p, std::initializer_list<std::initializer_list<long long>> rows);
  static FpMatrix from_rows(unsigned p, const std::vector<FpVector>& rows, std::size_t cols);

  unsigned p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v);

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  FpVector row_vector(std::size_t r) const;
  FpVector column_vector(std::size_t c) const;

  FpMatrix operator*(const FpMatrix& o) const;
  FpVector operator*(const FpVector& v) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix scaled(Residue s) const;
  FpMatrix transpose() const;
  FpMatrix power(unsigned long long e) const;

  bool is_zero() const;
  bool operator==(const FpMatrix& o) const = default;

  const std::vector<Residue>& data() const { return data_; }

 private:
  unsigned p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// GF(2) matrix with rows packed into 64-bit words; elimination XORs whole words.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);
  explicit Gf2Matrix(const FpMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

  std::span<std::uint64_t> row_words(std::size_t r) { return {bits_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row_words(std::size_t r) const { return {bits_.data() + r * words_, words_}; }

  /// In-place reduced row-echelon form; returns pivot columns in order.
  std::vector<std::size_t> rref_in_place();

  Gf2Matrix operator*(const Gf2Matrix& o) const;
  FpMatrix to_fp() const;

  bool operator==(const Gf2Matrix& o) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace qdv::gf
