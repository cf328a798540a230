#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hecke/fp.hpp"

namespace hecke {

using FpVector = std::vector<std::uint32_t>;

/// Dense row-major matrix over F_p.
///
/// Vectors are rows and matrices act on the right (v -> v * A), matching the
/// right-module convention used for every Hecke module in this library.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  static FpMatrix zero(std::size_t rows, std::size_t cols, std::uint32_t p) { return {rows, cols, p}; }

  static FpMatrix identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
  }

  static FpMatrix scalar(std::size_t n, std::int64_t c, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
    return m;
  }

  /// Builds from nested rows; entries are reduced mod p.
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    FpMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw dimension_error("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  static FpMatrix from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(p, v);
  }

  /// One-row matrix holding `v`.
  static FpMatrix row_vector(const FpVector& v, std::uint32_t p) {
    FpMatrix m(1, v.size(), p);
    for (std::size_t j = 0; j < v.size(); ++j) m.set(0, j, v[j]);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] std::uint32_t modulus() const { return p_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  [[nodiscard]] std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t value) { data_[i * cols_ + j] = reduce(value, p_); }

  [[nodiscard]] std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] FpVector row_copy(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  [[nodiscard]] std::span<const std::uint32_t> entries() const { return data_; }

  [[nodiscard]] bool is_zero() const {
    for (auto x : data_) {
      if (x != 0) return false;
    }
    return true;
  }

  [[nodiscard]] FpMatrix transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
  }

  [[nodiscard]] FpMatrix pow(std::uint64_t k) const {
    require_square("pow");
    FpMatrix result = identity(rows_, p_);
    FpMatrix base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      base = base * base;
      k >>= 1U;
    }
    return result;
  }

  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  [[nodiscard]] FpMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw dimension_error("block out of range");
    FpMatrix b(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const FpMatrix& b) {
    check_modulus(b);
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw dimension_error("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = b.data_[i * b.cols_ + j];
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  FpMatrix& operator+=(const FpMatrix& o) { return combine(o, 1); }
  FpMatrix& operator-=(const FpMatrix& o) { return combine(o, -1); }

  friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
  friend FpMatrix operator-(FpMatrix a, const FpMatrix& b) { return a -= b; }

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    a.check_modulus(b);
    if (a.cols_ != b.rows_) {
      throw dimension_error("cannot multiply " + a.shape() + " by " + b.shape());
    }
    FpMatrix c(a.rows_, b.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a.data_[i * a.cols_ + k];
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          auto& cij = c.data_[i * c.cols_ + j];
          cij = static_cast<std::uint32_t>((cij + aik * b.data_[k * b.cols_ + j]) % a.p_);
        }
      }
    }
    return c;
  }

  friend FpMatrix operator*(std::int64_t s, FpMatrix m) {
    const auto c = reduce(s, m.p_);
    for (auto& x : m.data_) x = mul_mod(x, c, m.p_);
    return m;
  }

  [[nodiscard]] std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  void check_modulus(const FpMatrix& o) const {
    if (p_ != o.p_) {
      throw modulus_error("modulus mismatch: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
    }
  }

  void require_square(const char* what) const {
    if (!is_square()) throw dimension_error(std::string(what) + " needs a square matrix, got " + shape());
  }

 private:
  FpMatrix& combine(const FpMatrix& o, int sign) {
    check_modulus(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("shape mismatch " + shape() + " vs " + o.shape());
    for (std::size_t i = 0; i < data_.size(); ++i) {
      data_[i] = reduce(static_cast<std::int64_t>(data_[i]) + sign * static_cast<std::int64_t>(o.data_[i]), p_);
    }
    return *this;
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 5;
  std::vector<std::uint32_t> data_;
};

/// Block-diagonal matrix diag(a, b).
inline FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b) {
  a.check_modulus(b);
  FpMatrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

/// Stacks the rows of `top` above the rows of `bottom`.
inline FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom) {
  top.check_modulus(bottom);
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw dimension_error("vstack column mismatch");
  FpMatrix m(top.rows() + bottom.rows(), top.cols(), top.modulus());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

}  // namespace hecke
