#ifndef JETMOD_MATRIX_HPP
#define JETMOD_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "jetmod/rational.hpp"

namespace jetmod {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q. Products skip zero entries, which keeps the
/// sparse operators that dominate this library cheap.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Matrix with a single 1 at (row, col).
  static RationalMatrix unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col);
  static RationalMatrix diagonal(std::span<const Rational> entries);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const;

  [[nodiscard]] std::span<const Rational> data() const { return data_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] RationalMatrix transpose() const;

  RationalMatrix& operator+=(const RationalMatrix& rhs);
  RationalMatrix& operator-=(const RationalMatrix& rhs);
  RationalMatrix& operator*=(const Rational& k);
  /// this += k * rhs
  RationalMatrix& add_scaled(const Rational& k, const RationalMatrix& rhs);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& k, RationalMatrix a) { return a *= k; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& k) { return a *= k; }
  RationalMatrix operator-() const;

  friend RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// [a, b] = ab - ba
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Kronecker product a (x) b, with index (i, k) -> i * dim(b) + k.
RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// Basis of {v : M v = 0}. The returned vectors are in reduced form: each has
/// a 1 in its own free column and 0 in the other free columns.
std::vector<RationalVector> matrix_kernel(const RationalMatrix& m);

std::size_t matrix_rank(const RationalMatrix& m);

/// Incrementally maintained row-echelon basis of a subspace of Q^dim.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Reduces v against the basis; returns true (and keeps it) if independent.
  bool insert(RationalVector v);
  /// True if v lies in the span.
  [[nodiscard]] bool contains(RationalVector v) const;

  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<RationalVector>& rows() const noexcept { return rows_; }
  /// Basis of the orthogonal-complement kernel {x : r . x = 0 for all rows r}.
  [[nodiscard]] std::vector<RationalVector> kernel() const;

 private:
  void reduce(RationalVector& v) const;

  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

RationalVector flatten(const RationalMatrix& m);
RationalMatrix unflatten(std::span<const Rational> v, std::size_t rows, std::size_t cols);

}  // namespace jetmod

#endif  // JETMOD_MATRIX_HPP
