#ifndef JETMOD_MATRIX_POLYNOMIAL_HPP
#define JETMOD_MATRIX_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "jetmod/index.hpp"
#include "jetmod/matrix.hpp"

namespace jetmod {

/// Polynomial in `variables()` commuting variables whose coefficients are
/// matrices of one fixed shape. Zero coefficients are never stored, and terms
/// iterate in graded-lexicographic order of their exponents.
class MatrixPolynomial {
 public:
  using Terms = std::map<MultiIndex, RationalMatrix>;

  MatrixPolynomial() = default;
  MatrixPolynomial(std::size_t variables, std::size_t rows, std::size_t cols);

  static MatrixPolynomial constant(std::size_t variables, const RationalMatrix& value);

  [[nodiscard]] std::size_t variables() const noexcept { return variables_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds scale * value to the coefficient of s^alpha.
  void add_term(const MultiIndex& alpha, const RationalMatrix& value, const Rational& scale = 1);
  [[nodiscard]] RationalMatrix coefficient(const MultiIndex& alpha) const;

  /// Exact sum_alpha s^alpha coeff(alpha). Throws std::domain_error when the
  /// point has the wrong number of coordinates.
  [[nodiscard]] RationalMatrix evaluate(const LatticeVector& s) const;
  [[nodiscard]] RationalMatrix evaluate(std::span<const Rational> point) const;

  /// Maximal total degree over the support, -1 for the zero polynomial.
  [[nodiscard]] int degree() const;
  /// Maximal degree counting only the listed variables, -1 for zero.
  [[nodiscard]] int degree_in(std::span<const std::size_t> which) const;

  MatrixPolynomial& operator+=(const MatrixPolynomial& rhs);
  MatrixPolynomial& operator-=(const MatrixPolynomial& rhs);
  MatrixPolynomial& operator*=(const Rational& k);
  friend MatrixPolynomial operator+(MatrixPolynomial a, const MatrixPolynomial& b) { return a += b; }
  friend MatrixPolynomial operator-(MatrixPolynomial a, const MatrixPolynomial& b) { return a -= b; }
  friend MatrixPolynomial operator*(const Rational& k, MatrixPolynomial a) { return a *= k; }
  /// Product of polynomials with matrix products of the coefficients.
  friend MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b);

  friend bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b);

  /// Re-indexes variables: variable i of this polynomial becomes variable
  /// placement[i] of a polynomial in `variables` variables.
  [[nodiscard]] MatrixPolynomial embed(std::size_t variables, std::span<const std::size_t> placement) const;

  /// Substitutes s_i -> s_i + offset_i.
  [[nodiscard]] MatrixPolynomial shifted(std::span<const Rational> offset) const;

  /// Substitutes s_i -> factor_i * s_i.
  [[nodiscard]] MatrixPolynomial scaled(std::span<const Rational> factor) const;

  /// Exact quotient by the variable s_i. Throws std::domain_error if some
  /// term is not divisible.
  [[nodiscard]] MatrixPolynomial divided_by_variable(std::size_t i) const;

 private:
  std::size_t variables_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Terms terms_;
};

MatrixPolynomial commutator(const MatrixPolynomial& a, const MatrixPolynomial& b);

/// Degree of a polynomial with the zero-polynomial sentinel -1.
inline int poly_degree(const MatrixPolynomial& p) { return p.degree(); }

/// Evaluation entry point matching the module API.
inline RationalMatrix poly_evaluate(const MatrixPolynomial& p, const LatticeVector& s) { return p.evaluate(s); }

}  // namespace jetmod

#endif  // JETMOD_MATRIX_POLYNOMIAL_HPP
