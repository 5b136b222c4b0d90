#ifndef JETMOD_SCALAR_POLYNOMIAL_HPP
#define JETMOD_SCALAR_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetmod/matrix.hpp"

namespace jetmod {

/// Univariate polynomial over Q, coefficients stored lowest degree first with
/// no trailing zeros.
class ScalarPolynomial {
 public:
  ScalarPolynomial() = default;
  explicit ScalarPolynomial(std::vector<Rational> coefficients);

  static ScalarPolynomial constant(const Rational& c);
  /// t - root
  static ScalarPolynomial linear_factor(const Rational& root);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coefficient(int i) const;
  [[nodiscard]] Rational leading() const;

  [[nodiscard]] Rational evaluate(const Rational& t) const;
  [[nodiscard]] RationalMatrix evaluate(const RationalMatrix& a) const;

  [[nodiscard]] ScalarPolynomial monic() const;
  [[nodiscard]] ScalarPolynomial derivative() const;

  friend ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend ScalarPolynomial operator-(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend bool operator==(const ScalarPolynomial& a, const ScalarPolynomial& b) = default;

  [[nodiscard]] std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// (quotient, remainder); throws std::domain_error on division by zero.
std::pair<ScalarPolynomial, ScalarPolynomial> divmod(const ScalarPolynomial& a, const ScalarPolynomial& b);

/// Monic greatest common divisor.
ScalarPolynomial gcd(const ScalarPolynomial& a, const ScalarPolynomial& b);

/// Returns (g, x, y) with x a + y b = g = gcd(a, b) monic.
struct ExtendedGcd {
  ScalarPolynomial gcd;
  ScalarPolynomial x;
  ScalarPolynomial y;
};
ExtendedGcd extended_gcd(const ScalarPolynomial& a, const ScalarPolynomial& b);

/// Distinct rational roots in increasing order, or nothing when the integer
/// coefficients are too large to enumerate root candidates exactly.
std::optional<std::vector<Rational>> rational_roots(const ScalarPolynomial& p);

/// Multiplicity of root r in p.
int root_multiplicity(const ScalarPolynomial& p, const Rational& r);

/// Monic minimal polynomial of a square matrix.
ScalarPolynomial minimal_polynomial(const RationalMatrix& a);

}  // namespace jetmod

#endif  // JETMOD_SCALAR_POLYNOMIAL_HPP
