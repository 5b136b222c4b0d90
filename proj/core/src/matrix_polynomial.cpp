#include "jetmod/matrix_polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetmod {

namespace {

void require_same_shape(const MatrixPolynomial& a, const MatrixPolynomial& b, const char* what) {
  if (a.variables() != b.variables() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::domain_error(std::string("MatrixPolynomial shape mismatch in ") + what);
  }
}

// (s + c)^k expanded as sum_i C(k, i) c^(k-i) s^i.
std::vector<Rational> binomial_expansion(int k, const Rational& c) {
  std::vector<Rational> out(static_cast<std::size_t>(k) + 1);
  Rational cpow = 1;
  for (int i = k; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = binomial(k, i) * cpow;
    cpow *= c;
  }
  return out;
}

}  // namespace

MatrixPolynomial::MatrixPolynomial(std::size_t variables, std::size_t rows, std::size_t cols)
    : variables_(variables), rows_(rows), cols_(cols) {
  if (variables > kMaxVariables) throw std::domain_error("MatrixPolynomial: too many variables");
}

MatrixPolynomial MatrixPolynomial::constant(std::size_t variables, const RationalMatrix& value) {
  MatrixPolynomial p(variables, value.rows(), value.cols());
  p.add_term(MultiIndex(variables), value);
  return p;
}

void MatrixPolynomial::add_term(const MultiIndex& alpha, const RationalMatrix& value, const Rational& scale) {
  if (alpha.size() != variables_) throw std::domain_error("MatrixPolynomial: exponent has wrong length");
  if (value.rows() != rows_ || value.cols() != cols_) throw std::domain_error("MatrixPolynomial: coefficient shape mismatch");
  if (scale.is_zero() || value.is_zero()) return;
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    terms_.emplace(alpha, scale * value);
    return;
  }
  it->second.add_scaled(scale, value);
  if (it->second.is_zero()) terms_.erase(it);
}

RationalMatrix MatrixPolynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RationalMatrix(rows_, cols_) : it->second;
}

RationalMatrix MatrixPolynomial::evaluate(const LatticeVector& s) const {
  if (s.size() != variables_) {
    throw std::domain_error("poly_evaluate: point " + s.str() + " does not have " + std::to_string(variables_) + " coordinates");
  }
  RationalMatrix out(rows_, cols_);
  for (const auto& [alpha, coeff] : terms_) out.add_scaled(monomial_value(alpha, s), coeff);
  return out;
}

RationalMatrix MatrixPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_) throw std::domain_error("poly_evaluate: point has wrong number of coordinates");
  RationalMatrix out(rows_, cols_);
  for (const auto& [alpha, coeff] : terms_) out.add_scaled(monomial_value(alpha, point), coeff);
  return out;
}

int MatrixPolynomial::degree() const {
  int d = -1;
  for (const auto& [alpha, coeff] : terms_) d = std::max(d, alpha.degree());
  return d;
}

int MatrixPolynomial::degree_in(std::span<const std::size_t> which) const {
  int d = -1;
  for (const auto& [alpha, coeff] : terms_) {
    int partial = 0;
    for (auto i : which) partial += alpha[i];
    d = std::max(d, partial);
  }
  return d;
}

MatrixPolynomial& MatrixPolynomial::operator+=(const MatrixPolynomial& rhs) {
  require_same_shape(*this, rhs, "+");
  for (const auto& [alpha, coeff] : rhs.terms_) add_term(alpha, coeff);
  return *this;
}

MatrixPolynomial& MatrixPolynomial::operator-=(const MatrixPolynomial& rhs) {
  require_same_shape(*this, rhs, "-");
  for (const auto& [alpha, coeff] : rhs.terms_) add_term(alpha, coeff, -1);
  return *this;
}

MatrixPolynomial& MatrixPolynomial::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= k;
  return *this;
}

MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (a.variables_ != b.variables_) throw std::domain_error("MatrixPolynomial product: variable count mismatch");
  if (a.cols_ != b.rows_) throw std::domain_error("MatrixPolynomial product: shapes not conformable");
  MatrixPolynomial out(a.variables_, a.rows_, b.cols_);
  for (const auto& [alpha, x] : a.terms_) {
    for (const auto& [beta, y] : b.terms_) out.add_term(alpha + beta, x * y);
  }
  return out;
}

bool operator==(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  return a.variables_ == b.variables_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.terms_ == b.terms_;
}

MatrixPolynomial MatrixPolynomial::embed(std::size_t variables, std::span<const std::size_t> placement) const {
  if (placement.size() != variables_) throw std::domain_error("embed: placement has wrong length");
  MatrixPolynomial out(variables, rows_, cols_);
  for (const auto& [alpha, coeff] : terms_) {
    std::vector<int> e(variables, 0);
    for (std::size_t i = 0; i < variables_; ++i) {
      if (placement[i] >= variables) throw std::domain_error("embed: target variable out of range");
      e[placement[i]] += alpha[i];
    }
    out.add_term(MultiIndex(std::span<const int>(e)), coeff);
  }
  return out;
}

MatrixPolynomial MatrixPolynomial::shifted(std::span<const Rational> offset) const {
  if (offset.size() != variables_) throw std::domain_error("shifted: offset has wrong length");
  MatrixPolynomial out(variables_, rows_, cols_);
  for (const auto& [alpha, coeff] : terms_) {
    // Expand prod_i (s_i + c_i)^{alpha_i} term by term.
    std::vector<std::vector<Rational>> factors;
    factors.reserve(variables_);
    for (std::size_t i = 0; i < variables_; ++i) factors.push_back(binomial_expansion(alpha[i], offset[i]));
    for (const auto& gamma : enumerate_multiindices(variables_, alpha.degree())) {
      if (!gamma.leq(alpha)) continue;
      Rational scale = 1;
      for (std::size_t i = 0; i < variables_; ++i) scale *= factors[i][static_cast<std::size_t>(gamma[i])];
      out.add_term(gamma, coeff, scale);
    }
  }
  return out;
}

MatrixPolynomial MatrixPolynomial::scaled(std::span<const Rational> factor) const {
  if (factor.size() != variables_) throw std::domain_error("scaled: factor has wrong length");
  MatrixPolynomial out(variables_, rows_, cols_);
  for (const auto& [alpha, coeff] : terms_) out.add_term(alpha, coeff, monomial_value(alpha, factor));
  return out;
}

MatrixPolynomial MatrixPolynomial::divided_by_variable(std::size_t i) const {
  if (i >= variables_) throw std::domain_error("divided_by_variable: variable out of range");
  MatrixPolynomial out(variables_, rows_, cols_);
  for (const auto& [alpha, coeff] : terms_) {
    if (!alpha.can_lower(i)) {
      throw std::domain_error("divided_by_variable: term " + alpha.str() + " is not divisible by s_" + std::to_string(i));
    }
    out.add_term(alpha.lowered(i), coeff);
  }
  return out;
}

MatrixPolynomial commutator(const MatrixPolynomial& a, const MatrixPolynomial& b) { return a * b - b * a; }

}  // namespace jetmod
