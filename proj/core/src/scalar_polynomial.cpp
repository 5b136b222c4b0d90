#include "jetmod/scalar_polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jetmod {

namespace {

// Root candidates are enumerated from divisors of the extreme coefficients;
// beyond this size trial division stops being a sensible exact method.
const mpz_class kDivisorLimit("1000000000000");

std::vector<mpz_class> positive_divisors(mpz_class value) {
  value = abs(value);
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      small.push_back(d);
      if (d * d != value) large.push_back(value / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

ScalarPolynomial::ScalarPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ScalarPolynomial ScalarPolynomial::constant(const Rational& c) { return ScalarPolynomial({c}); }

ScalarPolynomial ScalarPolynomial::linear_factor(const Rational& root) { return ScalarPolynomial({-root, 1}); }

void ScalarPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational ScalarPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational ScalarPolynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational ScalarPolynomial::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RationalMatrix ScalarPolynomial::evaluate(const RationalMatrix& a) const {
  if (!a.is_square()) throw std::domain_error("ScalarPolynomial::evaluate: matrix is not square");
  RationalMatrix acc(a.rows(), a.cols());
  const auto id = RationalMatrix::identity(a.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a;
    acc.add_scaled(*it, id);
  }
  return acc;
}

ScalarPolynomial ScalarPolynomial::monic() const {
  if (is_zero()) return *this;
  ScalarPolynomial out = *this;
  const Rational inv = Rational(1) / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

ScalarPolynomial ScalarPolynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(Rational(static_cast<std::int64_t>(i)) * coeffs_[i]);
  return ScalarPolynomial(std::move(out));
}

ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return ScalarPolynomial(std::move(out));
}

ScalarPolynomial operator-(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return ScalarPolynomial(std::move(out));
}

ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ScalarPolynomial(std::move(out));
}

std::string ScalarPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<ScalarPolynomial, ScalarPolynomial> divmod(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {ScalarPolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv = Rational(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * inv;
    if (q.is_zero()) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(i - db + k)] -= q * b.coefficient(k);
  }
  return {ScalarPolynomial(std::move(quot)), ScalarPolynomial(std::move(rem))};
}

ScalarPolynomial gcd(const ScalarPolynomial& a, const ScalarPolynomial& b) { return extended_gcd(a, b).gcd; }

ExtendedGcd extended_gcd(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  ScalarPolynomial r0 = a, r1 = b;
  ScalarPolynomial x0 = ScalarPolynomial::constant(1), x1;
  ScalarPolynomial y0, y1 = ScalarPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    x0 = std::exchange(x1, x0 - q * x1);
    y0 = std::exchange(y1, y0 - q * y1);
  }
  if (r0.is_zero()) return {};
  const Rational inv = Rational(1) / r0.leading();
  const auto scale = ScalarPolynomial::constant(inv);
  return {r0 * scale, x0 * scale, y0 * scale};
}

std::optional<std::vector<Rational>> rational_roots(const ScalarPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  // Clear denominators to get a primitive integer polynomial.
  mpz_class lcm = 1;
  for (const auto& c : p.coefficients()) {
    mpz_class d = c.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& c : p.coefficients()) ints.push_back(mpz_class(c.to_mpq() * lcm));

  std::set<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (low + 1 < ints.size()) {
    const mpz_class& a0 = ints[low];
    const mpz_class& an = ints.back();
    if (abs(a0) > kDivisorLimit || abs(an) > kDivisorLimit) return std::nullopt;
    for (const auto& num : positive_divisors(a0)) {
      for (const auto& den : positive_divisors(an)) {
        for (int sgn : {1, -1}) {
          mpq_class q(sgn * num, den);
          q.canonicalize();
          Rational candidate(q);
          if (p.evaluate(candidate).is_zero()) roots.insert(candidate);
        }
      }
    }
  }
  return std::vector<Rational>(roots.begin(), roots.end());
}

int root_multiplicity(const ScalarPolynomial& p, const Rational& r) {
  if (p.is_zero()) throw std::domain_error("root_multiplicity of the zero polynomial");
  int k = 0;
  ScalarPolynomial q = p;
  const auto factor = ScalarPolynomial::linear_factor(r);
  while (true) {
    auto [quot, rem] = divmod(q, factor);
    if (!rem.is_zero()) return k;
    q = quot;
    ++k;
  }
}

ScalarPolynomial minimal_polynomial(const RationalMatrix& a) {
  if (!a.is_square()) throw std::domain_error("minimal_polynomial: matrix is not square");
  const std::size_t d = a.rows();
  if (d == 0) return ScalarPolynomial::constant(1);
  // Find the first power A^k that depends linearly on I, A, ..., A^{k-1}.
  std::vector<RationalVector> powers{flatten(RationalMatrix::identity(d))};
  RationalMatrix current = RationalMatrix::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    current = current * a;
    powers.push_back(flatten(current));
    RationalMatrix columns(d * d, powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c) {
      for (std::size_t r = 0; r < d * d; ++r) columns(r, c) = powers[c][r];
    }
    auto kernel = matrix_kernel(columns);
    if (!kernel.empty()) {
      ScalarPolynomial p(kernel.front());
      return p.monic();
    }
  }
  throw std::logic_error("minimal_polynomial: Cayley-Hamilton bound exceeded");
}

}  // namespace jetmod
