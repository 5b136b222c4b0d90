#ifndef JETMOD_INDEX_HPP
#define JETMOD_INDEX_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "jetmod/rational.hpp"

namespace jetmod {

/// Upper bound on the number of coordinates carried by a lattice vector or
/// multi-index. Structure polynomials use 2n variables, so n <= 6.
inline constexpr std::size_t kMaxVariables = 12;

/// Fourier degree s or m in Z^n.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n);
  LatticeVector(std::initializer_list<int> entries);
  explicit LatticeVector(std::span<const int> entries);

  static LatticeVector zero(std::size_t n) { return LatticeVector(n); }
  static LatticeVector unit(std::size_t n, std::size_t j, int scale = 1);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  int operator[](std::size_t i) const { return data_[i]; }
  int& operator[](std::size_t i) { return data_[i]; }
  [[nodiscard]] std::span<const int> entries() const { return {data_.data(), size_}; }

  [[nodiscard]] bool is_zero() const;
  /// max_i |s_i|
  [[nodiscard]] int sup_norm() const;

  LatticeVector& operator+=(const LatticeVector& rhs);
  LatticeVector& operator-=(const LatticeVector& rhs);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  LatticeVector operator-() const;
  friend LatticeVector operator*(int k, LatticeVector v);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

  [[nodiscard]] std::string str() const;

 private:
  std::array<int, kMaxVariables> data_{};
  std::uint8_t size_ = 0;
};

/// Exponent vector alpha in Z_+^n. Ordered graded-lexicographically: lower
/// total degree first, then larger leading entries first, so for n = 2 the
/// degree-one indices come as (1,0), (0,1).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n);
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::span<const int> entries);

  static MultiIndex zero(std::size_t n) { return MultiIndex(n); }
  /// epsilon_j
  static MultiIndex unit(std::size_t n, std::size_t j);

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  int operator[](std::size_t i) const { return data_[i]; }
  [[nodiscard]] std::span<const int> entries() const { return {data_.data(), size_}; }

  /// |alpha|
  [[nodiscard]] int degree() const;
  [[nodiscard]] bool is_zero() const { return degree() == 0; }
  /// alpha!
  [[nodiscard]] Rational factorial() const;
  /// alpha <= other componentwise
  [[nodiscard]] bool leq(const MultiIndex& other) const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  /// alpha - beta; throws std::domain_error if some entry would be negative.
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  [[nodiscard]] bool can_lower(std::size_t j) const { return data_[j] > 0; }
  /// alpha - epsilon_j; requires can_lower(j).
  [[nodiscard]] MultiIndex lowered(std::size_t j) const;
  [[nodiscard]] MultiIndex raised(std::size_t j) const;

  [[nodiscard]] LatticeVector as_lattice() const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b);
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

  [[nodiscard]] std::string str() const;

 private:
  std::array<int, kMaxVariables> data_{};
  std::uint8_t size_ = 0;
};

/// binom(alpha, beta) = prod_i binom(alpha_i, beta_i); requires beta <= alpha.
Rational multiindex_binomial(const MultiIndex& alpha, const MultiIndex& beta);

/// Scalar binomial coefficient C(n, k) for 0 <= k <= n.
Rational binomial(int n, int k);

/// All alpha in Z_+^n with |alpha| <= max_degree, graded-lexicographic order.
std::vector<MultiIndex> enumerate_multiindices(std::size_t n, int max_degree);

/// All alpha with |alpha| == degree, in the same order.
std::vector<MultiIndex> multiindices_of_degree(std::size_t n, int degree);

/// s^alpha for an integer point s.
Rational monomial_value(const MultiIndex& alpha, const LatticeVector& s);
Rational monomial_value(const MultiIndex& alpha, std::span<const Rational> point);

/// Every lattice point with |s|_inf <= radius, in lexicographic order.
std::vector<LatticeVector> lattice_box(std::size_t n, int radius);

}  // namespace jetmod

#endif  // JETMOD_INDEX_HPP
