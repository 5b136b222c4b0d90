#ifndef JETMOD_RATIONAL_HPP
#define JETMOD_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace jetmod {

__extension__ typedef __int128 wide_int;

/// Exact rational number, always kept in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 62 bits are stored inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational and demoted again once it fits. The two storage modes are invisible
/// to callers.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    *this = from_wide(static_cast<wide_int>(value), 1);
  }
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
  /// and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;
  [[nodiscard]] double to_double() const;

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;

  /// True when the value is held in the inline 64-bit representation.
  [[nodiscard]] bool is_small() const noexcept { return !big_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(wide_int numerator, wide_int denominator);
  void assign_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace jetmod

#endif  // JETMOD_RATIONAL_HPP
