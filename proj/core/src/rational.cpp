#include "jetmod/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace jetmod {

namespace {

using i128 = wide_int;
__extension__ typedef unsigned __int128 u128;

constexpr std::int64_t kSmallLimit = (std::int64_t{1} << 62) - 1;

bool fits_small(i128 v) { return v >= -kSmallLimit && v <= kSmallLimit; }

u128 abs_wide(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd_wide(u128 a, u128 b) {
  // Euclid on 64-bit halves when possible; 128-bit modulo is comparatively slow.
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      auto x = static_cast<std::uint64_t>(a);
      auto y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        auto t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_wide(i128 v) {
  const bool negative = v < 0;
  u128 mag = abs_wide(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  *this = from_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) {
  mpq_class v(value);
  v.canonicalize();
  assign_big(std::move(v));
}

Rational Rational::from_wide(i128 numerator, i128 denominator) {
  Rational out;
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) {
    return out;
  }
  if (denominator != 1) {
    u128 g = gcd_wide(abs_wide(numerator), static_cast<u128>(denominator));
    if (g != 1) {
      numerator /= static_cast<i128>(g);
      denominator /= static_cast<i128>(g);
    }
  }
  if (fits_small(numerator) && fits_small(denominator)) {
    out.num_ = static_cast<std::int64_t>(numerator);
    out.den_ = static_cast<std::int64_t>(denominator);
    return out;
  }
  mpq_class big(mpz_from_wide(numerator), mpz_from_wide(denominator));
  big.canonicalize();
  out.big_ = std::make_shared<const mpq_class>(std::move(big));
  return out;
}

void Rational::assign_big(mpq_class value) {
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 62) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num_text = trim(text.substr(0, slash));
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_integer(num_text) || !valid_integer(den_text)) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) { return (!s.empty() && s.front() == '+') ? s.substr(1) : s; };
  mpz_class n(std::string(strip_plus(num_text)));
  mpz_class d(std::string(strip_plus(den_text)));
  if (d == 0) {
    throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  Rational out;
  out.assign_big(std::move(q));
  return out;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      i128 sum = static_cast<i128>(num_) + rhs.num_;
      if (fits_small(sum)) {
        num_ = static_cast<std::int64_t>(sum);
        return *this;
      }
      return *this = from_wide(sum, 1);
    }
    const auto g = static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(rhs.den_)));
    const std::int64_t lhs_scale = rhs.den_ / g;
    const std::int64_t rhs_scale = den_ / g;
    i128 n = static_cast<i128>(num_) * lhs_scale + static_cast<i128>(rhs.num_) * rhs_scale;
    i128 d = static_cast<i128>(den_) * lhs_scale;
    return *this = from_wide(n, d);
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Rational();
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      i128 prod = static_cast<i128>(num_) * rhs.num_;
      if (fits_small(prod)) {
        num_ = static_cast<std::int64_t>(prod);
        return *this;
      }
      return *this = from_wide(prod, 1);
    }
    // Cross-cancel so the result is already reduced.
    auto g1 = static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_), static_cast<std::uint64_t>(rhs.den_)));
    auto g2 = static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(rhs.num_ < 0 ? -rhs.num_ : rhs.num_), static_cast<std::uint64_t>(den_)));
    i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    if (fits_small(n) && fits_small(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    return *this = from_wide(n, d);
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  if (!rhs.big_) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (big_) {
    out.assign_big(-*big_);
  } else {
    out.num_ = -num_;
  }
  return out;
}

bool operator==(const Rational& a, const Rational& b) {
  // Both sides are canonical, and big values never fit the small range.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace jetmod
