#include "jetmod/index.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace jetmod {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxVariables) {
    throw std::domain_error("at most " + std::to_string(kMaxVariables) + " coordinates are supported");
  }
}

std::string bracketed(std::span<const int> entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

}  // namespace

// --- LatticeVector -----------------------------------------------------------

LatticeVector::LatticeVector(std::size_t n) : size_(static_cast<std::uint8_t>(n)) { check_size(n); }

LatticeVector::LatticeVector(std::initializer_list<int> entries)
    : LatticeVector(std::span<const int>(entries.begin(), entries.size())) {}

LatticeVector::LatticeVector(std::span<const int> entries) : LatticeVector(entries.size()) {
  std::copy(entries.begin(), entries.end(), data_.begin());
}

LatticeVector LatticeVector::unit(std::size_t n, std::size_t j, int scale) {
  LatticeVector v(n);
  v.data_.at(j) = scale;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(data_.begin(), data_.begin() + size_, [](int x) { return x == 0; });
}

int LatticeVector::sup_norm() const {
  int out = 0;
  for (std::size_t i = 0; i < size_; ++i) out = std::max(out, std::abs(data_[i]));
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& rhs) {
  if (rhs.size_ != size_) throw std::domain_error("lattice vector dimension mismatch");
  for (std::size_t i = 0; i < size_; ++i) data_[i] += rhs.data_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& rhs) {
  if (rhs.size_ != size_) throw std::domain_error("lattice vector dimension mismatch");
  for (std::size_t i = 0; i < size_; ++i) data_[i] -= rhs.data_[i];
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out(*this);
  for (std::size_t i = 0; i < size_; ++i) out.data_[i] = -out.data_[i];
  return out;
}

LatticeVector operator*(int k, LatticeVector v) {
  for (std::size_t i = 0; i < v.size_; ++i) v.data_[i] *= k;
  return v;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  return a.size_ == b.size_ && std::equal(a.data_.begin(), a.data_.begin() + a.size_, b.data_.begin());
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.data_[i] != b.data_[i]) return a.data_[i] <=> b.data_[i];
  }
  return std::strong_ordering::equal;
}

std::string LatticeVector::str() const { return bracketed(entries()); }

// --- MultiIndex --------------------------------------------------------------

MultiIndex::MultiIndex(std::size_t n) : size_(static_cast<std::uint8_t>(n)) { check_size(n); }

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::span<const int>(entries.begin(), entries.size())) {}

MultiIndex::MultiIndex(std::span<const int> entries) : MultiIndex(entries.size()) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) throw std::domain_error("multi-index entries must be non-negative");
    data_[i] = entries[i];
  }
}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t j) {
  MultiIndex v(n);
  v.data_.at(j) = 1;
  return v;
}

int MultiIndex::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += data_[i];
  return d;
}

Rational MultiIndex::factorial() const {
  Rational out = 1;
  for (std::size_t i = 0; i < size_; ++i) {
    for (int k = 2; k <= data_[i]; ++k) out *= k;
  }
  return out;
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (other.size_ != size_) throw std::domain_error("multi-index dimension mismatch");
  for (std::size_t i = 0; i < size_; ++i) {
    if (data_[i] > other.data_[i]) return false;
  }
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size_ != b.size_) throw std::domain_error("multi-index dimension mismatch");
  MultiIndex out(a);
  for (std::size_t i = 0; i < a.size_; ++i) out.data_[i] += b.data_[i];
  return out;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (!b.leq(a)) throw std::domain_error("multi-index difference " + a.str() + " - " + b.str() + " is not in Z_+^n");
  MultiIndex out(a);
  for (std::size_t i = 0; i < a.size_; ++i) out.data_[i] -= b.data_[i];
  return out;
}

MultiIndex MultiIndex::lowered(std::size_t j) const {
  if (!can_lower(j)) throw std::domain_error("cannot lower " + str() + " along coordinate " + std::to_string(j));
  MultiIndex out(*this);
  --out.data_[j];
  return out;
}

MultiIndex MultiIndex::raised(std::size_t j) const {
  MultiIndex out(*this);
  ++out.data_.at(j);
  return out;
}

LatticeVector MultiIndex::as_lattice() const { return LatticeVector(entries()); }

bool operator==(const MultiIndex& a, const MultiIndex& b) {
  return a.size_ == b.size_ && std::equal(a.data_.begin(), a.data_.begin() + a.size_, b.data_.begin());
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.data_[i] != b.data_[i]) return b.data_[i] <=> a.data_[i];
  }
  return std::strong_ordering::equal;
}

std::string MultiIndex::str() const { return bracketed(entries()); }

// --- free functions ----------------------------------------------------------

Rational binomial(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") undefined");
  k = std::min(k, n - k);
  Rational out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

Rational multiindex_binomial(const MultiIndex& alpha, const MultiIndex& beta) {
  if (!beta.leq(alpha)) {
    throw std::domain_error("multiindex_binomial: " + beta.str() + " is not <= " + alpha.str());
  }
  Rational out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) out *= binomial(alpha[i], beta[i]);
  return out;
}

std::vector<MultiIndex> multiindices_of_degree(std::size_t n, int degree) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> current(n, 0);
  // Fill coordinates left to right, largest leading entry first.
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == n) {
      current[pos] = remaining;
      out.emplace_back(std::span<const int>(current));
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, degree);
  return out;
}

std::vector<MultiIndex> enumerate_multiindices(std::size_t n, int max_degree) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto level = multiindices_of_degree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Rational monomial_value(const MultiIndex& alpha, const LatticeVector& s) {
  if (alpha.size() != s.size()) throw std::domain_error("monomial_value: dimension mismatch");
  Rational out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int k = 0; k < alpha[i]; ++k) out *= s[i];
  }
  return out;
}

Rational monomial_value(const MultiIndex& alpha, std::span<const Rational> point) {
  if (alpha.size() != point.size()) throw std::domain_error("monomial_value: dimension mismatch");
  Rational out = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (int k = 0; k < alpha[i]; ++k) out *= point[i];
  }
  return out;
}

std::vector<LatticeVector> lattice_box(std::size_t n, int radius) {
  std::vector<LatticeVector> out;
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = -radius;
  if (n == 0) {
    out.push_back(v);
    return out;
  }
  while (true) {
    out.push_back(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] < radius) {
        ++v[i];
        for (std::size_t k = i + 1; k < n; ++k) v[k] = -radius;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace jetmod
