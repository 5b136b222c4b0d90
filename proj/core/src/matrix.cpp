#include "jetmod/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetmod {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::unit(std::size_t rows, std::size_t cols, std::size_t row, std::size_t col) {
  RationalMatrix m(rows, cols);
  if (row >= rows || col >= cols) throw std::out_of_range("RationalMatrix::unit: index out of range");
  m(row, col) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix::at: index out of range");
  return data_[r * cols_ + c];
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool RationalMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& q = (*this)(r, c);
      if (r == c ? !q.is_one() : !q.is_zero()) return false;
    }
  }
  return true;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) throw std::domain_error("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw std::domain_error("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  }
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw std::domain_error("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  }
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& k) {
  if (k.is_one()) return *this;
  for (auto& q : data_) {
    if (!q.is_zero()) q *= k;
  }
  return *this;
}

RationalMatrix& RationalMatrix::add_scaled(const Rational& k, const RationalMatrix& rhs) {
  if (rhs.rows_ != rows_ || rhs.cols_ != cols_) throw std::domain_error("matrix shape mismatch in add_scaled");
  if (k.is_zero()) return *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!rhs.data_[i].is_zero()) data_[i] += k * rhs.data_[i];
  }
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::domain_error("matrix shapes are not conformable");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix out(*this);
  for (auto& q : out.data_) {
    if (!q.is_zero()) q = -q;
  }
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw std::domain_error("matrix-vector shapes are not conformable");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

std::string RationalMatrix::str() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

// --- EchelonBasis ------------------------------------------------------------

void EchelonBasis::reduce(RationalVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational coeff = v[pivots_[r]];
    if (coeff.is_zero()) continue;
    const RationalVector& row = rows_[r];
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!row[c].is_zero()) v[c] -= coeff * row[c];
    }
  }
}

bool EchelonBasis::insert(RationalVector v) {
  if (v.size() != dim_) throw std::domain_error("EchelonBasis: vector has wrong length");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return !q.is_zero(); });
  if (it == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - v.begin());
  const Rational inv = Rational(1) / v[pivot];
  for (auto& q : v) {
    if (!q.is_zero()) q *= inv;
  }
  // Keep the basis fully reduced so kernel() can read it directly.
  for (auto& row : rows_) {
    const Rational coeff = row[pivot];
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!v[c].is_zero()) row[c] -= coeff * v[c];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(RationalVector v) const {
  if (v.size() != dim_) throw std::domain_error("EchelonBasis: vector has wrong length");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

std::vector<RationalVector> EchelonBasis::kernel() const {
  std::vector<bool> is_pivot(dim_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < dim_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(dim_);
    x[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!rows_[r][free].is_zero()) x[pivots_[r]] = -rows_[r][free];
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<RationalVector> matrix_kernel(const RationalMatrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.data().subspan(r * m.cols(), m.cols());
    basis.insert(RationalVector(row.begin(), row.end()));
  }
  return basis.kernel();
}

std::size_t matrix_rank(const RationalMatrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.data().subspan(r * m.cols(), m.cols());
    basis.insert(RationalVector(row.begin(), row.end()));
  }
  return basis.rank();
}

RationalVector flatten(const RationalMatrix& m) { return RationalVector(m.data().begin(), m.data().end()); }

RationalMatrix unflatten(std::span<const Rational> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::domain_error("unflatten: wrong length");
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  }
  return m;
}

}  // namespace jetmod
