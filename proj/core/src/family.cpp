#include "jetmod/family.hpp"

#include <stdexcept>

namespace jetmod {

OperatorFamilyWindow::OperatorFamilyWindow(std::size_t variables, std::size_t dim) : variables_(variables), dim_(dim) {}

OperatorFamilyWindow OperatorFamilyWindow::sample(const MatrixPolynomial& p, const std::vector<LatticeVector>& points) {
  if (p.rows() != p.cols()) throw std::domain_error("operator family needs square values");
  OperatorFamilyWindow f(p.variables(), p.rows());
  for (const auto& s : points) f.insert(s, p.evaluate(s));
  return f;
}

OperatorFamilyWindow OperatorFamilyWindow::sample_interval(const MatrixPolynomial& p, int lo, int hi) {
  std::vector<LatticeVector> points;
  for (int s = lo; s <= hi; ++s) points.push_back(LatticeVector{s});
  return sample(p, points);
}

void OperatorFamilyWindow::insert(const LatticeVector& s, RationalMatrix value) {
  if (s.size() != variables_) throw std::domain_error("sample point " + s.str() + " has the wrong number of coordinates");
  if (value.rows() != dim_ || value.cols() != dim_) throw std::domain_error("sample at " + s.str() + " has the wrong shape");
  samples_.insert_or_assign(s, std::move(value));
}

const RationalMatrix& OperatorFamilyWindow::at(const LatticeVector& s) const {
  auto it = samples_.find(s);
  if (it == samples_.end()) throw std::domain_error("no sample at " + s.str());
  return it->second;
}

std::pair<int, int> OperatorFamilyWindow::interval_around(int anchor) const {
  if (variables_ != 1) throw std::domain_error("interval_around needs a one-variable family");
  if (!contains(anchor)) return {anchor, anchor - 1};
  int lo = anchor, hi = anchor;
  while (contains(lo - 1)) --lo;
  while (contains(hi + 1)) ++hi;
  return {lo, hi};
}

}  // namespace jetmod
