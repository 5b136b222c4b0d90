#ifndef JETMOD_FAMILY_HPP
#define JETMOD_FAMILY_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "jetmod/index.hpp"
#include "jetmod/matrix.hpp"
#include "jetmod/matrix_polynomial.hpp"

namespace jetmod {

/// Operator family s -> D(s) sampled on a finite set of lattice points.
class OperatorFamilyWindow {
 public:
  using Samples = std::map<LatticeVector, RationalMatrix>;

  OperatorFamilyWindow() = default;
  OperatorFamilyWindow(std::size_t variables, std::size_t dim);

  /// Samples p on every point of `points`.
  static OperatorFamilyWindow sample(const MatrixPolynomial& p, const std::vector<LatticeVector>& points);
  /// Samples p on the integer interval [lo, hi] (one variable).
  static OperatorFamilyWindow sample_interval(const MatrixPolynomial& p, int lo, int hi);

  [[nodiscard]] std::size_t variables() const noexcept { return variables_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const Samples& samples() const noexcept { return samples_; }
  [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }

  void insert(const LatticeVector& s, RationalMatrix value);
  [[nodiscard]] bool contains(const LatticeVector& s) const { return samples_.contains(s); }
  [[nodiscard]] bool contains(int s) const { return contains(LatticeVector{s}); }
  /// Throws std::domain_error naming the point if it was not sampled.
  [[nodiscard]] const RationalMatrix& at(const LatticeVector& s) const;
  [[nodiscard]] const RationalMatrix& at(int s) const { return at(LatticeVector{s}); }

  /// For one-variable families: the largest interval [lo, hi] around `anchor`
  /// that is sampled at every integer; {anchor, anchor - 1} if anchor is missing.
  [[nodiscard]] std::pair<int, int> interval_around(int anchor) const;

  friend bool operator==(const OperatorFamilyWindow&, const OperatorFamilyWindow&) = default;

 private:
  std::size_t variables_ = 0;
  std::size_t dim_ = 0;
  Samples samples_;
};

}  // namespace jetmod

#endif  // JETMOD_FAMILY_HPP
