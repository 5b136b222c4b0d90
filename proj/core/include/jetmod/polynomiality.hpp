#ifndef JETMOD_POLYNOMIALITY_HPP
#define JETMOD_POLYNOMIALITY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jetmod/category_j.hpp"
#include "jetmod/family.hpp"
#include "jetmod/matrix_polynomial.hpp"
#include "jetmod/report.hpp"

namespace jetmod {

/// sum_k (-1)^{m-k} C(m, k) f(s + k). Throws std::domain_error when a point
/// s..s+m is missing.
RationalMatrix difference_derivative(const OperatorFamilyWindow& f, int order, int s);

/// The polynomial of degree <= samples.size() - 1 through
/// (start + i, samples[i]), in Newton form expanded to monomials.
MatrixPolynomial newton_interpolation(const std::vector<RationalMatrix>& samples, int start);

/// Tensor-grid interpolation of an n-variable family on [lo, hi]^n (degree
/// <= hi - lo in each variable). Throws std::domain_error if a grid point is
/// missing.
MatrixPolynomial grid_interpolation(const OperatorFamilyWindow& f, int lo, int hi);

/// Samples of f that p does not reproduce.
Report residual_check(const OperatorFamilyWindow& f, const MatrixPolynomial& p, std::string name = "residual");

/// On the sampled interval [s, hi]: f agrees with the degree-N interpolation
/// g through s..s+N exactly when every available difference derivative of
/// order > N vanishes at s. N = -1 is the vanishing statement (g = 0). The
/// report fails on every point where f and g differ.
Report lemma3_check(const OperatorFamilyWindow& f, int s, int N);

/// y_m = d^{m+1} f(-1) for m = 0..max_m. Throws std::domain_error if the
/// window lacks one of -1..max_m.
std::vector<RationalMatrix> build_y_family(const OperatorFamilyWindow& f, int max_m);

/// [D(s), D(m)] = (m - s) D(s+m) - m D(m) + s D(s) for every windowed pair
/// with s + m in the window.
Report check_rank1_relation(const OperatorFamilyWindow& f);

struct Lemma4Result {
  Report precondition{"rank1_relation"};
  Report eigen{"lemma4a"};     // [D(-1), y_m] = -m y_m
  Report brackets{"lemma4b"};  // [y_k, y_m] = (m - k) y_{m+k}
  [[nodiscard]] bool ok() const { return precondition.ok() && eigen.ok() && brackets.ok(); }
};

/// Eigenvalues for m <= max_index and brackets for k + m <= max_index.
/// Throws std::domain_error if the window does not reach max_index.
Lemma4Result lemma4_check(const OperatorFamilyWindow& f, int max_index);

enum class DetectionVerdict { Polynomial, InsufficientWindow, PreconditionFailed, NotCategoryJ, Mismatch };
std::string detection_verdict_name(DetectionVerdict v);

struct DetectionOptions {
  std::vector<int> theta_p{2, 3};
  /// Require the window to reach (dim U)^2 - dim U + 2 on the right.
  bool enforce_window = true;
};

struct DetectionReport {
  DetectionVerdict verdict = DetectionVerdict::InsufficientWindow;
  int lo = 0;
  int hi = -1;
  int order = -1;  // least N with y_m = 0 for all windowed m >= N
  MatrixPolynomial polynomial;
  std::vector<RationalMatrix> y;
  Report precondition{"rank1_relation"};
  Report lemma2{"lemma2_bound"};
  Report residual{"residual"};
  std::vector<std::pair<int, Report>> theta;
  std::string reason;

  [[nodiscard]] bool polynomial_found() const { return verdict == DetectionVerdict::Polynomial; }
};

/// Finds the vanishing order of y_m, interpolates D(-1..-1+N), checks every
/// sample on the interval around -1 and cross-checks with theta_p. The claim
/// is "polynomial on this window" and nothing beyond it.
DetectionReport detect_polynomial_rank1(const OperatorFamilyWindow& f, std::size_t dim_u,
                                        const DetectionOptions& options = {});

/// Runs detection on k -> D(pk) / p (a family of the same kind), rescales
/// the result to g_p(s) = p g_E(s / p) and compares g_p(pk) with g(pk) at
/// every windowed multiple. Throws std::domain_error if the multiples of p do
/// not cover -p..pN.
Report theta_p_check(const OperatorFamilyWindow& f, const MatrixPolynomial& g, int p);

/// Points needed by detect_polynomial_rankn on [lo, hi]: k e_j for every axis
/// and the anchors (1, .., 1) - e_t.
std::vector<LatticeVector> rankn_chain_points(std::size_t n, int lo, int hi);

struct RankNResult {
  MatrixPolynomial polynomial;
  std::vector<DetectionReport> axes;
  Report residual{"rankn_residual"};
  [[nodiscard]] bool ok() const;
};

/// Reconstructs D_t(s) from one-variable detections of the axis families
/// D_c(k e_c) and the anchor D_t((1,..,1) - e_t), by
///   D_t(s_t e_t + sum_{c != t} e_c) = D_t(s_t e_t) - [D_t(s_t e_t), D_t(1 - e_t)] / s_t
///   D_t(.. , 1 + s_c, ..) = [D_c(s_c e_c), D_t(.., 1, ..)] + D_t(.., 1, ..)
/// and a final shift s_c -> s_c - 1. D[j] holds the samples of D_j; the
/// residual compares the result with every sample of D[t]. Throws
/// std::domain_error when a chain sample is missing.
RankNResult detect_polynomial_rankn(const std::vector<OperatorFamilyWindow>& D, std::size_t t,
                                    const DetectionOptions& options = {});

}  // namespace jetmod

#endif  // JETMOD_POLYNOMIALITY_HPP
