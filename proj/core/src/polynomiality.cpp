#include "jetmod/polynomiality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "jetmod/scalar_polynomial.hpp"

namespace jetmod {

namespace {

std::string at_point(int s) { return "s=" + std::to_string(s); }

/// C(t - lo, k) as a polynomial in t.
ScalarPolynomial shifted_binomial(int lo, int k) {
  ScalarPolynomial b = ScalarPolynomial::constant(1);
  for (int i = 0; i < k; ++i) b = b * ScalarPolynomial::linear_factor(Rational(lo + i));
  Rational fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return b * ScalarPolynomial::constant(Rational(1) / fact);
}

OperatorFamilyWindow one_variable(std::size_t dim) { return OperatorFamilyWindow(1, dim); }

}  // namespace

RationalMatrix difference_derivative(const OperatorFamilyWindow& f, int order, int s) {
  if (order < 0) throw std::domain_error("difference order must be non-negative");
  RationalMatrix out(f.dim(), f.dim());
  for (int k = 0; k <= order; ++k) {
    const Rational c = ((order - k) % 2 == 0 ? 1 : -1) * binomial(order, k);
    out.add_scaled(c, f.at(s + k));
  }
  return out;
}

MatrixPolynomial newton_interpolation(const std::vector<RationalMatrix>& samples, int start) {
  if (samples.empty()) throw std::domain_error("interpolation needs at least one sample");
  const std::size_t rows = samples.front().rows();
  const std::size_t cols = samples.front().cols();
  // Forward differences in place: diffs[k] = Delta^k f(start).
  std::vector<RationalMatrix> diffs = samples;
  for (std::size_t level = 1; level < diffs.size(); ++level) {
    for (std::size_t i = diffs.size() - 1; i >= level; --i) diffs[i] = diffs[i] - diffs[i - 1];
  }
  MatrixPolynomial g(1, rows, cols);
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].is_zero()) continue;
    const ScalarPolynomial b = shifted_binomial(start, static_cast<int>(k));
    for (int e = 0; e <= b.degree(); ++e) {
      const Rational c = b.coefficient(e);
      if (!c.is_zero()) g.add_term(MultiIndex{e}, diffs[k], c);
    }
  }
  return g;
}

MatrixPolynomial grid_interpolation(const OperatorFamilyWindow& f, int lo, int hi) {
  if (hi < lo) throw std::domain_error("empty interpolation grid");
  const std::size_t n = f.variables();
  const std::size_t side = static_cast<std::size_t>(hi - lo + 1);
  std::size_t total = 1;
  for (std::size_t v = 0; v < n; ++v) total *= side;

  auto point_of = [&](std::size_t flat) {
    LatticeVector p(n);
    for (std::size_t v = 0; v < n; ++v) {
      p[v] = lo + static_cast<int>(flat % side);
      flat /= side;
    }
    return p;
  };
  std::vector<RationalMatrix> a;
  a.reserve(total);
  for (std::size_t i = 0; i < total; ++i) a.push_back(f.at(point_of(i)));

  // Forward differences along each axis turn a[k] into Delta^k f(lo, .., lo).
  std::size_t stride = 1;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % side != 0) continue;
      for (std::size_t level = 1; level < side; ++level) {
        for (std::size_t i = side - 1; i >= level; --i) {
          a[base + i * stride] = a[base + i * stride] - a[base + (i - 1) * stride];
        }
      }
    }
    stride *= side;
  }

  std::vector<ScalarPolynomial> basis;
  for (std::size_t k = 0; k < side; ++k) basis.push_back(shifted_binomial(lo, static_cast<int>(k)));

  MatrixPolynomial g(n, f.dim(), f.dim());
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (a[flat].is_zero()) continue;
    const LatticeVector k = point_of(flat) - LatticeVector(std::vector<int>(n, lo));
    // Expand prod_v C(s_v - lo, k_v) into monomials.
    std::vector<std::pair<std::vector<int>, Rational>> monomials{{std::vector<int>(), Rational(1)}};
    for (std::size_t v = 0; v < n; ++v) {
      const ScalarPolynomial& b = basis[static_cast<std::size_t>(k[v])];
      std::vector<std::pair<std::vector<int>, Rational>> next;
      for (const auto& [exps, c] : monomials) {
        for (int e = 0; e <= b.degree(); ++e) {
          const Rational be = b.coefficient(e);
          if (be.is_zero()) continue;
          auto x = exps;
          x.push_back(e);
          next.emplace_back(std::move(x), c * be);
        }
      }
      monomials = std::move(next);
    }
    for (const auto& [exps, c] : monomials) g.add_term(MultiIndex(std::span<const int>(exps)), a[flat], c);
  }
  return g;
}

Report residual_check(const OperatorFamilyWindow& f, const MatrixPolynomial& p, std::string name) {
  Report report(std::move(name));
  for (const auto& [s, value] : f.samples()) {
    ++report.checked;
    if (p.evaluate(s) != value) report.fail("s=" + s.str(), "polynomial value differs from the sample");
  }
  return report;
}

Report lemma3_check(const OperatorFamilyWindow& f, int s, int N) {
  if (f.variables() != 1) throw std::domain_error("lemma3_check needs a one-variable family");
  if (N < -1) throw std::domain_error("interpolation degree must be >= -1");
  Report report("lemma3");
  const auto [lo, hi] = f.interval_around(s);
  if (hi < s + N) throw std::domain_error("window does not contain " + at_point(s) + ".." + at_point(s + N));

  MatrixPolynomial g(1, f.dim(), f.dim());
  if (N >= 0) {
    std::vector<RationalMatrix> head;
    for (int t = s; t <= s + N; ++t) head.push_back(f.at(t));
    g = newton_interpolation(head, s);
  }
  bool hypothesis = true;
  for (int m = N + 1; m <= hi - s; ++m) {
    if (!difference_derivative(f, m, s).is_zero()) {
      hypothesis = false;
      report.note("difference of order " + std::to_string(m) + " at " + at_point(s) + " is non-zero");
      break;
    }
  }
  bool agrees = true;
  for (int t = s; t <= hi; ++t) {
    ++report.checked;
    if (g.evaluate(LatticeVector{t}) != f.at(t)) {
      agrees = false;
      report.fail(at_point(t), "sample differs from the degree-" + std::to_string(N) + " interpolation");
    }
  }
  if (hypothesis && !agrees) report.fail(at_point(s), "differences vanish but the family is not the interpolation");
  if (!hypothesis && agrees) report.fail(at_point(s), "family equals the interpolation but a difference survives");
  return report;
}

std::vector<RationalMatrix> build_y_family(const OperatorFamilyWindow& f, int max_m) {
  if (f.variables() != 1) throw std::domain_error("build_y_family needs a one-variable family");
  std::vector<RationalMatrix> y;
  for (int m = 0; m <= max_m; ++m) {
    if (!f.contains(m)) throw std::domain_error("window lacks s=" + std::to_string(m) + " needed for y_" + std::to_string(m));
    y.push_back(difference_derivative(f, m + 1, -1));
  }
  return y;
}

Report check_rank1_relation(const OperatorFamilyWindow& f) {
  if (f.variables() != 1) throw std::domain_error("check_rank1_relation needs a one-variable family");
  Report report("rank1_relation");
  for (const auto& [sv, Ds] : f.samples()) {
    for (const auto& [mv, Dm] : f.samples()) {
      const LatticeVector sum = sv + mv;
      if (!f.contains(sum)) continue;
      const int s = sv[0], m = mv[0];
      ++report.checked;
      RationalMatrix rhs = Rational(m - s) * f.at(sum);
      rhs.add_scaled(Rational(-m), Dm);
      rhs.add_scaled(Rational(s), Ds);
      if (commutator(Ds, Dm) != rhs) {
        report.fail("s=" + std::to_string(s) + " m=" + std::to_string(m), "[D(s),D(m)] != (m-s)D(s+m) - mD(m) + sD(s)");
      }
    }
  }
  return report;
}

Lemma4Result lemma4_check(const OperatorFamilyWindow& f, int max_index) {
  Lemma4Result out;
  out.precondition = check_rank1_relation(f);
  const auto y = build_y_family(f, max_index);
  const RationalMatrix& dm1 = f.at(-1);
  for (int m = 0; m <= max_index; ++m) {
    ++out.eigen.checked;
    const auto& ym = y[static_cast<std::size_t>(m)];
    if (commutator(dm1, ym) != Rational(-m) * ym) {
      out.eigen.fail("m=" + std::to_string(m), "[D(-1), y_m] != -m y_m");
    }
  }
  for (int k = 0; k <= max_index; ++k) {
    for (int m = 0; k + m <= max_index; ++m) {
      ++out.brackets.checked;
      const auto& yk = y[static_cast<std::size_t>(k)];
      const auto& ym = y[static_cast<std::size_t>(m)];
      if (commutator(yk, ym) != Rational(m - k) * y[static_cast<std::size_t>(k + m)]) {
        out.brackets.fail("k=" + std::to_string(k) + " m=" + std::to_string(m), "[y_k, y_m] != (m-k) y_{m+k}");
      }
    }
  }
  return out;
}

std::string detection_verdict_name(DetectionVerdict v) {
  switch (v) {
    case DetectionVerdict::Polynomial:
      return "polynomial";
    case DetectionVerdict::InsufficientWindow:
      return "insufficient_window";
    case DetectionVerdict::PreconditionFailed:
      return "precondition_failed";
    case DetectionVerdict::NotCategoryJ:
      return "not_category_j";
    case DetectionVerdict::Mismatch:
      return "mismatch";
  }
  return "unknown";
}

DetectionReport detect_polynomial_rank1(const OperatorFamilyWindow& f, std::size_t dim_u,
                                        const DetectionOptions& options) {
  if (f.variables() != 1) throw std::domain_error("detect_polynomial_rank1 needs a one-variable family");
  DetectionReport out;
  std::tie(out.lo, out.hi) = f.interval_around(-1);
  const int bound = static_cast<int>(lemma2_bound(dim_u));
  if (out.hi < 0) {
    out.reason = "window must contain -1 and 0";
    return out;
  }
  if (options.enforce_window && out.hi < bound + 1) {
    out.reason = "window must reach s=" + std::to_string(bound + 1) + " for dim U = " + std::to_string(dim_u) +
                 ", it stops at " + std::to_string(out.hi);
    return out;
  }

  out.precondition = check_rank1_relation(f);
  if (!out.precondition.ok()) {
    out.verdict = DetectionVerdict::PreconditionFailed;
    out.reason = "samples violate [D(s),D(m)] = (m-s)D(s+m) - mD(m) + sD(s)";
    return out;
  }

  out.y = build_y_family(f, out.hi);
  int order = out.hi + 1;
  while (order > 0 && out.y[static_cast<std::size_t>(order - 1)].is_zero()) --order;
  out.order = order;
  for (int m = bound; m <= out.hi; ++m) {
    ++out.lemma2.checked;
    if (!out.y[static_cast<std::size_t>(m)].is_zero()) {
      out.lemma2.fail("m=" + std::to_string(m), "y_m != 0 beyond the bound " + std::to_string(bound));
    }
  }
  if (order > out.hi) {
    out.verdict = options.enforce_window ? DetectionVerdict::NotCategoryJ : DetectionVerdict::InsufficientWindow;
    out.reason = "no vanishing tail of y_m on the window";
    return out;
  }
  if (options.enforce_window && !out.lemma2.ok()) {
    out.verdict = DetectionVerdict::NotCategoryJ;
    out.reason = "y_m does not vanish within the bound " + std::to_string(bound);
    return out;
  }

  std::vector<RationalMatrix> head;
  for (int s = -1; s <= order - 1; ++s) head.push_back(f.at(s));
  out.polynomial = newton_interpolation(head, -1);
  out.residual = residual_check(f, out.polynomial);
  if (!out.residual.ok()) {
    out.verdict = DetectionVerdict::Mismatch;
    out.reason = "interpolation does not reproduce every sample";
    return out;
  }

  out.verdict = DetectionVerdict::Polynomial;
  for (int p : options.theta_p) {
    Report r;
    try {
      r = theta_p_check(f, out.polynomial, p);
    } catch (const std::domain_error& e) {
      r = Report("theta_" + std::to_string(p));
      r.indeterminate = true;
      r.note(e.what());
      out.verdict = DetectionVerdict::InsufficientWindow;
      out.reason = e.what();
    }
    if (!r.ok() && out.verdict == DetectionVerdict::Polynomial) {
      out.verdict = DetectionVerdict::Mismatch;
      out.reason = "theta_" + std::to_string(p) + " cross-check failed";
    }
    out.theta.emplace_back(p, std::move(r));
  }
  if (out.verdict == DetectionVerdict::Polynomial) {
    out.reason = "polynomial of degree " + std::to_string(out.polynomial.degree()) + " on the window [" +
                 std::to_string(out.lo) + ", " + std::to_string(out.hi) + "]";
  }
  return out;
}

Report theta_p_check(const OperatorFamilyWindow& f, const MatrixPolynomial& g, int p) {
  if (p < 2) throw std::domain_error("theta_p needs p >= 2");
  Report report("theta_" + std::to_string(p));
  OperatorFamilyWindow e = one_variable(f.dim());
  for (const auto& [s, value] : f.samples()) {
    if (s[0] % p == 0) e.insert(LatticeVector{s[0] / p}, Rational(1, p) * value);
  }
  const int degree = std::max(g.degree(), 0);
  for (int k = -1; k <= degree; ++k) {
    if (!e.contains(k)) {
      throw std::domain_error("theta_" + std::to_string(p) + ": window lacks s=" + std::to_string(p * k));
    }
  }
  DetectionOptions relaxed;
  relaxed.theta_p.clear();
  relaxed.enforce_window = false;
  const DetectionReport sub = detect_polynomial_rank1(e, f.dim(), relaxed);
  if (sub.verdict == DetectionVerdict::InsufficientWindow) {
    throw std::domain_error("theta_" + std::to_string(p) + ": " + sub.reason);
  }
  if (!sub.polynomial_found()) {
    report.fail("theta_" + std::to_string(p), "subsampled family: " + detection_verdict_name(sub.verdict));
    return report;
  }
  // g_p(s) = p g_E(s / p)
  const Rational inv = Rational(1, p);
  const MatrixPolynomial gp = Rational(p) * sub.polynomial.scaled(std::span<const Rational>(&inv, 1));
  for (const auto& [k, value] : e.samples()) {
    const LatticeVector s{p * k[0]};
    ++report.checked;
    if (gp.evaluate(s) != g.evaluate(s)) report.fail("s=" + s.str(), "g_p(s) != g(s)");
  }
  if (report.ok()) report.note("g_p agrees with g at " + std::to_string(report.checked) + " multiples of p");
  return report;
}

std::vector<LatticeVector> rankn_chain_points(std::size_t n, int lo, int hi) {
  std::set<LatticeVector> points;
  for (std::size_t j = 0; j < n; ++j) {
    for (int k = lo; k <= hi; ++k) points.insert(LatticeVector::unit(n, j, k));
    LatticeVector anchor(n);
    for (std::size_t c = 0; c < n; ++c) anchor[c] = c == j ? 0 : 1;
    points.insert(anchor);
  }
  return {points.begin(), points.end()};
}

bool RankNResult::ok() const {
  return residual.ok() && std::all_of(axes.begin(), axes.end(), [](const auto& a) { return a.polynomial_found(); });
}

RankNResult detect_polynomial_rankn(const std::vector<OperatorFamilyWindow>& D, std::size_t t,
                                    const DetectionOptions& options) {
  const std::size_t n = D.size();
  if (t >= n) throw std::domain_error("target index out of range");
  const std::size_t dim = D[t].dim();
  RankNResult out;
  std::vector<MatrixPolynomial> axis(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (D[c].variables() != n) throw std::domain_error("family " + std::to_string(c) + " has the wrong variable count");
    OperatorFamilyWindow a = one_variable(dim);
    for (const auto& [s, value] : D[c].samples()) {
      if (s == LatticeVector::unit(n, c, s[c])) a.insert(LatticeVector{s[c]}, value);
    }
    DetectionReport r = detect_polynomial_rank1(a, dim, options);
    if (r.verdict == DetectionVerdict::InsufficientWindow) {
      throw std::domain_error("axis " + std::to_string(c) + ": " + r.reason);
    }
    axis[c] = r.polynomial.embed(n, std::vector<std::size_t>{c});
    out.axes.push_back(std::move(r));
  }
  if (!std::all_of(out.axes.begin(), out.axes.end(), [](const auto& a) { return a.polynomial_found(); })) {
    out.residual.fail("axes", "an axis family is not polynomial");
    return out;
  }

  MatrixPolynomial P = axis[t];
  if (n > 1) {
    LatticeVector anchor(n);
    for (std::size_t c = 0; c < n; ++c) anchor[c] = c == t ? 0 : 1;
    const MatrixPolynomial C = MatrixPolynomial::constant(n, D[t].at(anchor));
    P = P - commutator(P, C).divided_by_variable(t);
    for (std::size_t c = 0; c < n; ++c) {
      if (c != t) P = commutator(axis[c], P) + P;
    }
    std::vector<Rational> offset(n, Rational(-1));
    offset[t] = 0;
    P = P.shifted(offset);
  }
  out.polynomial = std::move(P);
  out.residual = residual_check(D[t], out.polynomial, "rankn_residual");
  return out;
}

}  // namespace jetmod
