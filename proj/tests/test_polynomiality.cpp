#include <gtest/gtest.h>

#include <stdexcept>

#include "jetmod/category_j.hpp"
#include "jetmod/jets.hpp"
#include "jetmod/polynomiality.hpp"
#include "oracles.hpp"

using namespace jetmod;

namespace {

OperatorFamilyWindow scalar_family(const std::vector<Rational>& values, int start) {
  OperatorFamilyWindow f(1, 1);
  for (std::size_t i = 0; i < values.size(); ++i) f.insert(LatticeVector{start + static_cast<int>(i)}, RationalMatrix{{values[i]}});
  return f;
}

MatrixPolynomial poly1(const std::vector<RationalMatrix>& coeffs) {
  MatrixPolynomial p(1, coeffs.front().rows(), coeffs.front().cols());
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(MultiIndex{static_cast<int>(k)}, coeffs[k]);
  return p;
}

// D(s) of the rank-one jet module of functions of order N.
CategoryJModule function_jets(int N) { return tensor_truncation_module(JetModuleSpec::tensor_type(1, N, 0, 0)); }

}  // namespace

TEST(DifferenceDerivative, Examples) {
  std::vector<Rational> cubes;
  for (int s = -2; s <= 6; ++s) cubes.emplace_back(s * s * s);
  const auto f = scalar_family(cubes, -2);
  EXPECT_EQ(difference_derivative(f, 1, 2), RationalMatrix{{19}});
  EXPECT_EQ(difference_derivative(f, 3, 0), RationalMatrix{{6}});
  EXPECT_EQ(difference_derivative(scalar_family({0, 1, 8, 27}, 0), 3, 0), RationalMatrix{{6}});
  const auto lin = OperatorFamilyWindow::sample_interval(poly1({RationalMatrix{{1, 2}, {3, 4}}, RationalMatrix{{0, 1}, {-1, 0}}}), -3, 3);
  for (int s = -3; s <= 1; ++s) EXPECT_TRUE(difference_derivative(lin, 2, s).is_zero());
  EXPECT_THROW((void)difference_derivative(lin, 2, 2), std::domain_error);
}

TEST(NewtonInterpolation, Examples) {
  const RationalMatrix a0{{1, 0}, {2, -1}};
  const RationalMatrix a1{{0, 3}, {1, 1}};
  EXPECT_EQ(newton_interpolation({a0, a1}, 0), poly1({a0, a1 - a0}));

  const auto p = poly1({a0, a1, RationalMatrix{{Rational(1, 2), 0}, {0, 5}}});
  EXPECT_EQ(newton_interpolation({p.evaluate(LatticeVector{0}), p.evaluate(LatticeVector{1}), p.evaluate(LatticeVector{2})}, 0), p);
  EXPECT_EQ(newton_interpolation({p.evaluate(LatticeVector{-3}), p.evaluate(LatticeVector{-2}), p.evaluate(LatticeVector{-1})}, -3), p);
  EXPECT_EQ(newton_interpolation({a0, a0, a0}, 4), MatrixPolynomial::constant(1, a0));
}

TEST(GridInterpolation, RecoversTwoVariablePolynomial) {
  oracle::Gen gen(44);
  MatrixPolynomial p(2, 2, 2);
  for (const auto& a : enumerate_multiindices(2, 3)) p.add_term(a, gen.matrix(2, 2));
  const auto f = OperatorFamilyWindow::sample(p, lattice_box(2, 2));
  EXPECT_EQ(grid_interpolation(f, -2, 1), p);
  EXPECT_THROW((void)grid_interpolation(f, -3, 1), std::domain_error);
}

TEST(Lemma3, Examples) {
  OperatorFamilyWindow zero(1, 2);
  for (int s = -1; s <= 6; ++s) zero.insert(LatticeVector{s}, RationalMatrix(2, 2));
  EXPECT_TRUE(lemma3_check(zero, -1, -1).ok());

  const auto p = poly1({RationalMatrix{{1, 1}, {0, 1}}, RationalMatrix{{0, 2}, {0, 0}}, RationalMatrix{{3, 0}, {0, -1}}});
  auto f = OperatorFamilyWindow::sample_interval(p, -1, 8);
  EXPECT_TRUE(lemma3_check(f, -1, 2).ok());

  f.insert(LatticeVector{5}, p.evaluate(LatticeVector{5}) + RationalMatrix::unit(2, 2, 0, 0));
  const Report r = lemma3_check(f, -1, 2);
  ASSERT_FALSE(r.ok());
  bool at_five = false;
  for (const auto& v : r.violations) at_five = at_five || v.sample == "s=5";
  EXPECT_TRUE(at_five) << r.summary();
}

TEST(YFamily, Examples) {
  const RationalMatrix A{{0, 1}, {1, 0}};
  const auto c = OperatorFamilyWindow::sample_interval(MatrixPolynomial::constant(1, A), -1, 6);
  for (const auto& y : build_y_family(c, 5)) EXPECT_TRUE(y.is_zero());

  MatrixPolynomial lin(1, 2, 2);
  lin.add_term(MultiIndex{1}, A);
  const auto y = build_y_family(OperatorFamilyWindow::sample_interval(lin, -1, 6), 5);
  EXPECT_EQ(y[0], A);
  for (std::size_t m = 1; m < y.size(); ++m) EXPECT_TRUE(y[m].is_zero());

  const auto M = function_jets(1);
  const auto yj = build_y_family(extract_D(M, 0, lattice_box(1, 6)), 5);
  for (std::size_t m = 2; m < yj.size(); ++m) EXPECT_TRUE(yj[m].is_zero());
  EXPECT_THROW((void)build_y_family(c, 9), std::domain_error);
}

TEST(Lemma4, Examples) {
  const auto M = function_jets(3);
  const auto f = extract_D(M, 0, lattice_box(1, 8));
  const auto y = build_y_family(f, 6);
  EXPECT_TRUE(commutator(f.at(-1), y[0]).is_zero());
  EXPECT_EQ(commutator(y[0], y[1]), y[1]);
  const Lemma4Result r = lemma4_check(f, 6);
  EXPECT_TRUE(r.ok()) << r.eigen.summary() << " " << r.brackets.summary();
  EXPECT_THROW((void)lemma4_check(f, 9), std::domain_error);
}

TEST(Detection, ConstantFamily) {
  const RationalMatrix A{{2, 1}, {0, 2}};
  const auto f = OperatorFamilyWindow::sample_interval(MatrixPolynomial::constant(1, A), -4, 10);
  const DetectionReport d = detect_polynomial_rank1(f, 2);
  ASSERT_EQ(d.verdict, DetectionVerdict::Polynomial) << d.reason;
  EXPECT_EQ(d.polynomial.degree(), 0);
  EXPECT_EQ(d.polynomial, MatrixPolynomial::constant(1, A));
}

TEST(Detection, SecondOrderFunctionJets) {
  const auto M = function_jets(2);
  const auto f = extract_D(M, 0, lattice_box(1, 6));
  // Dimension 3 needs samples up to 8 before the vanishing of y is conclusive.
  EXPECT_EQ(detect_polynomial_rank1(f, 3).verdict, DetectionVerdict::InsufficientWindow);
  DetectionOptions relaxed;
  relaxed.enforce_window = false;
  const DetectionReport d = detect_polynomial_rank1(f, 3, relaxed);
  ASSERT_TRUE(d.polynomial_found()) << d.reason;
  EXPECT_EQ(d.polynomial.degree(), 2);
  EXPECT_EQ(d.polynomial, M.dpoly(0));
  EXPECT_TRUE(d.residual.ok());
  EXPECT_EQ(d.lo, -6);
  EXPECT_EQ(d.hi, 6);

  const auto wide = extract_D(M, 0, lattice_box(1, 10));
  const DetectionReport e = detect_polynomial_rank1(wide, 3);
  ASSERT_TRUE(e.polynomial_found()) << e.reason;
  EXPECT_EQ(e.polynomial, M.dpoly(0));
}

TEST(Detection, PreconditionFailure) {
  const RationalMatrix A{{0, 1}, {0, 0}};
  const RationalMatrix B{{0, 0}, {1, 0}};
  MatrixPolynomial p(1, 2, 2);
  p.add_term(MultiIndex{1}, A);
  p.add_term(MultiIndex{3}, B);
  const DetectionReport d = detect_polynomial_rank1(OperatorFamilyWindow::sample_interval(p, -4, 10), 2);
  EXPECT_EQ(d.verdict, DetectionVerdict::PreconditionFailed);
  EXPECT_FALSE(d.precondition.ok());
  EXPECT_FALSE(check_rank1_relation(OperatorFamilyWindow::sample_interval(p, -4, 10)).ok());
}

TEST(Detection, NonPolynomialFamilyIsNotAccepted) {
  // 2^s Id commutes with itself but is not polynomial; the relation fails.
  OperatorFamilyWindow f(1, 1);
  for (int s = -4; s <= 10; ++s) f.insert(LatticeVector{s}, RationalMatrix{{s >= 0 ? Rational(1 << s) : Rational(1, 1 << -s)}});
  EXPECT_FALSE(detect_polynomial_rank1(f, 1).polynomial_found());
}

TEST(ThetaP, Examples) {
  MatrixPolynomial lin = MatrixPolynomial::constant(1, RationalMatrix{{1, 0}, {0, 1}});
  lin.add_term(MultiIndex{1}, RationalMatrix{{0, 1}, {0, 0}});
  const auto fl = OperatorFamilyWindow::sample_interval(lin, -6, 12);
  EXPECT_TRUE(theta_p_check(fl, lin, 2).ok());

  const auto M = function_jets(2);
  const auto f = extract_D(M, 0, lattice_box(1, 12));
  const Report r = theta_p_check(f, M.dpoly(0), 3);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_GT(r.checked, 0u);

  MatrixPolynomial bad = M.dpoly(0);
  bad.add_term(MultiIndex{2}, RationalMatrix::unit(3, 3, 0, 2));
  EXPECT_FALSE(theta_p_check(f, bad, 3).ok());
  EXPECT_THROW((void)theta_p_check(extract_D(M, 0, lattice_box(1, 2)), M.dpoly(0), 3), std::domain_error);
}

TEST(RankN, JetModuleOfOneForms) {
  const auto M = tensor_truncation_module(JetModuleSpec::tensor_type(2, 1, 0, 1));
  const int hi = static_cast<int>(lemma2_bound(M.dim())) + 1;
  const auto points = rankn_chain_points(2, -4, hi);
  std::vector<OperatorFamilyWindow> D;
  for (std::size_t j = 0; j < 2; ++j) {
    OperatorFamilyWindow w = extract_D(M, j, points);
    for (const auto& s : lattice_box(2, 2)) w.insert(s, M.D(j, s));
    D.push_back(std::move(w));
  }
  for (std::size_t t = 0; t < 2; ++t) {
    const RankNResult r = detect_polynomial_rankn(D, t);
    ASSERT_TRUE(r.ok()) << r.residual.summary();
    EXPECT_EQ(r.polynomial, M.dpoly(t));
  }
}

TEST(RankN, LinearAndConstantFamilies) {
  const auto inflated = from_wnplus_rep(WeightCoset{{0, 0}}, inflate_gln_to_wnplus(gln_natural(2)));
  const auto constant = from_wnplus_rep(WeightCoset{{Rational(1, 2), 3}}, FiniteRep({AlgebraKind::WnPlus, 2, nullptr}, 2));
  for (const auto* M : {&inflated, &constant}) {
    const auto points = rankn_chain_points(2, -4, static_cast<int>(lemma2_bound(2)) + 1);
    std::vector<OperatorFamilyWindow> D{extract_D(*M, 0, points), extract_D(*M, 1, points)};
    const RankNResult r = detect_polynomial_rankn(D, 1);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.polynomial, M->dpoly(1));
  }
  EXPECT_THROW((void)detect_polynomial_rankn(
                   {extract_D(constant, 0, lattice_box(2, 1)), extract_D(constant, 1, lattice_box(2, 1))}, 0),
               std::domain_error);
}
