#include <gtest/gtest.h>

#include <memory>
#include <stdexcept>

#include "jetmod/polynomiality.hpp"
#include "jetmod/semidirect.hpp"
#include "oracles.hpp"

using namespace jetmod;

namespace {

GdotPtr sl2() { return std::make_shared<const FiniteLieAlgebra>(FiniteLieAlgebra::sl2()); }
GdotPtr abelian(std::size_t d) { return std::make_shared<const FiniteLieAlgebra>(FiniteLieAlgebra::abelian(d)); }

WeightCoset zero_weight(std::size_t n) { return WeightCoset{std::vector<Rational>(n)}; }

// gl_n trivial on a space carrying the adjoint of sl2, loop support at beta = 0.
GPlusRep sl2_adjoint(std::size_t n) {
  const auto g = sl2();
  return gplus_from_tensor(gln_trivial(n), g, gdot_adjoint(*g));
}

}  // namespace

TEST(Gdot, AdjointIsRepresentation) {
  const auto g = FiniteLieAlgebra::sl2();
  EXPECT_TRUE(gdot_rep_check(g, gdot_adjoint(g)).ok());
  GdotRep bad = gdot_adjoint(g);
  bad[0](0, 0) += 1;
  EXPECT_FALSE(gdot_rep_check(g, bad).ok());
}

TEST(GModule, ZeroLoopPart) {
  const GPlusRep R(1, abelian(2), 2);
  const GModule M = from_gplus_rep(zero_weight(1), R);
  for (std::size_t g = 0; g < 2; ++g) {
    EXPECT_TRUE(M.gpoly(g).is_zero());
    EXPECT_TRUE(M.loop_action_matrix(g, LatticeVector{3}, LatticeVector{-1}).is_zero());
  }
  EXPECT_TRUE(extract_g(M, 0, lattice_box(1, 2)).at(1).is_zero());
}

TEST(GModule, AbelianConstantLoop) {
  GPlusRep R(1, abelian(1), 2);
  R.set_loop(MultiIndex{0}, 0, RationalMatrix::identity(2));
  const GModule M = from_gplus_rep(zero_weight(1), R);
  for (int s = -2; s <= 2; ++s) {
    EXPECT_EQ(M.symbol_action_matrix(BasisSymbol::loop(LatticeVector{s}, 0), LatticeVector{1}), RationalMatrix::identity(2));
  }
  EXPECT_TRUE(check_54_55(R).ok());
}

TEST(GModule, Sl2AdjointReproducesPointwiseAction) {
  const GPlusRep R = sl2_adjoint(1);
  const GModule M = from_gplus_rep(zero_weight(1), R);
  const GdotRep ad = gdot_adjoint(FiniteLieAlgebra::sl2());
  for (std::size_t g = 0; g < 3; ++g) {
    for (int s = -2; s <= 2; ++s) EXPECT_EQ(M.g_of(g, LatticeVector{s}), ad[g]);
  }
  EXPECT_TRUE(check_54_55(R).ok());
  EXPECT_TRUE(check_53(M, 2).ok());
  EXPECT_TRUE(j4_check(M, 2).ok());
  EXPECT_TRUE(loop_bracket_compat_check(M, 2).ok());
  EXPECT_EQ(coefficients_as_gplus(M), R);
}

// On C[z]/(deg > N) (x) W, e^s g multiplies z^a w by the truncated
// exponential sum_b s^b / b! z^{a+b} and applies rho(g).
TEST(GModule, TruncatedLoopAgainstExponential) {
  const auto g = sl2();
  const GdotRep ad = gdot_adjoint(*g);
  for (std::size_t n = 1; n <= 2; ++n) {
    const int N = 2;
    const GModule M = from_gplus_rep(zero_weight(n), gplus_truncated_loop(n, N, g, ad));
    const auto monomials = enumerate_multiindices(n, N);
    for (std::size_t e = 0; e < 3; ++e) {
      for (const auto& s : lattice_box(n, 2)) {
        RationalMatrix mult(monomials.size(), monomials.size());
        for (const auto& a : monomials) {
          for (const auto& b : monomials) {
            const MultiIndex t = a + b;
            if (t.degree() > N) continue;
            mult(truncated_index(t, 0, 1, N), truncated_index(a, 0, 1, N)) += monomial_value(b, s) / b.factorial();
          }
        }
        ASSERT_EQ(M.g_of(e, s), kronecker(mult, ad[e]));
      }
    }
    EXPECT_TRUE(check_53(M, 2).ok());
    EXPECT_TRUE(j4_check(M, 2).ok());
    EXPECT_TRUE(check_54_55(gplus_truncated_loop(n, N, g, ad)).ok());
  }
}

TEST(Check53, CorruptedLoopFamily) {
  const auto g = sl2();
  const GModule M = from_gplus_rep(zero_weight(1), gplus_truncated_loop(1, 2, g, gdot_adjoint(*g)));
  MatrixPolynomial p = M.gpoly(1);
  p.add_term(MultiIndex{1}, RationalMatrix::unit(M.dim(), M.dim(), 0, 0));
  EXPECT_FALSE(check_53(M.with_gpoly(1, p), 2).ok());
  EXPECT_FALSE(loop_bracket_compat_check(M.with_gpoly(1, p), 2).ok());
}

TEST(Check5455, Violations) {
  // Abelian algebra acting by non-commuting matrices.
  GPlusRep R(1, abelian(2), 2);
  R.set_loop(MultiIndex{0}, 0, RationalMatrix{{0, 1}, {0, 0}});
  R.set_loop(MultiIndex{0}, 1, RationalMatrix{{0, 0}, {1, 0}});
  EXPECT_FALSE(check_54_55(R).ok());
  EXPECT_THROW((void)from_gplus_rep(zero_weight(1), R), std::invalid_argument);

  // Loop matrices that fail to commute with a gl_n part of the vector fields.
  GPlusRep mixed(1, abelian(1), 2);
  mixed.set_vector_field(0, MultiIndex{1}, RationalMatrix{{1, 0}, {0, 0}});
  mixed.set_loop(MultiIndex{0}, 0, RationalMatrix{{0, 1}, {0, 0}});
  EXPECT_FALSE(check_54_55(mixed).ok());
}

TEST(ExtractG, DegreesOnEachAxis) {
  const auto g = sl2();
  const GModule constant = from_gplus_rep(zero_weight(1), sl2_adjoint(1));
  const auto fc = extract_g(constant, 0, lattice_box(1, 3));
  for (int s = -3; s <= 3; ++s) EXPECT_EQ(fc.at(s), fc.at(0));

  const GModule M = from_gplus_rep(zero_weight(2), gplus_truncated_loop(2, 2, g, gdot_adjoint(*g)));
  DetectionOptions relaxed;
  relaxed.enforce_window = false;
  for (std::size_t axis = 0; axis < 2; ++axis) {
    std::vector<LatticeVector> points;
    for (int k = -4; k <= 10; ++k) points.push_back(LatticeVector::unit(2, axis, k));
    OperatorFamilyWindow line(1, M.dim());
    const auto samples = extract_g(M, 1, points);
    for (const auto& [s, v] : samples.samples()) line.insert(LatticeVector{s[axis]}, v);
    // g(s) is not a D-family, so only the interpolation part applies.
    EXPECT_EQ(grid_interpolation(line, -1, 3).degree(), 2);
    EXPECT_TRUE(residual_check(line, grid_interpolation(line, -1, 3)).ok());
  }
}

TEST(Irreducible, AnnihilationOfHigherSymbols) {
  const auto g = sl2();
  const GPlusRep R = gplus_from_tensor(gln_natural(2), g, gdot_adjoint(*g));
  EXPECT_EQ(R.dim(), 6u);
  EXPECT_TRUE(gpp_annihilation_check(R).ok());
  EXPECT_TRUE(check_54_55(R).ok());
  EXPECT_FALSE(gpp_annihilation_check(gplus_truncated_loop(1, 1, g, gdot_adjoint(*g))).ok());
  EXPECT_TRUE(gpp_annihilation_check(gplus_from_tensor(gln_trivial(1), abelian(1), GdotRep{RationalMatrix(1, 1)})).ok());
}

TEST(Irreducible, RejectsNonCommutingPair) {
  const auto g = abelian(1);
  EXPECT_THROW((void)gplus_from_gln_gdot(gln_natural(2), g, GdotRep{RationalMatrix{{0, 1}, {0, 0}}}), std::invalid_argument);
  EXPECT_NO_THROW((void)gplus_from_gln_gdot(gln_natural(2), g, GdotRep{RationalMatrix::identity(2)}));
}

TEST(Semidirect, JacobiWithSl2) {
  auto basis = wn_window(1, 1);
  const auto loops = loop_window(1, 1, 3);
  basis.insert(basis.end(), loops.begin(), loops.end());
  EXPECT_TRUE(jacobi_check({AlgebraKind::Semidirect, 1, sl2()}, basis).ok());
  EXPECT_TRUE(rep_check_exhaustive(sl2_adjoint(2).rep()).ok());
}
