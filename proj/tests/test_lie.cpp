#include <gtest/gtest.h>

#include <memory>
#include <stdexcept>

#include "jetmod/lie.hpp"
#include "oracles.hpp"

using namespace jetmod;

namespace {

BasisSymbol d(std::size_t j, LatticeVector s) { return BasisSymbol::wn(j, s); }
BasisSymbol zd(std::size_t j, MultiIndex a) { return BasisSymbol::wn_plus(j, a); }
BasisSymbol E(std::size_t n, std::size_t p, std::size_t q) { return BasisSymbol::gln(n, p, q); }

std::shared_ptr<const FiniteLieAlgebra> sl2() { return std::make_shared<const FiniteLieAlgebra>(FiniteLieAlgebra::sl2()); }

}  // namespace

TEST(WittBracket, Examples) {
  EXPECT_EQ(bracket_wn(d(0, {1}), d(0, {2})), LieElement(d(0, {3})));
  EXPECT_TRUE(bracket_wn(d(1, {2, -1}), d(1, {2, -1})).is_zero());
  LieElement expected = LieElement(d(1, {1, 1})) - LieElement(d(0, {1, 1}));
  EXPECT_EQ(bracket_wn(d(0, {0, 1}), d(1, {1, 0})), expected);
}

TEST(PolynomialVectorFields, Examples) {
  EXPECT_EQ(bracket_wnplus(zd(0, {1}), zd(0, {2})), LieElement(zd(0, {2})));
  EXPECT_TRUE(bracket_wnplus(zd(1, {1, 2}), zd(1, {1, 2})).is_zero());
  EXPECT_TRUE(bracket_wnplus(zd(0, {1, 0}), zd(1, {0, 1})).is_zero());
}

TEST(Gln, Examples) {
  EXPECT_EQ(bracket_gln(E(2, 0, 1), E(2, 1, 0)), LieElement(E(2, 0, 0)) - LieElement(E(2, 1, 1)));
  EXPECT_TRUE(bracket_gln(E(2, 0, 0), E(2, 0, 0)).is_zero());
  EXPECT_EQ(bracket_gln(E(3, 0, 1), E(3, 1, 2)), LieElement(E(3, 0, 2)));
}

TEST(Semidirect, Examples) {
  auto abelian = std::make_shared<const FiniteLieAlgebra>(FiniteLieAlgebra::abelian(1));
  EXPECT_EQ(bracket_semidirect(d(0, {1}), BasisSymbol::loop({2}, 0), abelian),
            LieElement(BasisSymbol::loop({3}, 0), 2));
  EXPECT_TRUE(bracket_semidirect(BasisSymbol::loop({1}, 0), BasisSymbol::loop({-3}, 0), abelian).is_zero());
  // sl2 basis (e, h, f)
  EXPECT_EQ(bracket_semidirect(BasisSymbol::loop({1}, 0), BasisSymbol::loop({1}, 2), sl2()),
            LieElement(BasisSymbol::loop({2}, 1)));
  EXPECT_EQ(bracket_semidirect(BasisSymbol::loop({1}, 2), d(0, {4}), sl2()),
            LieElement(BasisSymbol::loop({5}, 2), -1));
}

TEST(Jacobi, ExampleWindows) {
  const auto w1 = wn_window(1, 2);
  EXPECT_EQ(w1.size(), 5u);
  EXPECT_TRUE(jacobi_check({AlgebraKind::Wn, 1, nullptr}, w1).ok());
  EXPECT_TRUE(jacobi_check({AlgebraKind::WnPlus, 2, nullptr}, wnplus_window(2, 2)).ok());
  auto basis = wn_window(1, 1);
  const auto loops = loop_window(1, 1, 3);
  basis.insert(basis.end(), loops.begin(), loops.end());
  const Report r = jacobi_check({AlgebraKind::Semidirect, 1, sl2()}, basis);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_GT(r.checked, 0u);
}

TEST(Lie, ForeignSymbolsRejected) {
  const LieAlgebra wn{AlgebraKind::Wn, 1, nullptr};
  EXPECT_THROW((void)bracket(wn, zd(0, {2}), d(0, {1})), std::domain_error);
  EXPECT_THROW((void)bracket(LieAlgebra{AlgebraKind::WnPlus, 1, nullptr}, zd(0, {0}), zd(0, {2})), std::domain_error);
  EXPECT_NO_THROW((void)bracket(LieAlgebra{AlgebraKind::DerPoly, 1, nullptr}, zd(0, {0}), zd(0, {2})));
}

TEST(FiniteLieAlgebra, RejectsBrokenStructureConstants) {
  // [e0, e1] = e2 and [e0, e2] = e0, [e1, e2] = 0 violates Jacobi.
  std::vector<FiniteLieAlgebra::Bracket> bad{{0, 1, {0, 0, 1}}, {0, 2, {1, 0, 0}}};
  EXPECT_THROW(FiniteLieAlgebra(3, bad), std::invalid_argument);
  const auto g = FiniteLieAlgebra::sl2();
  EXPECT_EQ(g.bracket(1, 0), (RationalVector{2, 0, 0}));
  EXPECT_EQ(g.bracket(1, 2), (RationalVector{0, 0, -2}));
  EXPECT_EQ(g.ad(1), (RationalMatrix{{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
}

// The bracket must act as the commutator of the actions on functions on the
// torus (and on functions valued in the adjoint module for the loop part).
TEST(LieProperty, WittBracketIsCommutatorOfActionsOnFunctions) {
  oracle::Gen gen(101);
  const auto g = sl2();
  const auto rho = std::vector<RationalMatrix>{g->ad(0), g->ad(1), g->ad(2)};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    auto pick = [&]() {
      const auto s = gen.lattice(n, 3);
      if (gen.coin()) return d(static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1)), s);
      return BasisSymbol::loop(s, static_cast<std::size_t>(gen.integer(0, 2)));
    };
    const BasisSymbol x = pick();
    const BasisSymbol y = pick();
    oracle::Combo<oracle::FunctionKey> f;
    f[{gen.lattice(n, 3), static_cast<std::size_t>(gen.integer(0, 2))}] = 1;
    f[{gen.lattice(n, 3), static_cast<std::size_t>(gen.integer(0, 2))}] += 2;
    auto xy = oracle::act_on_functions(x, oracle::act_on_functions(y, f, rho), rho);
    for (const auto& [k, v] : oracle::act_on_functions(y, oracle::act_on_functions(x, f, rho), rho)) {
      oracle::add_to(xy, k, -v);
    }
    const LieElement b = bracket(LieAlgebra{AlgebraKind::Semidirect, n, g}, x, y);
    ASSERT_EQ(oracle::act_on_functions(b, f, rho), xy) << x.str() << " , " << y.str();
  }
}

TEST(LieProperty, PolynomialBracketIsCommutatorOfDerivations) {
  oracle::Gen gen(202);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const int nj = static_cast<int>(n) - 1;
    const BasisSymbol x = zd(static_cast<std::size_t>(gen.integer(0, nj)), gen.multiindex(n, 4));
    const BasisSymbol y = zd(static_cast<std::size_t>(gen.integer(0, nj)), gen.multiindex(n, 4));
    oracle::Combo<MultiIndex> f;
    f[gen.multiindex(n, 5)] = 1;
    f[gen.multiindex(n, 5)] += 3;
    auto xy = oracle::act_on_polynomials(x, oracle::act_on_polynomials(y, f));
    for (const auto& [k, v] : oracle::act_on_polynomials(y, oracle::act_on_polynomials(x, f))) oracle::add_to(xy, k, -v);
    const LieElement b = bracket(LieAlgebra{AlgebraKind::DerPoly, n, nullptr}, x, y);
    ASSERT_EQ(oracle::act_on_polynomials(b, f), xy) << x.str() << " , " << y.str();
  }
}

TEST(LieProperty, GlnBracketIsMatrixCommutator) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& x : gln_basis(n)) {
      for (const auto& y : gln_basis(n)) {
        RationalMatrix got(n, n);
        const auto br = bracket_gln(x, y);
        for (const auto& t : br.terms()) got.add_scaled(t.coeff, oracle::unit(n, t.symbol.p(), t.symbol.q()));
        const auto ex = oracle::unit(n, x.p(), x.q());
        const auto ey = oracle::unit(n, y.p(), y.q());
        ASSERT_EQ(got, ex * ey - ey * ex);
      }
    }
  }
}

TEST(LieProperty, AntisymmetryOnWindows) {
  EXPECT_TRUE(antisymmetry_check({AlgebraKind::Wn, 2, nullptr}, wn_window(2, 1)).ok());
  EXPECT_TRUE(antisymmetry_check({AlgebraKind::WnPlus, 2, nullptr}, wnplus_window(2, 3)).ok());
  EXPECT_TRUE(antisymmetry_check({AlgebraKind::Gln, 3, nullptr}, gln_basis(3)).ok());
}
