#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "jetmod/representation.hpp"
#include "oracles.hpp"

using namespace jetmod;

namespace {

BasisSymbol zd(std::size_t j, MultiIndex a) { return BasisSymbol::wn_plus(j, a); }

FiniteRep jordan_rep() {
  FiniteRep r({AlgebraKind::WnPlus, 1, nullptr}, 2);
  r.set(zd(0, {1}), RationalMatrix{{0, 1}, {0, 0}});
  return r;
}

}  // namespace

TEST(GlnModules, NaturalAndConatural) {
  const FiniteRep nat = gln_natural(2);
  const FiniteRep co = gln_conatural(2);
  const auto E01 = BasisSymbol::gln(2, 0, 1);
  const RationalVector dx1{0, 1};
  const RationalVector dx0{1, 0};
  EXPECT_EQ(nat.of(E01) * std::span<const Rational>(dx1), dx0);
  EXPECT_EQ(nat.of(E01) * std::span<const Rational>(dx0), (RationalVector{0, 0}));
  EXPECT_EQ(co.of(E01) * std::span<const Rational>(dx0), (RationalVector{0, -1}));
  EXPECT_TRUE(rep_check_exhaustive(nat).ok());
  EXPECT_TRUE(rep_check_exhaustive(co).ok());
}

TEST(GlnModules, Tensors) {
  const FiniteRep t = rep_tensor(gln_natural(2), gln_conatural(2));
  EXPECT_EQ(t.dim(), 4u);
  for (std::size_t p = 0; p < 2; ++p) {
    for (std::size_t q = 0; q < 2; ++q) {
      if (p != q) EXPECT_TRUE(t.of(BasisSymbol::gln(2, p, q)).trace().is_zero());
    }
  }
  // Kronecker sum written out.
  const auto x = BasisSymbol::gln(2, 0, 0);
  EXPECT_EQ(t.of(x), kronecker(gln_natural(2).of(x), RationalMatrix::identity(2)) +
                         kronecker(RationalMatrix::identity(2), gln_conatural(2).of(x)));
  const FiniteRep nat = gln_natural(3);
  const FiniteRep with_unit = rep_tensor(nat, gln_trivial(3));
  EXPECT_EQ(with_unit.generators(), nat.generators());
  for (std::size_t s = 0; s <= 2; ++s) {
    for (std::size_t k = 0; k + s <= 2; ++k) {
      const FiniteRep v = tensor_fiber(2, s, k);
      EXPECT_EQ(v.dim(), std::size_t{1} << (s + k));
      EXPECT_TRUE(rep_check_exhaustive(v).ok());
    }
  }
}

TEST(Inflation, Examples) {
  const FiniteRep R = inflate_gln_to_wnplus(gln_natural(2));
  EXPECT_EQ(R.of(zd(1, {1, 0})), oracle::unit(2, 0, 1));
  EXPECT_TRUE(R.of(zd(0, {2, 0})).is_zero());
  EXPECT_TRUE(inflate_gln_to_wnplus(gln_trivial(2)).generators().empty());
  EXPECT_TRUE(rep_check(R, wnplus_window(2, 2)).ok());
}

TEST(TensorTruncation, Examples) {
  const FiniteRep t1 = tensor_module_truncated(gln_trivial(1), 1);
  EXPECT_EQ(t1.of(zd(0, {1})), (RationalMatrix{{0, 0}, {0, 1}}));
  for (int b = 2; b <= 4; ++b) EXPECT_TRUE(t1.of(zd(0, {b})).is_zero());

  EXPECT_TRUE(tensor_module_truncated(gln_trivial(1), 0).generators().empty());

  const FiniteRep t3 = tensor_module_truncated(gln_natural(1), 0);
  EXPECT_EQ(t3.of(zd(0, {1})), (RationalMatrix{{1}}));
  EXPECT_TRUE(t3.of(zd(0, {2})).is_zero());
}

// z^b d_j on C[z]/(deg > N) (x) natural is the Lie derivative of 1-forms
// followed by truncation.
TEST(TensorTruncation, MatchesLieDerivativeOfOneForms) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (int N = 0; N <= 3; ++N) {
      const FiniteRep R = tensor_module_truncated(gln_natural(n), N);
      for (const auto& x : wnplus_window(n, N + 2)) {
        RationalMatrix expected(R.dim(), R.dim());
        for (const auto& a : enumerate_multiindices(n, N)) {
          for (std::size_t i = 0; i < n; ++i) {
            const std::size_t col = truncated_index(a, i, n, N);
            for (const auto& [key, c] : oracle::lie_derivative_one_form(x.alpha(), x.j(), a, i)) {
              if (key.first.degree() <= N) expected(truncated_index(key.first, key.second, n, N), col) += c;
            }
          }
        }
        ASSERT_EQ(R.of(x), expected) << "n=" << n << " N=" << N << " " << x.str();
      }
    }
  }
}

TEST(RepCheck, PassesAndNamesCorruptedPair) {
  EXPECT_TRUE(rep_check(inflate_gln_to_wnplus(gln_natural(2)), wnplus_window(2, 2)).ok());
  const FiniteRep R = tensor_module_truncated(gln_natural(2), 2);
  EXPECT_TRUE(rep_check(R, wnplus_window(2, 3)).ok());

  FiniteRep bad = R;
  RationalMatrix m = bad.of(zd(0, {1, 1}));
  m(0, 0) += 1;
  bad.set(zd(0, {1, 1}), m);
  const Report r = rep_check(bad, wnplus_window(2, 3));
  ASSERT_FALSE(r.ok());
  bool named = false;
  for (const auto& v : r.violations) named = named || v.sample.find(zd(0, {1, 1}).str()) != std::string::npos;
  EXPECT_TRUE(named);
  EXPECT_FALSE(rep_check_exhaustive(bad).ok());
}

TEST(RepCheck, ForeignSymbolOrShape) {
  FiniteRep r({AlgebraKind::WnPlus, 1, nullptr}, 2);
  EXPECT_THROW(r.set(BasisSymbol::wn(0, {1}), RationalMatrix(2, 2)), std::domain_error);
  EXPECT_THROW(r.set(zd(0, {1}), RationalMatrix(3, 3)), std::domain_error);
}

TEST(EGrading, Examples) {
  const EGrading g = e_grading(tensor_module_truncated(gln_trivial(1), 2));
  EXPECT_TRUE(g.report.ok());
  ASSERT_EQ(g.spaces.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(g.spaces[i].first, Rational(static_cast<int>(i)));
    EXPECT_EQ(g.spaces[i].second.size(), 1u);
  }
  const EGrading inf = e_grading(inflate_gln_to_wnplus(gln_natural(2)));
  ASSERT_EQ(inf.spaces.size(), 1u);
  EXPECT_EQ(inf.spaces[0].first, Rational(1));

  const EGrading zero = e_grading(FiniteRep({AlgebraKind::WnPlus, 2, nullptr}, 2));
  ASSERT_EQ(zero.spaces.size(), 1u);
  EXPECT_EQ(zero.spaces[0].first, Rational(0));
  EXPECT_EQ(zero.spaces[0].second.size(), 2u);

  EXPECT_TRUE(e_grading(jordan_rep()).report.indeterminate);
}

TEST(Lemma2, BoundAndCount) {
  EXPECT_EQ(lemma2_bound(1), 1u);
  EXPECT_EQ(lemma2_bound(3), 7u);

  const FiniteRep R = tensor_module_truncated(gln_trivial(1), 5);
  std::vector<std::pair<LieElement, Rational>> family;
  std::set<int> nonzero;
  for (int b = 1; b <= 8; ++b) {
    family.emplace_back(LieElement(zd(0, {b})), Rational(b - 1));
    // z^b d acts on z^a by a z^{a+b-1}: nonzero iff some 1 <= a <= 5 keeps a+b-1 <= 5.
    if (b <= 5) nonzero.insert(b - 1);
  }
  const Report r = lemma2_bound_check(R, euler_field(1), family);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(nonzero, (std::set<int>{0, 1, 2, 3, 4}));
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.front().find("5, bound 31"), std::string::npos) << r.notes.front();

  family.emplace_back(LieElement(zd(0, {2})), Rational(7));
  EXPECT_THROW((void)lemma2_bound_check(R, euler_field(1), family), std::domain_error);
}

TEST(Commutant, Examples) {
  EXPECT_EQ(commutant(FiniteRep({AlgebraKind::WnPlus, 1, nullptr}, 2)).size(), 4u);
  EXPECT_EQ(commutant(jordan_rep()).size(), 2u);
  EXPECT_EQ(commutant(inflate_gln_to_wnplus(gln_natural(2))).size(), 1u);
}

TEST(Probe, Examples) {
  EXPECT_EQ(indecomposability_probe(jordan_rep()).verdict, ProbeVerdict::Indecomposable);
  const ProbeResult split = indecomposability_probe(rep_direct_sum(inflate_gln_to_wnplus(gln_trivial(1)),
                                                                   inflate_gln_to_wnplus(gln_trivial(1))));
  ASSERT_EQ(split.verdict, ProbeVerdict::Decomposes);
  ASSERT_TRUE(split.projection);
  const RationalMatrix& P = *split.projection;
  EXPECT_EQ(P * P, P);
  EXPECT_EQ(P.trace(), Rational(1));
  EXPECT_EQ(indecomposability_probe(inflate_gln_to_wnplus(gln_natural(2))).verdict, ProbeVerdict::Indecomposable);
  // No constant vector field in W_1^+, so the constants split off C[z]/(z^4).
  const ProbeResult jets = indecomposability_probe(tensor_module_truncated(gln_trivial(1), 3));
  ASSERT_EQ(jets.verdict, ProbeVerdict::Decomposes);
  EXPECT_EQ(jets.commutant_dim, 2u);
  EXPECT_EQ(jets.projection->trace(), Rational(1));
}

TEST(RepProperty, RandomDirectSumsAndTensorsStayRepresentations) {
  oracle::Gen gen(303);
  const std::vector<FiniteRep> pool{gln_trivial(2), gln_natural(2), gln_conatural(2), tensor_fiber(2, 1, 1)};
  for (int trial = 0; trial < 12; ++trial) {
    const FiniteRep& a = pool[static_cast<std::size_t>(gen.integer(0, 3))];
    const FiniteRep& b = pool[static_cast<std::size_t>(gen.integer(0, 3))];
    const FiniteRep t = gen.coin() ? rep_tensor(a, b) : rep_direct_sum(a, b);
    ASSERT_TRUE(rep_check_exhaustive(t).ok());
    const FiniteRep big = tensor_module_truncated(t, gen.integer(0, 1));
    ASSERT_TRUE(rep_check_exhaustive(big).ok());
  }
}
