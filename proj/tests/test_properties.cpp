#include <gtest/gtest.h>

#include "jetmod/category_j.hpp"
#include "jetmod/jets.hpp"
#include "jetmod/polynomiality.hpp"
#include "oracles.hpp"

using namespace jetmod;

namespace {

struct RandomModule {
  CategoryJModule M;
  std::string label;
};

RandomModule random_module(oracle::Gen& gen, std::size_t n, int max_N) {
  const int N = gen.integer(0, max_N);
  const std::size_t s = static_cast<std::size_t>(gen.integer(0, 1));
  const std::size_t k = s == 1 ? 0 : static_cast<std::size_t>(gen.integer(0, 1));
  WeightCoset lambda;
  for (std::size_t i = 0; i < n; ++i) lambda.lambda.push_back(gen.rational(3));
  const auto spec = JetModuleSpec::tensor_type(n, N, s, k);
  return {from_wnplus_rep(lambda, tensor_module_truncated(spec.fiber, N)),
          "n=" + std::to_string(n) + " N=" + std::to_string(N) + " fiber=" + spec.fiber_name};
}

}  // namespace

TEST(Property, VandermondeConvolution) {
  oracle::Gen gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = gen.integer(0, 12), b = gen.integer(0, 12), m = gen.integer(0, a + b);
    Rational sum;
    for (int i = 0; i <= m; ++i) {
      if (i <= a && m - i <= b) sum += binomial(a, i) * binomial(b, m - i);
    }
    ASSERT_EQ(sum, binomial(a + b, m));
  }
}

TEST(Property, MatrixCommutatorJacobi) {
  oracle::Gen gen(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = static_cast<std::size_t>(gen.integer(1, 4));
    const auto x = gen.matrix(d, d), y = gen.matrix(d, d), z = gen.matrix(d, d);
    ASSERT_TRUE((commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))).is_zero());
  }
}

TEST(Property, NewtonInterpolationReproducesRandomPolynomials) {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int deg = gen.integer(0, 6);
    MatrixPolynomial p(1, 2, 3);
    for (int k = 0; k <= deg; ++k) p.add_term(MultiIndex{k}, gen.matrix(2, 3));
    const int start = gen.integer(-5, 5);
    std::vector<RationalMatrix> samples;
    for (int i = 0; i <= deg + gen.integer(0, 2); ++i) samples.push_back(p.evaluate(LatticeVector{start + i}));
    ASSERT_EQ(newton_interpolation(samples, start), p);
  }
}

TEST(Property, RandomModulesSatisfyLemma1OnRandomSamples) {
  oracle::Gen gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
    const auto [M, label] = random_module(gen, n, 2);
    std::vector<OperatorFamilyWindow> D;
    for (std::size_t j = 0; j < n; ++j) D.push_back(extract_D(M, j, lattice_box(n, 4)));
    std::vector<Lemma1Sample> samples;
    for (int i = 0; i < 40; ++i) {
      samples.push_back({static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1)),
                         static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1)), gen.lattice(n, 2),
                         gen.lattice(n, 2)});
    }
    ASSERT_TRUE(check_lemma1(D, samples).ok()) << label;
    ASSERT_EQ(coefficients_as_rep(M), M.rep()) << label;
  }
}

TEST(Property, ActionsCommuteLikeTheBracket) {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
    const auto [M, label] = random_module(gen, n, 2);
    for (int i = 0; i < 30; ++i) {
      const std::size_t j = static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1));
      const std::size_t k = static_cast<std::size_t>(gen.integer(0, static_cast<int>(n) - 1));
      const auto s = gen.lattice(n, 3), m = gen.lattice(n, 3), w = gen.lattice(n, 3);
      const RationalMatrix lhs = M.action_matrix(j, s, m + w) * M.action_matrix(k, m, w) -
                                 M.action_matrix(k, m, s + w) * M.action_matrix(j, s, w);
      // [d_j(s), d_k(m)] = m_j d_k(s+m) - s_k d_j(s+m)
      const RationalMatrix rhs = Rational(m[j]) * M.action_matrix(k, s + m, w) - Rational(s[k]) * M.action_matrix(j, s + m, w);
      ASSERT_EQ(lhs, rhs) << label << " s=" << s.str() << " m=" << m.str();
    }
  }
}

TEST(Property, WeightShiftsAreIsomorphisms) {
  oracle::Gen gen(6);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
    const auto [M, label] = random_module(gen, n, 1);
    ASSERT_TRUE(weight_shift_iso(M, gen.lattice(n, 3), 1).ok()) << label;
  }
}

TEST(Property, RankOneDetectionRecoversRandomModules) {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 12; ++trial) {
    const auto [M, label] = random_module(gen, 1, 4);
    const int hi = std::max(10, static_cast<int>(lemma2_bound(M.dim())) + 1);
    const auto f = extract_D(M, 0, [&] {
      std::vector<LatticeVector> w;
      for (int s = -4; s <= hi; ++s) w.push_back(LatticeVector{s});
      return w;
    }());
    const DetectionReport d = detect_polynomial_rank1(f, M.dim());
    ASSERT_TRUE(d.polynomial_found()) << label << ": " << d.reason;
    ASSERT_EQ(d.polynomial, M.dpoly(0)) << label;
    const Lemma4Result l4 = lemma4_check(f, 8);
    ASSERT_TRUE(l4.ok()) << label;
  }
}

TEST(Property, CorruptingOneSampleIsAlwaysNoticed) {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 12; ++trial) {
    const auto [M, label] = random_module(gen, 1, 3);
    const int hi = std::max(10, static_cast<int>(lemma2_bound(M.dim())) + 1);
    std::vector<LatticeVector> w;
    for (int s = -4; s <= hi; ++s) w.push_back(LatticeVector{s});
    OperatorFamilyWindow f = extract_D(M, 0, w);
    const int at = gen.integer(-4, hi);
    const auto r = static_cast<std::size_t>(gen.integer(0, static_cast<int>(M.dim()) - 1));
    const auto c = static_cast<std::size_t>(gen.integer(0, static_cast<int>(M.dim()) - 1));
    f.insert(LatticeVector{at}, f.at(at) + RationalMatrix::unit(M.dim(), M.dim(), r, c));
    const DetectionReport d = detect_polynomial_rank1(f, M.dim());
    ASSERT_FALSE(d.polynomial_found()) << label << " corrupted at " << at;
  }
}

TEST(Property, FiltrationIsInvariantForRandomLevels) {
  oracle::Gen gen(9);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
    const int N = gen.integer(1, 2);
    const int l = gen.integer(0, N - 1);
    const auto spec = JetModuleSpec::tensor_type(n, N, 0, static_cast<std::size_t>(gen.integer(0, 1)));
    ASSERT_TRUE(filtration_submodule(spec, l, 1).ok()) << "n=" << n << " N=" << N << " l=" << l;
  }
}
