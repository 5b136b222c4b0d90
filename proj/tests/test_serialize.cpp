#include <gtest/gtest.h>

#include <memory>

#include "jetmod/jets.hpp"
#include "jetmod/semidirect.hpp"
#include "jetmod/serialize.hpp"
#include "oracles.hpp"

using namespace jetmod;

TEST(Serialize, Scalars) {
  EXPECT_EQ(encode(Rational(-3, 4)), json("-3/4"));
  EXPECT_EQ(decode_rational(json(5)), Rational(5));
  EXPECT_EQ(decode_rational(json("6/8")), Rational(3, 4));
  EXPECT_THROW((void)decode_rational(json("1/0")), FormatError);
  EXPECT_THROW((void)decode_rational(json(1.5)), FormatError);
  EXPECT_EQ(decode_lattice(encode(LatticeVector{-1, 4})), (LatticeVector{-1, 4}));
  EXPECT_EQ(decode_multiindex(encode(MultiIndex{0, 3})), (MultiIndex{0, 3}));
  EXPECT_THROW((void)decode_multiindex(json::array({-1})), FormatError);
}

TEST(Serialize, MatrixShapeIsChecked) {
  const RationalMatrix m{{1, Rational(1, 2)}, {0, -7}};
  EXPECT_EQ(decode_matrix(encode(m)), m);
  EXPECT_THROW((void)decode_matrix(json::parse(R"([["1","2"],["3"]])")), FormatError);
}

TEST(Serialize, SymbolsRoundtrip) {
  for (const auto& x : {BasisSymbol::wn(1, {2, -1}), BasisSymbol::wn_plus(0, {1, 1}), BasisSymbol::gln(2, 1, 0),
                        BasisSymbol::loop({0, 3}, 2), BasisSymbol::poly_loop({2, 0}, 1)}) {
    EXPECT_EQ(decode_symbol(encode(x), 2), x) << x.str();
  }
  EXPECT_THROW((void)decode_symbol(json::parse(R"({"kind":"wn","j":0,"s":[1]})"), 2), FormatError);
}

TEST(Serialize, RepresentationsAndModulesRoundtrip) {
  const FiniteRep R = tensor_module_truncated(gln_natural(2), 2);
  EXPECT_EQ(decode_rep(parse_json(encode(R).dump())), R);
  EXPECT_EQ(decode_rep(encode(gln_conatural(3))), gln_conatural(3));

  const CategoryJModule M = tensor_truncation_module(JetModuleSpec::tensor_type(2, 1, 0, 1));
  const CategoryJModule back = decode_module(parse_json(encode(M).dump()));
  EXPECT_EQ(back.rep(), M.rep());
  EXPECT_EQ(back.dpolys(), M.dpolys());
  EXPECT_EQ(back.lambda(), M.lambda());
  EXPECT_EQ(back.provenance(), M.provenance());
  EXPECT_EQ(back.provenance().N, std::optional<int>(1));
  EXPECT_EQ(back.provenance().fiber, "natural");
}

TEST(Serialize, LoopRepRoundtrip) {
  const auto g = std::make_shared<const FiniteLieAlgebra>(FiniteLieAlgebra::sl2());
  const GPlusRep R = gplus_truncated_loop(1, 2, g, gdot_adjoint(*g));
  const GPlusRep back = decode_gplus(parse_json(encode(R).dump()));
  EXPECT_EQ(back, R);
  EXPECT_EQ(*back.gdot(), *g);
  EXPECT_EQ(decode_lie_algebra(encode(*g)), *g);
}

TEST(Serialize, FamilyAndPolynomialRoundtrip) {
  oracle::Gen gen(77);
  MatrixPolynomial p(2, 2, 2);
  for (const auto& a : enumerate_multiindices(2, 2)) p.add_term(a, gen.matrix(2, 2));
  EXPECT_EQ(decode_polynomial(encode(p)), p);
  const auto f = OperatorFamilyWindow::sample(p, lattice_box(2, 1));
  EXPECT_EQ(decode_family(parse_json(encode(f).dump())), f);
}

TEST(Serialize, JetSpec) {
  const auto a = decode_jet_spec(json::parse(R"({"n":2,"N":2,"tensor_type":{"s":1,"k":0}})"));
  EXPECT_EQ(a.rank(), 12u);
  EXPECT_EQ(a.fiber_name, "conatural");
  const auto b = decode_jet_spec(json{{"n", 1}, {"N", 1}, {"fiber", encode(gln_natural(1))}});
  EXPECT_EQ(b.fiber, gln_natural(1));
  EXPECT_THROW((void)decode_jet_spec(json::parse(R"({"n":1,"N":-2,"tensor_type":{"s":0,"k":0}})")), FormatError);
}

TEST(Serialize, MalformedText) {
  EXPECT_THROW((void)parse_json("{\"n\": 1,"), FormatError);
  EXPECT_THROW((void)decode_rep(json::parse(R"({"algebra":"wn_plus","n":1,"dim":1,"generators":[{"symbol":{"kind":"gln","p":0,"q":0},"matrix":[["1"]]}]})")),
               FormatError);
}

TEST(Serialize, CanonicalTableText) {
  const auto spec = JetModuleSpec::tensor_type(1, 1, 0, 0);
  const auto t = jet_coefficient_table(spec, 1);
  EXPECT_EQ(serialize_table(t), serialize_table(jet_coefficient_table(spec, 1)));
  EXPECT_EQ(serialize_table(t), encode(t).dump());
}
