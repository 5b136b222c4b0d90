#ifndef JETMOD_SERIALIZE_HPP
#define JETMOD_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "jetmod/category_j.hpp"
#include "jetmod/family.hpp"
#include "jetmod/jets.hpp"
#include "jetmod/lie.hpp"
#include "jetmod/matrix_polynomial.hpp"
#include "jetmod/polynomiality.hpp"
#include "jetmod/representation.hpp"
#include "jetmod/semidirect.hpp"

// JSON forms. Rationals are "p/q" strings (integers may also be plain
// numbers on input), matrices are arrays of rows, indices are 0-based.
namespace jetmod {

using json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json encode(const Rational& r);
json encode(const RationalMatrix& m);
json encode(const LatticeVector& v);
json encode(const MultiIndex& a);
json encode(const BasisSymbol& x);
json encode(const FiniteLieAlgebra& g);
json encode(const FiniteRep& r);
json encode(const GPlusRep& r);
json encode(const WeightCoset& lambda);
json encode(const Provenance& p);
json encode(const CategoryJModule& M);
json encode(const GModule& M, const GPlusRep& source);
json encode(const MatrixPolynomial& p);
json encode(const OperatorFamilyWindow& f);
json encode(const Report& r);
json encode(const CoefficientTable& t);
json encode(const DetectionReport& d);
json encode(const ProbeResult& p);
json encode(const DegreeReport& d);

Rational decode_rational(const json& j);
RationalMatrix decode_matrix(const json& j);
LatticeVector decode_lattice(const json& j);
MultiIndex decode_multiindex(const json& j);
BasisSymbol decode_symbol(const json& j, std::size_t n);
FiniteLieAlgebra decode_lie_algebra(const json& j);
/// Generators are checked for membership and shape, not for the bracket.
FiniteRep decode_rep(const json& j);
GPlusRep decode_gplus(const json& j);
WeightCoset decode_weight(const json& j);
Provenance decode_provenance(const json& j);
/// Builds without the representation check, so damaged files can still be
/// verified (and fail).
CategoryJModule decode_module(const json& j);
MatrixPolynomial decode_polynomial(const json& j);
OperatorFamilyWindow decode_family(const json& j);
/// {"n", "N", "tensor_type": {"s", "k"}} or {"n", "N", "fiber": <rep>}.
JetModuleSpec decode_jet_spec(const json& j);

/// Canonical text of a coefficient table (compact dump).
std::string serialize_table(const CoefficientTable& t);

/// Parses text, wrapping parser errors in FormatError.
json parse_json(const std::string& text);

}  // namespace jetmod

#endif  // JETMOD_SERIALIZE_HPP
