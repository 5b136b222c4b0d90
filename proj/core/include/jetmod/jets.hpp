#ifndef JETMOD_JETS_HPP
#define JETMOD_JETS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "jetmod/category_j.hpp"
#include "jetmod/index.hpp"
#include "jetmod/report.hpp"
#include "jetmod/representation.hpp"

namespace jetmod {

/// N-jets of tensor fields on the n-torus with fiber V (a gl_n module).
struct JetModuleSpec {
  std::size_t n = 1;
  int N = 0;
  FiniteRep fiber;
  std::string fiber_name;  // "trivial", "natural", "conatural", "tensor(s,k)" or "custom"

  static JetModuleSpec tensor_type(std::size_t n, int N, std::size_t s, std::size_t k);
  static JetModuleSpec with_fiber(std::size_t n, int N, FiniteRep fiber, std::string name = "custom");

  /// Jet multi-indices |alpha| <= N in graded-lex order.
  [[nodiscard]] std::vector<MultiIndex> jet_indices() const { return enumerate_multiindices(n, N); }
  /// Rank of the module over the functions: #jet indices * dim V.
  [[nodiscard]] std::size_t rank() const;
  /// Position of w^(alpha) (x) v_i in the fiber basis (alpha-major).
  [[nodiscard]] std::size_t index_of(const MultiIndex& alpha, std::size_t fiber_index) const;
};

/// e^m w^(alpha) v_i
struct JetBasisIndex {
  LatticeVector m;
  MultiIndex alpha;
  std::size_t fiber = 0;
};

/// One output term: coefficient * tau^tau_power on basis element `target`
/// (tau stands for 2 pi i, which only appears without the rescaling).
struct JetTerm {
  std::size_t target;
  Rational coeff;
  int tau_power = 0;
};

/// d_j(s) applied to e^m w^(alpha) v following the infinitesimal jet action:
/// a first-order term m_j, a term alpha_j s^beta / beta! w^(alpha - e_j + beta)
/// (beta > 0) and sum_k s^{beta + e_k} / beta! (E^k_j v)^(alpha + beta)
/// (beta >= 0), truncated at order N. With `rescaled` false the terms are
/// taken in the unscaled jets v^(alpha), where powers of tau survive.
std::vector<JetTerm> jet_action_terms(const JetModuleSpec& spec, std::size_t j, const LatticeVector& s,
                                      const JetBasisIndex& b, bool rescaled = true);

/// The rescaled action as a weight vector over the fiber basis at degree m+s.
/// Throws std::domain_error if |alpha| > N.
WeightVector jet_action(const JetModuleSpec& spec, std::size_t j, const LatticeVector& s, const JetBasisIndex& b);

/// The action on jets of functions, written from the function-jet formula
/// alone (no fiber term).
WeightVector function_jet_action(std::size_t n, int N, std::size_t j, const LatticeVector& s, const JetBasisIndex& b);

/// Coefficient of basis element `target` (at degree m+s) in d_j(s) applied to
/// basis element `source` at degree m.
struct CoefficientEntry {
  std::size_t j;
  LatticeVector s;
  LatticeVector m;
  std::size_t source;
  std::size_t target;
  Rational coeff;
  int tau_power = 0;
  friend bool operator==(const CoefficientEntry&, const CoefficientEntry&) = default;
};
using CoefficientTable = std::vector<CoefficientEntry>;

/// Table of the jet action for every j, s and m with |.|_inf <= radius.
CoefficientTable jet_coefficient_table(const JetModuleSpec& spec, int radius, bool rescaled = true);
/// Table of any category J module over the same window.
CoefficientTable module_coefficient_table(const CategoryJModule& M, int radius);

/// The module F(T^n) (x) V^(N) at lambda = 0.
CategoryJModule tensor_truncation_module(const JetModuleSpec& spec);

/// Compares the serialized jet table with the table of F(T^n) (x) V^(N) under
/// w^(alpha) (x) v <-> z^alpha (x) v.
Report iso_to_tensor_truncation(const JetModuleSpec& spec, int radius, bool rescaled = true);

struct FiltrationResult {
  std::vector<std::size_t> submodule_basis;  // fiber positions with |alpha| > l
  Report invariance{"filtration_invariance"};
  Report quotient{"filtration_quotient"};
  [[nodiscard]] bool ok() const { return invariance.ok() && quotient.ok(); }
};

/// Jets whose derivatives up to order l vanish: checks that they span a
/// submodule and that the quotient has the structure constants of the
/// order-l jet module. Throws std::domain_error if l > N or l < 0.
FiltrationResult filtration_submodule(const JetModuleSpec& spec, int l, int radius);

}  // namespace jetmod

#endif  // JETMOD_JETS_HPP
