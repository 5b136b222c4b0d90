#ifndef JETMOD_CATEGORY_J_HPP
#define JETMOD_CATEGORY_J_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetmod/family.hpp"
#include "jetmod/index.hpp"
#include "jetmod/matrix_polynomial.hpp"
#include "jetmod/report.hpp"
#include "jetmod/representation.hpp"

namespace jetmod {

/// Representative lambda of the weight coset lambda + Z^n.
struct WeightCoset {
  std::vector<Rational> lambda;

  [[nodiscard]] std::size_t n() const { return lambda.size(); }
  /// Representatives differ by an integer vector.
  [[nodiscard]] bool same_coset(const WeightCoset& other) const;
  [[nodiscard]] WeightCoset shifted(const LatticeVector& t) const;
  friend bool operator==(const WeightCoset&, const WeightCoset&) = default;
};

/// e^m (x) v
struct WeightVector {
  LatticeVector m;
  RationalVector v;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// How a module was built, so degree claims can be checked against it.
struct Provenance {
  std::string recipe;  // "jet", "inflation", "correspond", ... or empty
  std::optional<int> N;
  std::string fiber;   // "trivial", "natural", "conatural", "tensor(s,k)", "custom"
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Module J = F(T^n) (x) U in which d_j(s) acts on e^m (x) v as
/// e^{m+s} (x) (m_j Id + D_j(s)) v, with D_j a matrix polynomial in s.
class CategoryJModule {
 public:
  /// D_j(s) = lambda_j Id + sum_{alpha != 0} s^alpha / alpha! rho(z^alpha d_j).
  /// Does not check that rho is a representation.
  static CategoryJModule unchecked(WeightCoset lambda, FiniteRep rep, Provenance provenance = {});

  /// Raw families D_j(s); the representation is read back from their
  /// coefficients. Used for hand-made or corrupted families.
  static CategoryJModule from_polynomials(WeightCoset lambda, std::vector<MatrixPolynomial> dpoly);

  [[nodiscard]] std::size_t n() const noexcept { return lambda_.n(); }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const WeightCoset& lambda() const noexcept { return lambda_; }
  [[nodiscard]] const FiniteRep& rep() const noexcept { return rep_; }
  [[nodiscard]] const MatrixPolynomial& dpoly(std::size_t j) const { return dpoly_.at(j); }
  [[nodiscard]] const std::vector<MatrixPolynomial>& dpolys() const noexcept { return dpoly_; }
  [[nodiscard]] const Provenance& provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  /// Copy with D_j replaced (for negative controls).
  [[nodiscard]] CategoryJModule with_dpoly(std::size_t j, MatrixPolynomial p) const;

  [[nodiscard]] RationalMatrix D(std::size_t j, const LatticeVector& s) const;
  /// Matrix of d_j(s) from the weight space of e^m to that of e^{m+s}.
  [[nodiscard]] RationalMatrix action_matrix(std::size_t j, const LatticeVector& s, const LatticeVector& m) const;

 private:
  CategoryJModule() = default;

  WeightCoset lambda_;
  std::size_t dim_ = 0;
  FiniteRep rep_;
  std::vector<MatrixPolynomial> dpoly_;
  Provenance provenance_;
};

/// Validated construction: rejects anything that is not a W_n^+
/// representation (checked exhaustively) with std::invalid_argument.
CategoryJModule from_wnplus_rep(const WeightCoset& lambda, const FiniteRep& rep, Provenance provenance = {});

WeightVector act_vector_field(const CategoryJModule& M, std::size_t j, const LatticeVector& s, const WeightVector& w);
WeightVector act_function(const CategoryJModule& M, const LatticeVector& m_prime, const WeightVector& w);

/// Matrix of d_j(s) between weight spaces, for any module given as a black box.
using ActionOracle = std::function<RationalMatrix(std::size_t j, const LatticeVector& s, const LatticeVector& m)>;
ActionOracle oracle_of(const CategoryJModule& M);

/// (J3) on every j, s, m', m with |.|_inf <= radius, together with the (J1)
/// weight condition d_j(0) = (lambda_j + m_j) on e^m (x) U.
Report leibniz_check(const CategoryJModule& M, int radius);

/// Commutator of actions against the action of the bracket, for j, k, s, m in
/// the radius box and weights e^{m0} with |m0|_inf <= weight_radius.
Report bracket_compat_check(const CategoryJModule& M, int radius, int weight_radius = 1);

/// D_j(s) = matrix of d_j(s) from weight lambda to lambda + s, on the window.
OperatorFamilyWindow extract_D(const ActionOracle& action, std::size_t n, std::size_t dim, std::size_t j,
                               const std::vector<LatticeVector>& window);
OperatorFamilyWindow extract_D(const CategoryJModule& M, std::size_t j, const std::vector<LatticeVector>& window);

struct Lemma1Sample {
  std::size_t j;
  std::size_t k;
  LatticeVector s;
  LatticeVector m;
};

/// [D_j(s), D_k(m)] = m_j (D_k(s+m) - D_k(m)) - s_k (D_j(s+m) - D_j(s)).
/// Throws std::domain_error if a sample needs a point outside the window.
Report check_lemma1(const std::vector<OperatorFamilyWindow>& D, const std::vector<Lemma1Sample>& samples);
/// Every sample whose four evaluation points lie in the window.
Report check_lemma1(const std::vector<OperatorFamilyWindow>& D);

/// D_j^(alpha) = alpha! * coefficient of s^alpha, alpha != 0.
std::vector<std::pair<MultiIndex, RationalMatrix>> expand_D(const MatrixPolynomial& p);
std::vector<std::pair<MultiIndex, RationalMatrix>> expand_D(const CategoryJModule& M, std::size_t j);

/// The W_n^+ representation z^alpha d_j -> D_j^(alpha) of a module.
FiniteRep coefficients_as_rep(const CategoryJModule& M);

/// [D_j^a, D_k^b] = b_j D_k^{a+b-e_j} - a_k D_j^{a+b-e_k}, checked on every
/// pair of degree up to one more than the support (which is exhaustive).
Report check_relations_37(const FiniteRep& terms);

/// f_j(s, m) = m_j Id + D_j(s) as polynomials in (s_0..s_{n-1}, m_0..m_{n-1});
/// entry (l, r) is the scalar structure polynomial f_{jrl}.
std::vector<MatrixPolynomial> structure_polynomials(const CategoryJModule& M);

struct DegreeReport {
  std::vector<int> per_j;  // poly_degree(D_j), -1 for zero
  int max = -1;
};
DegreeReport degree_report(const CategoryJModule& M);

/// The module with representative lambda + t, and the map
/// e^m (x) v -> e^{m-t} (x) v (or e^m (x) v when shift_map is false), checked
/// as an intertwiner on the radius box.
Report weight_shift_iso(const CategoryJModule& M, const LatticeVector& t, int radius, bool shift_map = true);

}  // namespace jetmod

#endif  // JETMOD_CATEGORY_J_HPP
