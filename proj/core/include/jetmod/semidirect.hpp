#ifndef JETMOD_SEMIDIRECT_HPP
#define JETMOD_SEMIDIRECT_HPP

#include <cstddef>
#include <memory>
#include <vector>

#include "jetmod/category_j.hpp"
#include "jetmod/family.hpp"
#include "jetmod/lie.hpp"
#include "jetmod/matrix_polynomial.hpp"
#include "jetmod/report.hpp"
#include "jetmod/representation.hpp"

namespace jetmod {

using GdotPtr = std::shared_ptr<const FiniteLieAlgebra>;

/// Matrices rho(e_0), .., rho(e_{dim-1}) of a representation of gdot.
using GdotRep = std::vector<RationalMatrix>;

/// ad(e_i) for every basis element.
GdotRep gdot_adjoint(const FiniteLieAlgebra& g);
/// rho([e_i, e_k]) = [rho(e_i), rho(e_k)] on every pair.
Report gdot_rep_check(const FiniteLieAlgebra& g, const GdotRep& rho);

/// Finite-dimensional module over W_n^+ plus C[z] (x) gdot: rho(z^a d_j) and
/// rho(z^b g) = g^(b), held as one FiniteRep of kind GPlus.
class GPlusRep {
 public:
  GPlusRep() = default;
  GPlusRep(std::size_t n, GdotPtr gdot, std::size_t dim);
  explicit GPlusRep(FiniteRep rep);

  [[nodiscard]] std::size_t n() const noexcept { return rep_.n(); }
  [[nodiscard]] std::size_t dim() const noexcept { return rep_.dim(); }
  [[nodiscard]] const GdotPtr& gdot() const noexcept { return rep_.algebra().gdot; }
  [[nodiscard]] const FiniteRep& rep() const noexcept { return rep_; }

  void set_vector_field(std::size_t j, const MultiIndex& alpha, RationalMatrix m);
  void set_loop(const MultiIndex& beta, std::size_t g, RationalMatrix m);
  [[nodiscard]] RationalMatrix loop(const MultiIndex& beta, std::size_t g) const;

  /// The W_n^+ symbols as a W_n^+ representation.
  [[nodiscard]] FiniteRep wn_part() const;
  /// Supported (beta, g) pairs with their matrices, in symbol order.
  [[nodiscard]] std::vector<std::pair<BasisSymbol, RationalMatrix>> loop_generators() const;

  friend bool operator==(const GPlusRep&, const GPlusRep&) = default;

 private:
  FiniteRep rep_;
};

/// Category J module for W_n plus the loop algebra: the vector-field part and
/// g(s) = sum_b s^b / b! rho(z^b g), with
///   (e^s g)(e^m v) = e^{m+s} g(s) v.
class GModule {
 public:
  GModule(CategoryJModule wn, GdotPtr gdot, std::vector<MatrixPolynomial> gpoly);

  [[nodiscard]] const CategoryJModule& wn() const noexcept { return wn_; }
  [[nodiscard]] const GdotPtr& gdot() const noexcept { return gdot_; }
  [[nodiscard]] std::size_t n() const noexcept { return wn_.n(); }
  [[nodiscard]] std::size_t dim() const noexcept { return wn_.dim(); }
  [[nodiscard]] const MatrixPolynomial& gpoly(std::size_t g) const { return gpoly_.at(g); }
  [[nodiscard]] const std::vector<MatrixPolynomial>& gpolys() const noexcept { return gpoly_; }

  [[nodiscard]] RationalMatrix g_of(std::size_t g, const LatticeVector& s) const { return gpoly_.at(g).evaluate(s); }
  /// Matrix of e^s g from the weight space of e^m to that of e^{m+s}.
  [[nodiscard]] RationalMatrix loop_action_matrix(std::size_t g, const LatticeVector& s, const LatticeVector& m) const;
  /// Matrix of any Wn or Loop symbol from e^m to e^{m + degree}.
  [[nodiscard]] RationalMatrix symbol_action_matrix(const BasisSymbol& x, const LatticeVector& m) const;

  /// Copy with g(s) replaced (for negative controls).
  [[nodiscard]] GModule with_gpoly(std::size_t g, MatrixPolynomial p) const;

 private:
  CategoryJModule wn_;
  GdotPtr gdot_;
  std::vector<MatrixPolynomial> gpoly_;
};

/// Validates R exhaustively (std::invalid_argument naming the failing pair)
/// and builds the module.
GModule from_gplus_rep(const WeightCoset& lambda, const GPlusRep& R, Provenance provenance = {});

/// Same construction without the representation check.
GModule gmodule_unchecked(const WeightCoset& lambda, const GPlusRep& R, Provenance provenance = {});

/// Reads R back: D_j^(a) from the vector-field part and g^(b) = b! times the
/// coefficient of s^b in g(s).
GPlusRep coefficients_as_gplus(const GModule& M);

/// [D_j(s), g(m)] = m_j (g(s+m) - g(m)) on the radius box.
Report check_53(const GModule& M, int radius);

/// Loop-loop pairs: [g^(a), h^(b)] = [g, h]^(a+b); vector-field/loop pairs:
/// [D_j^(a), g^(b)] = b_j g^(a+b-e_j); vector-field pairs as in W_n^+. All
/// pairs up to one degree past the support.
Report check_54_55(const GPlusRep& R);

/// Loop action commutes with multiplication by functions, on the radius box.
Report j4_check(const GModule& M, int radius);

/// Commutators of actions of d_j(s), e^s g against the action of their
/// bracket in the semidirect product, on the radius box and weights with
/// |m0| <= weight_radius.
Report loop_bracket_compat_check(const GModule& M, int radius, int weight_radius = 1);

/// g(s) = matrix of e^s g from weight lambda to lambda + s on the window.
OperatorFamilyWindow extract_g(const GModule& M, std::size_t g, const std::vector<LatticeVector>& window);

/// rho(z^a d_j) = 0 for |a| > 1 and rho(z^b g) = 0 for |b| >= 1.
Report gpp_annihilation_check(const GPlusRep& R);

/// From commuting representations of gl_n and gdot on the same space: gl_n is
/// inflated to W_n^+ and g acts as z^0 g. Throws std::invalid_argument if the
/// two do not commute or rho is not a gdot representation.
GPlusRep gplus_from_gln_gdot(const FiniteRep& gl, GdotPtr gdot, const GdotRep& rho);

/// V (x) W with gl_n on V and gdot on W.
GPlusRep gplus_from_tensor(const FiniteRep& gl, GdotPtr gdot, const GdotRep& rho);

/// C[z]/(degree > N) (x) W: vector fields act by derivations on the first
/// factor, z^b g by multiplication by z^b times rho(g). Has loop support up
/// to |b| = N.
GPlusRep gplus_truncated_loop(std::size_t n, int N, GdotPtr gdot, const GdotRep& rho);

}  // namespace jetmod

#endif  // JETMOD_SEMIDIRECT_HPP
