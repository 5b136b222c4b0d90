#ifndef JETMOD_REPRESENTATION_HPP
#define JETMOD_REPRESENTATION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jetmod/lie.hpp"
#include "jetmod/matrix.hpp"
#include "jetmod/report.hpp"

namespace jetmod {

/// Finite-dimensional representation given by the matrices of finitely many
/// basis symbols; every other basis symbol acts as zero.
class FiniteRep {
 public:
  using Generators = std::map<BasisSymbol, RationalMatrix>;

  FiniteRep() = default;
  FiniteRep(LieAlgebra algebra, std::size_t dim);

  [[nodiscard]] const LieAlgebra& algebra() const noexcept { return algebra_; }
  [[nodiscard]] std::size_t n() const noexcept { return algebra_.n; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const Generators& generators() const noexcept { return gens_; }

  /// Sets rho(x); a zero matrix removes x from the support. Throws
  /// std::domain_error if x is foreign to the algebra or the shape is wrong.
  void set(const BasisSymbol& x, RationalMatrix m);
  /// rho(x), the zero matrix outside the support.
  [[nodiscard]] RationalMatrix of(const BasisSymbol& x) const;
  [[nodiscard]] RationalMatrix of(const LieElement& x) const;
  [[nodiscard]] const RationalMatrix* find(const BasisSymbol& x) const;

  /// Largest |alpha| among supported WnPlus / PolyLoop symbols, -1 if none.
  [[nodiscard]] int max_support_degree() const;

  friend bool operator==(const FiniteRep& a, const FiniteRep& b) {
    return a.algebra_.kind == b.algebra_.kind && a.algebra_.n == b.algebra_.n && a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }

 private:
  LieAlgebra algebra_;
  std::size_t dim_ = 0;
  Generators gens_;
};

// gl_n modules. The natural module has basis dx^0..dx^{n-1} with
// E^p_q dx^i = delta^i_q dx^p; the conatural one has basis d/dx^i with
// E^p_q d/dx^i = -delta^p_i d/dx^q.
FiniteRep gln_natural(std::size_t n);
FiniteRep gln_conatural(std::size_t n);
FiniteRep gln_trivial(std::size_t n, std::size_t dim = 1);
/// (conatural)^{(x) s} (x) (natural)^{(x) k}; the trivial module when s = k = 0.
FiniteRep tensor_fiber(std::size_t n, std::size_t s, std::size_t k);

/// rho(x) = rho1(x) (x) Id + Id (x) rho2(x).
FiniteRep rep_tensor(const FiniteRep& r1, const FiniteRep& r2);
/// Block-diagonal direct sum.
FiniteRep rep_direct_sum(const FiniteRep& r1, const FiniteRep& r2);

/// Pulls a gl_n module back along W_n^+ -> W_n^+/W_n^{++} = gl_n:
/// z^{e_p} d_q -> E^p_q, higher symbols -> 0.
FiniteRep inflate_gln_to_wnplus(const FiniteRep& v);

/// The quotient V^(N) of C[z] (x) V by the monomials of degree > N, basis
/// (graded-lex alpha) x (basis of V), with
///   z^b d_j (z^a v) = a_j z^{a+b-e_j} v + sum_k b_k z^{a+b-e_k} (E^k_j v).
/// With `derivations` set the module is over Der C[z] (b = 0 included).
FiniteRep tensor_module_truncated(const FiniteRep& v, int N, bool derivations = false);

/// Index of z^alpha (x) v_i in the basis of tensor_module_truncated.
std::size_t truncated_index(const MultiIndex& alpha, std::size_t fiber_index, std::size_t fiber_dim, int N);

/// rho([x, y]) = [rho(x), rho(y)] for every pair drawn from `basis`.
Report rep_check(const FiniteRep& r, std::span<const BasisSymbol> basis);

/// Symbols that make rep_check exhaustive: the whole algebra for gl_n and
/// every symbol of degree <= D + 1 for the polynomial algebras, D being the
/// largest supported degree (any bracket involving a higher symbol lands
/// outside the support on both sides).
std::vector<BasisSymbol> exhaustive_check_basis(const FiniteRep& r);
Report rep_check_exhaustive(const FiniteRep& r);

/// Eigenspace decomposition of rho(E), E = sum_j z_j d_j.
struct EGrading {
  std::vector<std::pair<Rational, std::vector<RationalVector>>> spaces;
  Report report;  // shift law; indeterminate if rho(E) is not Q-diagonalizable
};
EGrading e_grading(const FiniteRep& r);

/// The Euler field E = sum_j z_j d_j as an element of W_n^+.
LieElement euler_field(std::size_t n);

/// (dim U)^2 - dim U + 1
std::size_t lemma2_bound(std::size_t dim);

/// Counts the distinct ad-eigenvalues nu_k of y_k with rho(y_k) != 0 and
/// checks the count against lemma2_bound. Throws std::domain_error when some
/// pair fails [x, y_k] = nu_k y_k.
Report lemma2_bound_check(const FiniteRep& r, const LieElement& x,
                          const std::vector<std::pair<LieElement, Rational>>& family);

/// Basis of {C : C rho(x) = rho(x) C for every supported x}.
std::vector<RationalMatrix> commutant(const FiniteRep& r);

enum class ProbeVerdict { Indecomposable, Decomposes, Indeterminate };
std::string probe_verdict_name(ProbeVerdict v);

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::Indeterminate;
  std::size_t commutant_dim = 0;
  std::optional<RationalMatrix> projection;  // set iff verdict == Decomposes
  std::string reason;
};

/// Decides indecomposability up to rational splitting: an idempotent in the
/// commutant proves a decomposition, a commutant of the form Q Id + (nilpotent
/// algebra) proves indecomposability, anything else is indeterminate.
ProbeResult indecomposability_probe(const FiniteRep& r);

}  // namespace jetmod

#endif  // JETMOD_REPRESENTATION_HPP
