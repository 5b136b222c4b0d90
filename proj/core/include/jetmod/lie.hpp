#ifndef JETMOD_LIE_HPP
#define JETMOD_LIE_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "jetmod/index.hpp"
#include "jetmod/matrix.hpp"
#include "jetmod/report.hpp"

namespace jetmod {

/// Basis element of one of the algebras below. All indices are 0-based.
///
///   Wn        d_j(s)              j, s
///   WnPlus    z^alpha d/dz_j      j, alpha (alpha = 0 only in Der C[z])
///   Gln       E^p_q               p, q
///   Loop      e^s (x) g           s, g
///   PolyLoop  z^beta (x) g        beta, g
///
/// The vector slot holds s, alpha or beta and always has n entries, so two
/// symbols compare equal exactly when they denote the same basis element.
class BasisSymbol {
 public:
  enum class Kind : std::uint8_t { Wn, WnPlus, Gln, Loop, PolyLoop };

  BasisSymbol() = default;

  static BasisSymbol wn(std::size_t j, const LatticeVector& s);
  static BasisSymbol wn_plus(std::size_t j, const MultiIndex& alpha);
  static BasisSymbol gln(std::size_t n, std::size_t p, std::size_t q);
  static BasisSymbol loop(const LatticeVector& s, std::size_t g);
  static BasisSymbol poly_loop(const MultiIndex& beta, std::size_t g);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t n() const noexcept { return vec_.size(); }
  [[nodiscard]] std::size_t j() const noexcept { return static_cast<std::size_t>(a_); }
  [[nodiscard]] std::size_t p() const noexcept { return static_cast<std::size_t>(a_); }
  [[nodiscard]] std::size_t q() const noexcept { return static_cast<std::size_t>(b_); }
  [[nodiscard]] std::size_t g() const noexcept { return static_cast<std::size_t>(b_); }
  /// Fourier degree of Wn and Loop symbols.
  [[nodiscard]] const LatticeVector& s() const noexcept { return vec_; }
  /// Exponent of WnPlus and PolyLoop symbols.
  [[nodiscard]] MultiIndex alpha() const { return MultiIndex(vec_.entries()); }

  [[nodiscard]] std::string str() const;

  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
  friend std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b);

 private:
  Kind kind_ = Kind::Wn;
  int a_ = 0;
  int b_ = 0;
  LatticeVector vec_;
};

/// Finite formal linear combination of basis symbols, kept sorted by symbol
/// with no zero coefficients.
class LieElement {
 public:
  struct Term {
    BasisSymbol symbol;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LieElement() = default;
  LieElement(const BasisSymbol& x, const Rational& c = 1);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const BasisSymbol& x) const;

  /// Appends without restoring canonical form; call normalize() afterwards.
  void push(const BasisSymbol& x, const Rational& c) { terms_.push_back({x, c}); }
  /// Sorts, merges equal symbols and removes zeros.
  void normalize();

  LieElement& operator+=(const LieElement& rhs);
  LieElement& operator-=(const LieElement& rhs);
  LieElement& operator*=(const Rational& k);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& k, LieElement a) { return a *= k; }

  friend bool operator==(const LieElement&, const LieElement&) = default;

  [[nodiscard]] std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c^k_ij e_k.
class FiniteLieAlgebra {
 public:
  struct Bracket {
    std::size_t i;
    std::size_t j;
    RationalVector coeffs;
  };

  /// Builds from the listed brackets [e_i, e_j] (i != j; the (j, i) entry is
  /// filled in by antisymmetry; omitted pairs are zero). Throws
  /// std::invalid_argument if the data contradicts antisymmetry or Jacobi.
  FiniteLieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets, std::string name = "custom");

  static FiniteLieAlgebra abelian(std::size_t dim);
  /// Basis (e, h, f) with [e, f] = h, [h, e] = 2e, [h, f] = -2f.
  static FiniteLieAlgebra sl2();

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const RationalVector& bracket(std::size_t i, std::size_t j) const;
  [[nodiscard]] RationalVector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  /// Non-zero brackets with i < j, in order.
  [[nodiscard]] std::vector<Bracket> nonzero_brackets() const;

  /// Matrix of ad(e_i) in the basis e_0..e_{dim-1}.
  [[nodiscard]] RationalMatrix ad(std::size_t i) const;

  friend bool operator==(const FiniteLieAlgebra& a, const FiniteLieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_;
  std::string name_;
  std::vector<RationalVector> table_;  // table_[i * dim + j] = [e_i, e_j]
};

enum class AlgebraKind {
  Wn,         // vector fields on the torus
  WnPlus,     // polynomial vector fields of degree >= 1
  DerPoly,    // all polynomial vector fields (alpha = 0 allowed)
  Gln,
  Semidirect, // Wn with the loop algebra F(T^n) (x) gdot
  GPlus,      // WnPlus with C[z] (x) gdot
};

std::string algebra_kind_name(AlgebraKind kind);
AlgebraKind parse_algebra_kind(const std::string& text);

/// An algebra of one of the kinds above in n variables.
struct LieAlgebra {
  AlgebraKind kind = AlgebraKind::Wn;
  std::size_t n = 1;
  std::shared_ptr<const FiniteLieAlgebra> gdot;  // Semidirect and GPlus only

  /// True if x is a basis element of this algebra.
  [[nodiscard]] bool admits(const BasisSymbol& x) const;
};

/// Accumulates scale * [x, y] into out (unnormalized). Throws
/// std::domain_error when a symbol does not belong to the algebra.
void bracket_into(const LieAlgebra& algebra, const BasisSymbol& x, const BasisSymbol& y, const Rational& scale,
                  LieElement& out);

LieElement bracket(const LieAlgebra& algebra, const BasisSymbol& x, const BasisSymbol& y);
LieElement bracket(const LieAlgebra& algebra, const LieElement& a, const LieElement& b);

/// Convenience forms with the algebra inferred from the symbols.
LieElement bracket_wn(const LieElement& a, const LieElement& b);
LieElement bracket_wnplus(const LieElement& a, const LieElement& b);
LieElement bracket_gln(const LieElement& a, const LieElement& b);
LieElement bracket_semidirect(const LieElement& a, const LieElement& b, std::shared_ptr<const FiniteLieAlgebra> gdot);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 for every unordered triple (with
/// repetition) drawn from `basis`.
Report jacobi_check(const LieAlgebra& algebra, std::span<const BasisSymbol> basis);

/// [x, y] + [y, x] = 0 for every ordered pair.
Report antisymmetry_check(const LieAlgebra& algebra, std::span<const BasisSymbol> basis);

// Windows of basis symbols.
std::vector<BasisSymbol> wn_window(std::size_t n, int radius);
std::vector<BasisSymbol> wnplus_window(std::size_t n, int max_degree, bool include_constant = false);
std::vector<BasisSymbol> gln_basis(std::size_t n);
std::vector<BasisSymbol> loop_window(std::size_t n, int radius, std::size_t gdim);
std::vector<BasisSymbol> poly_loop_window(std::size_t n, int max_degree, std::size_t gdim);

}  // namespace jetmod

#endif  // JETMOD_LIE_HPP
