#include "jetmod/representation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "jetmod/scalar_polynomial.hpp"

namespace jetmod {

// --- FiniteRep -------------------------------------------------------------------

FiniteRep::FiniteRep(LieAlgebra algebra, std::size_t dim) : algebra_(std::move(algebra)), dim_(dim) {}

void FiniteRep::set(const BasisSymbol& x, RationalMatrix m) {
  if (!algebra_.admits(x)) {
    throw std::domain_error("symbol " + x.str() + " is not a basis element of " + algebra_kind_name(algebra_.kind));
  }
  if (m.rows() != dim_ || m.cols() != dim_) {
    throw std::domain_error("matrix for " + x.str() + " must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
  }
  if (m.is_zero()) {
    gens_.erase(x);
  } else {
    gens_[x] = std::move(m);
  }
}

RationalMatrix FiniteRep::of(const BasisSymbol& x) const {
  auto it = gens_.find(x);
  return it == gens_.end() ? RationalMatrix(dim_, dim_) : it->second;
}

RationalMatrix FiniteRep::of(const LieElement& x) const {
  RationalMatrix out(dim_, dim_);
  for (const auto& t : x.terms()) {
    if (const auto* m = find(t.symbol)) out.add_scaled(t.coeff, *m);
  }
  return out;
}

const RationalMatrix* FiniteRep::find(const BasisSymbol& x) const {
  auto it = gens_.find(x);
  return it == gens_.end() ? nullptr : &it->second;
}

int FiniteRep::max_support_degree() const {
  int d = -1;
  for (const auto& [x, m] : gens_) {
    if (x.kind() == BasisSymbol::Kind::WnPlus || x.kind() == BasisSymbol::Kind::PolyLoop) {
      d = std::max(d, x.alpha().degree());
    }
  }
  return d;
}

// --- gl_n modules ------------------------------------------------------------------

FiniteRep gln_natural(std::size_t n) {
  FiniteRep r(LieAlgebra{AlgebraKind::Gln, n, nullptr}, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) r.set(BasisSymbol::gln(n, p, q), RationalMatrix::unit(n, n, p, q));
  }
  return r;
}

FiniteRep gln_conatural(std::size_t n) {
  FiniteRep r(LieAlgebra{AlgebraKind::Gln, n, nullptr}, n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) r.set(BasisSymbol::gln(n, p, q), -RationalMatrix::unit(n, n, q, p));
  }
  return r;
}

FiniteRep gln_trivial(std::size_t n, std::size_t dim) { return FiniteRep(LieAlgebra{AlgebraKind::Gln, n, nullptr}, dim); }

FiniteRep tensor_fiber(std::size_t n, std::size_t s, std::size_t k) {
  FiniteRep out = gln_trivial(n);
  for (std::size_t i = 0; i < s; ++i) out = rep_tensor(out, gln_conatural(n));
  for (std::size_t i = 0; i < k; ++i) out = rep_tensor(out, gln_natural(n));
  return out;
}

namespace {

void require_compatible(const FiniteRep& a, const FiniteRep& b, const char* what) {
  if (a.algebra().kind != b.algebra().kind || a.n() != b.n()) {
    throw std::domain_error(std::string(what) + ": representations of different algebras");
  }
}

}  // namespace

FiniteRep rep_tensor(const FiniteRep& r1, const FiniteRep& r2) {
  require_compatible(r1, r2, "rep_tensor");
  FiniteRep out(r1.algebra(), r1.dim() * r2.dim());
  const auto id1 = RationalMatrix::identity(r1.dim());
  const auto id2 = RationalMatrix::identity(r2.dim());
  std::vector<BasisSymbol> support;
  for (const auto& [x, m] : r1.generators()) support.push_back(x);
  for (const auto& [x, m] : r2.generators()) support.push_back(x);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (const auto& x : support) out.set(x, kronecker(r1.of(x), id2) + kronecker(id1, r2.of(x)));
  return out;
}

FiniteRep rep_direct_sum(const FiniteRep& r1, const FiniteRep& r2) {
  require_compatible(r1, r2, "rep_direct_sum");
  const std::size_t d1 = r1.dim(), d = r1.dim() + r2.dim();
  FiniteRep out(r1.algebra(), d);
  std::map<BasisSymbol, RationalMatrix> blocks;
  for (const auto& [x, m] : r1.generators()) {
    auto& b = blocks.try_emplace(x, d, d).first->second;
    for (std::size_t i = 0; i < d1; ++i) {
      for (std::size_t k = 0; k < d1; ++k) b(i, k) = m(i, k);
    }
  }
  for (const auto& [x, m] : r2.generators()) {
    auto& b = blocks.try_emplace(x, d, d).first->second;
    for (std::size_t i = 0; i < r2.dim(); ++i) {
      for (std::size_t k = 0; k < r2.dim(); ++k) b(d1 + i, d1 + k) = m(i, k);
    }
  }
  for (auto& [x, m] : blocks) out.set(x, std::move(m));
  return out;
}

FiniteRep inflate_gln_to_wnplus(const FiniteRep& v) {
  if (v.algebra().kind != AlgebraKind::Gln) throw std::domain_error("inflate_gln_to_wnplus: input is not a gl_n module");
  const std::size_t n = v.n();
  FiniteRep out(LieAlgebra{AlgebraKind::WnPlus, n, nullptr}, v.dim());
  for (const auto& [x, m] : v.generators()) out.set(BasisSymbol::wn_plus(x.q(), MultiIndex::unit(n, x.p())), m);
  return out;
}

std::size_t truncated_index(const MultiIndex& alpha, std::size_t fiber_index, std::size_t fiber_dim, int N) {
  const auto basis = enumerate_multiindices(alpha.size(), N);
  auto it = std::find(basis.begin(), basis.end(), alpha);
  if (it == basis.end() || fiber_index >= fiber_dim) throw std::domain_error("truncated_index: index outside the module");
  return static_cast<std::size_t>(it - basis.begin()) * fiber_dim + fiber_index;
}

FiniteRep tensor_module_truncated(const FiniteRep& v, int N, bool derivations) {
  if (v.algebra().kind != AlgebraKind::Gln) throw std::domain_error("tensor_module_truncated: fiber is not a gl_n module");
  if (N < 0) throw std::domain_error("tensor_module_truncated: N must be non-negative");
  const std::size_t n = v.n();
  const std::size_t fd = v.dim();
  const auto monomials = enumerate_multiindices(n, N);
  std::map<MultiIndex, std::size_t> position;
  for (std::size_t i = 0; i < monomials.size(); ++i) position.emplace(monomials[i], i);

  FiniteRep out(LieAlgebra{derivations ? AlgebraKind::DerPoly : AlgebraKind::WnPlus, n, nullptr}, monomials.size() * fd);
  // E^k_j as fiber matrices.
  std::vector<RationalMatrix> e(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) e[k * n + j] = v.of(BasisSymbol::gln(n, k, j));
  }

  for (const auto& beta : enumerate_multiindices(n, N + 1)) {
    if (beta.is_zero() && !derivations) continue;
    for (std::size_t j = 0; j < n; ++j) {
      RationalMatrix m(out.dim(), out.dim());
      for (const auto& alpha : monomials) {
        const std::size_t col = position.at(alpha) * fd;
        const MultiIndex sum = alpha + beta;
        if (alpha[j] > 0 && sum.degree() - 1 <= N) {
          const std::size_t row = position.at(sum.lowered(j)) * fd;
          for (std::size_t i = 0; i < fd; ++i) m(row + i, col + i) += alpha[j];
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (beta[k] == 0 || sum.degree() - 1 > N) continue;
          const std::size_t row = position.at(sum.lowered(k)) * fd;
          const RationalMatrix& ekj = e[k * n + j];
          for (std::size_t r = 0; r < fd; ++r) {
            for (std::size_t c = 0; c < fd; ++c) {
              if (!ekj(r, c).is_zero()) m(row + r, col + c) += beta[k] * ekj(r, c);
            }
          }
        }
      }
      out.set(BasisSymbol::wn_plus(j, beta), std::move(m));
    }
  }
  return out;
}

// --- checks ------------------------------------------------------------------------

Report rep_check(const FiniteRep& r, std::span<const BasisSymbol> basis) {
  Report report{"rep"};
  std::vector<RationalMatrix> mats;
  mats.reserve(basis.size());
  for (const auto& x : basis) mats.push_back(r.of(x));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      ++report.checked;
      const RationalMatrix lhs = r.of(bracket(r.algebra(), basis[a], basis[b]));
      const RationalMatrix rhs = commutator(mats[a], mats[b]);
      if (lhs != rhs) report.fail("(" + basis[a].str() + ", " + basis[b].str() + ")", "rho([x,y]) != [rho x, rho y]");
    }
  }
  return report;
}

std::vector<BasisSymbol> exhaustive_check_basis(const FiniteRep& r) {
  const LieAlgebra& alg = r.algebra();
  const int top = std::max(r.max_support_degree(), 1) + 1;
  switch (alg.kind) {
    case AlgebraKind::Gln:
      return gln_basis(alg.n);
    case AlgebraKind::WnPlus:
      return wnplus_window(alg.n, top, false);
    case AlgebraKind::DerPoly:
      return wnplus_window(alg.n, top, true);
    case AlgebraKind::GPlus: {
      auto out = wnplus_window(alg.n, top, false);
      auto loops = poly_loop_window(alg.n, top, alg.gdot ? alg.gdot->dim() : 0);
      out.insert(out.end(), loops.begin(), loops.end());
      return out;
    }
    case AlgebraKind::Wn:
    case AlgebraKind::Semidirect: {
      // Infinite algebras: check the support closed under the brackets that
      // stay inside it.
      std::vector<BasisSymbol> out;
      for (const auto& [x, m] : r.generators()) out.push_back(x);
      return out;
    }
  }
  return {};
}

Report rep_check_exhaustive(const FiniteRep& r) {
  const auto basis = exhaustive_check_basis(r);
  return rep_check(r, basis);
}

LieElement euler_field(std::size_t n) {
  LieElement e;
  for (std::size_t j = 0; j < n; ++j) e.push(BasisSymbol::wn_plus(j, MultiIndex::unit(n, j)), 1);
  e.normalize();
  return e;
}

EGrading e_grading(const FiniteRep& r) {
  EGrading out;
  out.report.name = "e_grading";
  const std::size_t d = r.dim();
  const RationalMatrix e = r.of(euler_field(r.n()));
  const auto mp = minimal_polynomial(e);
  const auto roots = rational_roots(mp);
  ScalarPolynomial split = ScalarPolynomial::constant(1);
  if (roots) {
    for (const auto& root : *roots) split = split * ScalarPolynomial::linear_factor(root);
  }
  if (!roots || split != mp) {
    out.report.indeterminate = true;
    out.report.note("rho(E) is not diagonalizable over Q; minimal polynomial " + mp.str());
    return out;
  }
  const auto id = RationalMatrix::identity(d);
  for (const auto& nu : *roots) out.spaces.emplace_back(nu, matrix_kernel(e - nu * id));

  // rho(z^alpha d_j) V_nu lies in V_{nu + |alpha| - 1}.
  for (const auto& [x, m] : r.generators()) {
    if (x.kind() != BasisSymbol::Kind::WnPlus) continue;
    const int shift = x.alpha().degree() - 1;
    for (const auto& [nu, space] : out.spaces) {
      const Rational target = nu + shift;
      for (const auto& v : space) {
        ++out.report.checked;
        const RationalVector w = m * v;
        const RationalVector ew = e * w;
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i) ok = ew[i] == target * w[i];
        if (!ok) out.report.fail(x.str() + " on V_" + nu.str(), "image leaves V_" + target.str());
      }
    }
  }
  return out;
}

std::size_t lemma2_bound(std::size_t dim) { return dim * dim - dim + 1; }

Report lemma2_bound_check(const FiniteRep& r, const LieElement& x,
                          const std::vector<std::pair<LieElement, Rational>>& family) {
  Report report{"lemma2_bound"};
  std::vector<Rational> seen;
  for (const auto& [y, nu] : family) {
    if (bracket(r.algebra(), x, y) != nu * y) {
      throw std::domain_error("lemma2_bound_check: " + y.str() + " is not an ad-eigenvector with eigenvalue " + nu.str());
    }
    ++report.checked;
    if (!r.of(y).is_zero() && std::find(seen.begin(), seen.end(), nu) == seen.end()) seen.push_back(nu);
  }
  const std::size_t bound = lemma2_bound(r.dim());
  report.note("distinct eigenvalues with rho(y) != 0: " + std::to_string(seen.size()) + ", bound " + std::to_string(bound));
  if (seen.size() > bound) report.fail("count", std::to_string(seen.size()) + " > " + std::to_string(bound));
  return report;
}

std::vector<RationalMatrix> commutant(const FiniteRep& r) {
  const std::size_t d = r.dim();
  EchelonBasis rows(d * d);
  // The identity always commutes, so the equations have rank at most d^2 - 1.
  for (const auto& [x, m] : r.generators()) {
    for (std::size_t a = 0; a < d && rows.rank() + 1 < d * d; ++a) {
      for (std::size_t b = 0; b < d && rows.rank() + 1 < d * d; ++b) {
        // (C m - m C)_{ab} = sum_c C_{ac} m_{cb} - m_{ac} C_{cb}
        RationalVector row(d * d);
        for (std::size_t c = 0; c < d; ++c) {
          if (!m(c, b).is_zero()) row[a * d + c] += m(c, b);
          if (!m(a, c).is_zero()) row[c * d + b] -= m(a, c);
        }
        rows.insert(std::move(row));
      }
    }
  }
  std::vector<RationalMatrix> out;
  for (const auto& v : rows.kernel()) out.push_back(unflatten(v, d, d));
  return out;
}

std::string probe_verdict_name(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Indecomposable: return "indecomposable";
    case ProbeVerdict::Decomposes: return "decomposes";
    case ProbeVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

bool commutes_with_all(const FiniteRep& r, const RationalMatrix& p) {
  return std::all_of(r.generators().begin(), r.generators().end(),
                     [&](const auto& g) { return commutator(p, g.second).is_zero(); });
}

// Projection onto the generalized eigenspace of some rational eigenvalue of c,
// if c has a rational eigenvalue and at least one other eigenvalue.
std::optional<RationalMatrix> splitting_projection(const RationalMatrix& c) {
  const auto mp = minimal_polynomial(c);
  const auto roots = rational_roots(mp);
  if (!roots || roots->empty()) return std::nullopt;
  const Rational& root = roots->back();
  const int mult = root_multiplicity(mp, root);
  if (mult == mp.degree()) return std::nullopt;
  ScalarPolynomial power = ScalarPolynomial::constant(1);
  for (int i = 0; i < mult; ++i) power = power * ScalarPolynomial::linear_factor(root);
  const ScalarPolynomial cofactor = divmod(mp, power).first;
  // x * power + y * cofactor = 1, so y(c) cofactor(c) projects onto ker power(c).
  const auto bezout = extended_gcd(power, cofactor);
  return (bezout.y * cofactor).evaluate(c);
}

// True if every element of span{m_i} is nilpotent and products of them stay
// nilpotent, i.e. the associative algebra they generate is nilpotent.
bool generates_nilpotent_algebra(const std::vector<RationalMatrix>& gens, std::size_t d) {
  std::vector<RationalMatrix> layer;
  for (const auto& g : gens) {
    if (!g.is_zero()) layer.push_back(g);
  }
  for (std::size_t step = 0; step <= d && !layer.empty(); ++step) {
    EchelonBasis span(d * d);
    std::vector<RationalMatrix> next;
    for (const auto& g : gens) {
      for (const auto& w : layer) {
        RationalMatrix prod = g * w;
        if (span.insert(flatten(prod))) next.push_back(std::move(prod));
      }
    }
    layer = std::move(next);
  }
  return layer.empty();
}

}  // namespace

ProbeResult indecomposability_probe(const FiniteRep& r) {
  ProbeResult out;
  const std::size_t d = r.dim();
  const auto basis = commutant(r);
  out.commutant_dim = basis.size();
  if (basis.size() <= 1) {
    out.verdict = ProbeVerdict::Indecomposable;
    out.reason = "commutant is spanned by the identity";
    return out;
  }

  std::vector<RationalMatrix> candidates = basis;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) candidates.push_back(basis[a] + basis[b]);
  }
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 16; ++trial) {
    RationalMatrix c(d, d);
    for (const auto& b : basis) c.add_scaled(coeff(rng), b);
    candidates.push_back(std::move(c));
  }

  const auto id = RationalMatrix::identity(d);
  for (const auto& c : candidates) {
    auto p = splitting_projection(c);
    if (!p) continue;
    if (*p * *p == *p && !p->is_zero() && *p != id && commutes_with_all(r, *p)) {
      out.verdict = ProbeVerdict::Decomposes;
      out.projection = std::move(p);
      out.reason = "idempotent found in the commutant";
      return out;
    }
  }

  // Every basis element scalar + nilpotent, with the nilpotent parts
  // generating a nilpotent algebra, leaves no room for idempotents.
  std::vector<RationalMatrix> nilpotent_parts;
  for (const auto& b : basis) {
    const auto mp = minimal_polynomial(b);
    const auto roots = rational_roots(mp);
    if (!roots || roots->size() != 1 || root_multiplicity(mp, roots->front()) != mp.degree()) {
      out.verdict = ProbeVerdict::Indeterminate;
      out.reason = "commutant element with minimal polynomial " + mp.str() + " does not split over Q";
      return out;
    }
    nilpotent_parts.push_back(b - roots->front() * id);
  }
  if (generates_nilpotent_algebra(nilpotent_parts, d)) {
    out.verdict = ProbeVerdict::Indecomposable;
    out.reason = "commutant is scalars plus a nilpotent ideal";
  } else {
    out.verdict = ProbeVerdict::Indeterminate;
    out.reason = "no rational idempotent found and the commutant is not local";
  }
  return out;
}

}  // namespace jetmod
