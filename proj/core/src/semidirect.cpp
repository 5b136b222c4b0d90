#include "jetmod/semidirect.hpp"

#include <stdexcept>

namespace jetmod {

namespace {

LieAlgebra gplus_algebra(std::size_t n, GdotPtr gdot) { return LieAlgebra{AlgebraKind::GPlus, n, std::move(gdot)}; }

RationalMatrix combine(const GdotRep& rho, const RationalVector& c, std::size_t dim) {
  RationalMatrix out(dim, dim);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) out.add_scaled(c[k], rho.at(k));
  }
  return out;
}

}  // namespace

GdotRep gdot_adjoint(const FiniteLieAlgebra& g) {
  GdotRep out;
  for (std::size_t i = 0; i < g.dim(); ++i) out.push_back(g.ad(i));
  return out;
}

Report gdot_rep_check(const FiniteLieAlgebra& g, const GdotRep& rho) {
  Report report("gdot_rep");
  if (rho.size() != g.dim()) {
    report.fail("size", "need one matrix per basis element");
    return report;
  }
  const std::size_t d = rho.empty() ? 0 : rho.front().rows();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      ++report.checked;
      if (combine(rho, g.bracket(i, k), d) != commutator(rho[i], rho[k])) {
        report.fail("(e" + std::to_string(i) + ", e" + std::to_string(k) + ")", "rho([x,y]) != [rho x, rho y]");
      }
    }
  }
  return report;
}

// --- GPlusRep ----------------------------------------------------------------------------

GPlusRep::GPlusRep(std::size_t n, GdotPtr gdot, std::size_t dim) {
  if (!gdot) throw std::invalid_argument("GPlusRep needs a finite-dimensional algebra");
  rep_ = FiniteRep(gplus_algebra(n, std::move(gdot)), dim);
}

GPlusRep::GPlusRep(FiniteRep rep) : rep_(std::move(rep)) {
  if (rep_.algebra().kind != AlgebraKind::GPlus || !rep_.algebra().gdot) {
    throw std::invalid_argument("GPlusRep needs a representation of kind g_plus");
  }
}

void GPlusRep::set_vector_field(std::size_t j, const MultiIndex& alpha, RationalMatrix m) {
  rep_.set(BasisSymbol::wn_plus(j, alpha), std::move(m));
}

void GPlusRep::set_loop(const MultiIndex& beta, std::size_t g, RationalMatrix m) {
  rep_.set(BasisSymbol::poly_loop(beta, g), std::move(m));
}

RationalMatrix GPlusRep::loop(const MultiIndex& beta, std::size_t g) const {
  return rep_.of(BasisSymbol::poly_loop(beta, g));
}

FiniteRep GPlusRep::wn_part() const {
  FiniteRep out(LieAlgebra{AlgebraKind::WnPlus, n(), nullptr}, dim());
  for (const auto& [x, m] : rep_.generators()) {
    if (x.kind() == BasisSymbol::Kind::WnPlus) out.set(x, m);
  }
  return out;
}

std::vector<std::pair<BasisSymbol, RationalMatrix>> GPlusRep::loop_generators() const {
  std::vector<std::pair<BasisSymbol, RationalMatrix>> out;
  for (const auto& [x, m] : rep_.generators()) {
    if (x.kind() == BasisSymbol::Kind::PolyLoop) out.emplace_back(x, m);
  }
  return out;
}

// --- GModule -----------------------------------------------------------------------------

GModule::GModule(CategoryJModule wn, GdotPtr gdot, std::vector<MatrixPolynomial> gpoly)
    : wn_(std::move(wn)), gdot_(std::move(gdot)), gpoly_(std::move(gpoly)) {
  if (!gdot_) throw std::invalid_argument("GModule needs a finite-dimensional algebra");
  if (gpoly_.size() != gdot_->dim()) throw std::invalid_argument("need one loop family per basis element");
  for (const auto& p : gpoly_) {
    if (p.variables() != wn_.n() || p.rows() != wn_.dim() || p.cols() != wn_.dim()) {
      throw std::invalid_argument("loop family has the wrong shape");
    }
  }
}

RationalMatrix GModule::loop_action_matrix(std::size_t g, const LatticeVector& s, const LatticeVector& /*m*/) const {
  return g_of(g, s);
}

RationalMatrix GModule::symbol_action_matrix(const BasisSymbol& x, const LatticeVector& m) const {
  switch (x.kind()) {
    case BasisSymbol::Kind::Wn:
      return wn_.action_matrix(x.j(), x.s(), m);
    case BasisSymbol::Kind::Loop:
      return loop_action_matrix(x.g(), x.s(), m);
    default:
      throw std::domain_error("symbol " + x.str() + " does not act on a loop module");
  }
}

GModule GModule::with_gpoly(std::size_t g, MatrixPolynomial p) const {
  std::vector<MatrixPolynomial> polys = gpoly_;
  polys.at(g) = std::move(p);
  return GModule(wn_, gdot_, std::move(polys));
}

GModule from_gplus_rep(const WeightCoset& lambda, const GPlusRep& R, Provenance provenance) {
  const Report check = rep_check_exhaustive(R.rep());
  if (!check.violations.empty()) {
    throw std::invalid_argument("from_gplus_rep: not a representation, bracket fails on " +
                                check.violations.front().sample);
  }
  return gmodule_unchecked(lambda, R, std::move(provenance));
}

GModule gmodule_unchecked(const WeightCoset& lambda, const GPlusRep& R, Provenance provenance) {
  CategoryJModule wn = CategoryJModule::unchecked(lambda, R.wn_part(), std::move(provenance));
  const std::size_t n = R.n(), d = R.dim();
  std::vector<MatrixPolynomial> gpoly(R.gdot()->dim(), MatrixPolynomial(n, d, d));
  for (const auto& [x, m] : R.loop_generators()) {
    const MultiIndex beta = x.alpha();
    gpoly[x.g()].add_term(beta, m, Rational(1) / beta.factorial());
  }
  return GModule(std::move(wn), R.gdot(), std::move(gpoly));
}

GPlusRep coefficients_as_gplus(const GModule& M) {
  GPlusRep out(M.n(), M.gdot(), M.dim());
  const FiniteRep wn = coefficients_as_rep(M.wn());
  for (const auto& [x, m] : wn.generators()) out.set_vector_field(x.j(), x.alpha(), m);
  for (std::size_t g = 0; g < M.gpolys().size(); ++g) {
    for (const auto& [beta, coeff] : M.gpoly(g).terms()) out.set_loop(beta, g, beta.factorial() * coeff);
  }
  return out;
}

Report check_53(const GModule& M, int radius) {
  Report report("check53");
  const std::size_t n = M.n();
  const auto box = lattice_box(n, radius);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t g = 0; g < M.gpolys().size(); ++g) {
      for (const auto& s : box) {
        const RationalMatrix Ds = M.wn().D(j, s);
        for (const auto& m : box) {
          ++report.checked;
          const RationalMatrix gm = M.g_of(g, m);
          const RationalMatrix rhs = m[j] * (M.g_of(g, s + m) - gm);
          if (commutator(Ds, gm) != rhs) {
            report.fail("j=" + std::to_string(j) + " g=" + std::to_string(g) + " s=" + s.str() + " m=" + m.str(),
                        "[D_j(s), g(m)] != m_j (g(s+m) - g(m))");
          }
        }
      }
    }
  }
  return report;
}

Report check_54_55(const GPlusRep& R) {
  Report report("check5455");
  Report loops("loop_pairs");
  Report mixed("mixed_pairs");
  Report fields("vector_field_pairs");
  const auto basis = exhaustive_check_basis(R.rep());
  const FiniteRep& r = R.rep();
  std::vector<RationalMatrix> mats;
  mats.reserve(basis.size());
  for (const auto& x : basis) mats.push_back(r.of(x));
  using K = BasisSymbol::Kind;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const bool la = basis[a].kind() == K::PolyLoop, lb = basis[b].kind() == K::PolyLoop;
      Report& target = la && lb ? loops : (la || lb ? mixed : fields);
      ++target.checked;
      if (r.of(bracket(r.algebra(), basis[a], basis[b])) != commutator(mats[a], mats[b])) {
        target.fail("(" + basis[a].str() + ", " + basis[b].str() + ")", "rho([x,y]) != [rho x, rho y]");
      }
    }
  }
  report.absorb(loops);
  report.absorb(mixed);
  report.absorb(fields);
  return report;
}

Report j4_check(const GModule& M, int radius) {
  Report report("j4");
  const auto box = lattice_box(M.n(), radius);
  for (std::size_t g = 0; g < M.gpolys().size(); ++g) {
    for (const auto& s : box) {
      for (const auto& mp : box) {
        for (const auto& m : box) {
          ++report.checked;
          // (e^s g)(e^{m'} e^m v) against e^{m'} ((e^s g)(e^m v)).
          if (M.loop_action_matrix(g, s, m + mp) != M.loop_action_matrix(g, s, m)) {
            report.fail("g=" + std::to_string(g) + " s=" + s.str() + " m'=" + mp.str() + " m=" + m.str(),
                        "loop action does not commute with multiplication");
          }
        }
      }
    }
  }
  return report;
}

Report loop_bracket_compat_check(const GModule& M, int radius, int weight_radius) {
  Report report("loop_bracket_compat");
  const std::size_t n = M.n();
  const LieAlgebra alg{AlgebraKind::Semidirect, n, M.gdot()};
  const auto box = lattice_box(n, radius);
  const auto weights = lattice_box(n, weight_radius);
  std::vector<BasisSymbol> fields, loops;
  for (const auto& s : box) {
    for (std::size_t j = 0; j < n; ++j) fields.push_back(BasisSymbol::wn(j, s));
    for (std::size_t g = 0; g < M.gdot()->dim(); ++g) loops.push_back(BasisSymbol::loop(s, g));
  }
  auto check_pair = [&](const BasisSymbol& x, const BasisSymbol& y) {
    const LieElement xy = bracket(alg, x, y);
    for (const auto& w : weights) {
      ++report.checked;
      const RationalMatrix lhs = M.symbol_action_matrix(x, w + y.s()) * M.symbol_action_matrix(y, w) -
                                 M.symbol_action_matrix(y, w + x.s()) * M.symbol_action_matrix(x, w);
      RationalMatrix rhs(M.dim(), M.dim());
      for (const auto& t : xy.terms()) rhs.add_scaled(t.coeff, M.symbol_action_matrix(t.symbol, w));
      if (lhs != rhs) report.fail("(" + x.str() + ", " + y.str() + ") weight=" + w.str(), "action of the bracket differs");
    }
  };
  for (const auto& x : fields) {
    for (const auto& y : loops) check_pair(x, y);
  }
  for (std::size_t a = 0; a < loops.size(); ++a) {
    for (std::size_t b = a + 1; b < loops.size(); ++b) check_pair(loops[a], loops[b]);
  }
  return report;
}

OperatorFamilyWindow extract_g(const GModule& M, std::size_t g, const std::vector<LatticeVector>& window) {
  OperatorFamilyWindow f(M.n(), M.dim());
  const LatticeVector origin(M.n());
  for (const auto& s : window) f.insert(s, M.loop_action_matrix(g, s, origin));
  return f;
}

Report gpp_annihilation_check(const GPlusRep& R) {
  Report report("gpp_annihilation");
  for (const auto& [x, m] : R.rep().generators()) {
    ++report.checked;
    const int deg = x.alpha().degree();
    if (x.kind() == BasisSymbol::Kind::WnPlus && deg > 1) report.fail(x.str(), "acts non-trivially with |alpha| > 1");
    if (x.kind() == BasisSymbol::Kind::PolyLoop && deg >= 1) report.fail(x.str(), "acts non-trivially with |beta| >= 1");
  }
  return report;
}

GPlusRep gplus_from_gln_gdot(const FiniteRep& gl, GdotPtr gdot, const GdotRep& rho) {
  if (!gdot) throw std::invalid_argument("missing finite-dimensional algebra");
  if (gl.algebra().kind != AlgebraKind::Gln) throw std::invalid_argument("expected a gl_n representation");
  if (const Report r = rep_check_exhaustive(gl); !r.ok()) {
    throw std::invalid_argument("gl_n part is not a representation: " + r.violations.front().sample);
  }
  if (const Report r = gdot_rep_check(*gdot, rho); !r.ok()) {
    throw std::invalid_argument("gdot part is not a representation: " + r.violations.front().sample);
  }
  for (const auto& m : rho) {
    if (m.rows() != gl.dim() || m.cols() != gl.dim()) throw std::invalid_argument("gdot matrices have the wrong size");
  }
  for (const auto& x : gln_basis(gl.n())) {
    const RationalMatrix a = gl.of(x);
    for (std::size_t g = 0; g < rho.size(); ++g) {
      if (!commutator(a, rho[g]).is_zero()) {
        throw std::invalid_argument("gl_n and gdot actions do not commute at " + x.str() + ", e" + std::to_string(g));
      }
    }
  }
  GPlusRep out(gl.n(), gdot, gl.dim());
  const FiniteRep inflated = inflate_gln_to_wnplus(gl);
  for (const auto& [x, m] : inflated.generators()) out.set_vector_field(x.j(), x.alpha(), m);
  for (std::size_t g = 0; g < rho.size(); ++g) out.set_loop(MultiIndex(gl.n()), g, rho[g]);
  return out;
}

GPlusRep gplus_from_tensor(const FiniteRep& gl, GdotPtr gdot, const GdotRep& rho) {
  const std::size_t w = rho.empty() ? 1 : rho.front().rows();
  const auto iw = RationalMatrix::identity(w);
  const auto iv = RationalMatrix::identity(gl.dim());
  FiniteRep big(gl.algebra(), gl.dim() * w);
  for (const auto& [x, m] : gl.generators()) big.set(x, kronecker(m, iw));
  GdotRep lifted;
  for (const auto& m : rho) lifted.push_back(kronecker(iv, m));
  return gplus_from_gln_gdot(big, std::move(gdot), lifted);
}

GPlusRep gplus_truncated_loop(std::size_t n, int N, GdotPtr gdot, const GdotRep& rho) {
  if (!gdot) throw std::invalid_argument("missing finite-dimensional algebra");
  if (const Report r = gdot_rep_check(*gdot, rho); !r.ok()) {
    throw std::invalid_argument("gdot part is not a representation: " + r.violations.front().sample);
  }
  const std::size_t w = rho.empty() ? 1 : rho.front().rows();
  const FiniteRep poly = tensor_module_truncated(gln_trivial(n, 1), N);
  const std::size_t p = poly.dim();
  const auto iw = RationalMatrix::identity(w);
  GPlusRep out(n, gdot, p * w);
  for (const auto& [x, m] : poly.generators()) out.set_vector_field(x.j(), x.alpha(), kronecker(m, iw));
  const auto monomials = enumerate_multiindices(n, N);
  for (const auto& beta : monomials) {
    RationalMatrix mult(p, p);
    for (const auto& alpha : monomials) {
      const MultiIndex target = alpha + beta;
      if (target.degree() <= N) mult(truncated_index(target, 0, 1, N), truncated_index(alpha, 0, 1, N)) = 1;
    }
    for (std::size_t g = 0; g < rho.size(); ++g) out.set_loop(beta, g, kronecker(mult, rho[g]));
  }
  return out;
}

}  // namespace jetmod
