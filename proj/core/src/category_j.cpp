#include "jetmod/category_j.hpp"

#include <stdexcept>

namespace jetmod {

namespace {

std::string point_str(std::size_t j, const LatticeVector& s, const LatticeVector& m) {
  return "j=" + std::to_string(j) + " s=" + s.str() + " m=" + m.str();
}

// D_j evaluated on a set of points, computed once per check.
class DTable {
 public:
  explicit DTable(const CategoryJModule& M) : M_(M), tables_(M.n()) {}

  const RationalMatrix& operator()(std::size_t j, const LatticeVector& s) {
    auto& t = tables_[j];
    auto it = t.find(s);
    if (it == t.end()) it = t.emplace(s, M_.D(j, s)).first;
    return it->second;
  }

 private:
  const CategoryJModule& M_;
  std::vector<std::map<LatticeVector, RationalMatrix>> tables_;
};

RationalMatrix plus_scalar(RationalMatrix a, const Rational& c) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) += c;
  return a;
}

}  // namespace

// --- WeightCoset -----------------------------------------------------------------------

bool WeightCoset::same_coset(const WeightCoset& other) const {
  if (n() != other.n()) return false;
  for (std::size_t i = 0; i < n(); ++i) {
    if (!(lambda[i] - other.lambda[i]).is_integer()) return false;
  }
  return true;
}

WeightCoset WeightCoset::shifted(const LatticeVector& t) const {
  if (t.size() != n()) throw std::domain_error("weight shift has the wrong number of coordinates");
  WeightCoset out = *this;
  for (std::size_t i = 0; i < n(); ++i) out.lambda[i] += t[i];
  return out;
}

// --- CategoryJModule ---------------------------------------------------------------------

CategoryJModule CategoryJModule::unchecked(WeightCoset lambda, FiniteRep rep, Provenance provenance) {
  if (rep.algebra().kind != AlgebraKind::WnPlus) {
    throw std::invalid_argument("a category J module needs a W_n^+ representation, got " +
                                algebra_kind_name(rep.algebra().kind));
  }
  if (rep.n() != lambda.n()) throw std::invalid_argument("weight and representation disagree on n");
  CategoryJModule M;
  const std::size_t n = rep.n();
  const std::size_t d = rep.dim();
  M.dim_ = d;
  M.dpoly_.assign(n, MatrixPolynomial(n, d, d));
  const auto id = RationalMatrix::identity(d);
  for (std::size_t j = 0; j < n; ++j) M.dpoly_[j].add_term(MultiIndex(n), id, lambda.lambda[j]);
  for (const auto& [x, m] : rep.generators()) {
    const MultiIndex alpha = x.alpha();
    M.dpoly_[x.j()].add_term(alpha, m, Rational(1) / alpha.factorial());
  }
  M.lambda_ = std::move(lambda);
  M.rep_ = std::move(rep);
  M.provenance_ = std::move(provenance);
  return M;
}

CategoryJModule CategoryJModule::from_polynomials(WeightCoset lambda, std::vector<MatrixPolynomial> dpoly) {
  const std::size_t n = lambda.n();
  if (dpoly.size() != n) throw std::invalid_argument("need one polynomial family per coordinate");
  if (n == 0) throw std::invalid_argument("n must be positive");
  const std::size_t d = dpoly.front().rows();
  FiniteRep rep(LieAlgebra{AlgebraKind::WnPlus, n, nullptr}, d);
  for (std::size_t j = 0; j < n; ++j) {
    if (dpoly[j].variables() != n || dpoly[j].rows() != d || dpoly[j].cols() != d) {
      throw std::invalid_argument("polynomial family " + std::to_string(j) + " has the wrong shape");
    }
    for (const auto& [alpha, coeff] : expand_D(dpoly[j])) rep.set(BasisSymbol::wn_plus(j, alpha), coeff);
  }
  CategoryJModule M;
  M.lambda_ = std::move(lambda);
  M.dim_ = d;
  M.rep_ = std::move(rep);
  M.dpoly_ = std::move(dpoly);
  return M;
}

CategoryJModule CategoryJModule::with_dpoly(std::size_t j, MatrixPolynomial p) const {
  std::vector<MatrixPolynomial> polys = dpoly_;
  polys.at(j) = std::move(p);
  CategoryJModule M = from_polynomials(lambda_, std::move(polys));
  M.provenance_ = provenance_;
  return M;
}

RationalMatrix CategoryJModule::D(std::size_t j, const LatticeVector& s) const { return dpoly_.at(j).evaluate(s); }

RationalMatrix CategoryJModule::action_matrix(std::size_t j, const LatticeVector& s, const LatticeVector& m) const {
  return plus_scalar(D(j, s), m[j]);
}

CategoryJModule from_wnplus_rep(const WeightCoset& lambda, const FiniteRep& rep, Provenance provenance) {
  if (rep.algebra().kind != AlgebraKind::WnPlus) {
    throw std::invalid_argument("from_wnplus_rep: expected a W_n^+ representation");
  }
  const Report check = rep_check_exhaustive(rep);
  if (!check.violations.empty()) {
    throw std::invalid_argument("from_wnplus_rep: not a representation, bracket fails on " +
                                check.violations.front().sample);
  }
  return CategoryJModule::unchecked(lambda, rep, std::move(provenance));
}

WeightVector act_vector_field(const CategoryJModule& M, std::size_t j, const LatticeVector& s, const WeightVector& w) {
  if (w.v.size() != M.dim()) throw std::domain_error("act_vector_field: vector has the wrong dimension");
  return {w.m + s, M.action_matrix(j, s, w.m) * w.v};
}

WeightVector act_function(const CategoryJModule& M, const LatticeVector& m_prime, const WeightVector& w) {
  if (w.v.size() != M.dim()) throw std::domain_error("act_function: vector has the wrong dimension");
  return {w.m + m_prime, w.v};
}

ActionOracle oracle_of(const CategoryJModule& M) {
  return [&M](std::size_t j, const LatticeVector& s, const LatticeVector& m) { return M.action_matrix(j, s, m); };
}

Report leibniz_check(const CategoryJModule& M, int radius) {
  Report report("leibniz");
  const std::size_t n = M.n();
  const auto box = lattice_box(n, radius);
  DTable D(M);
  const auto id = RationalMatrix::identity(M.dim());
  // (J1): e^m (x) v has weight lambda + m under every d_j(0).
  for (const auto& m : box) {
    for (std::size_t j = 0; j < n; ++j) {
      ++report.checked;
      if (plus_scalar(D(j, LatticeVector(n)), m[j]) != (M.lambda().lambda[j] + m[j]) * id) {
        report.fail("J1 " + point_str(j, LatticeVector(n), m), "d_j(0) is not lambda_j + m_j on the weight space");
      }
    }
  }
  // (J3): d_j(s)(e^{m'} w) = (d_j(s) e^{m'}) w + e^{m'} (d_j(s) w) with w = e^m (x) v
  // for every v at once, i.e. as matrices from U to U.
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& s : box) {
      const RationalMatrix& Ds = D(j, s);
      for (const auto& mp : box) {
        for (const auto& m : box) {
          ++report.checked;
          const RationalMatrix lhs = plus_scalar(Ds, m[j] + mp[j]);
          const RationalMatrix rhs = plus_scalar(plus_scalar(Ds, m[j]), mp[j]);
          if (lhs != rhs) report.fail("J3 " + point_str(j, s, m) + " m'=" + mp.str());
        }
      }
    }
  }
  return report;
}

Report bracket_compat_check(const CategoryJModule& M, int radius, int weight_radius) {
  Report report("bracket_compat");
  const std::size_t n = M.n();
  const auto box = lattice_box(n, radius);
  const auto weights = lattice_box(n, weight_radius);
  DTable D(M);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& s : box) {
        for (const auto& m : box) {
          const LatticeVector sm = s + m;
          // Action of m_j d_k(s+m) - s_k d_j(s+m), weight-independent part.
          RationalMatrix rhs_base = m[j] * D(k, sm) - s[k] * D(j, sm);
          for (const auto& w : weights) {
            ++report.checked;
            const RationalMatrix lhs = plus_scalar(D(j, s), w[j] + m[j]) * plus_scalar(D(k, m), w[k]) -
                                       plus_scalar(D(k, m), w[k] + s[k]) * plus_scalar(D(j, s), w[j]);
            const RationalMatrix rhs = plus_scalar(rhs_base, Rational(m[j]) * w[k] - Rational(s[k]) * w[j]);
            if (lhs != rhs) {
              report.fail("j=" + std::to_string(j) + " k=" + std::to_string(k) + " s=" + s.str() + " m=" + m.str() +
                              " weight=" + w.str(),
                          "commutator of actions differs from the action of the bracket");
            }
          }
        }
      }
    }
  }
  return report;
}

OperatorFamilyWindow extract_D(const ActionOracle& action, std::size_t n, std::size_t dim, std::size_t j,
                               const std::vector<LatticeVector>& window) {
  OperatorFamilyWindow f(n, dim);
  const LatticeVector origin(n);
  for (const auto& s : window) f.insert(s, action(j, s, origin));
  return f;
}

OperatorFamilyWindow extract_D(const CategoryJModule& M, std::size_t j, const std::vector<LatticeVector>& window) {
  return extract_D(oracle_of(M), M.n(), M.dim(), j, window);
}

Report check_lemma1(const std::vector<OperatorFamilyWindow>& D, const std::vector<Lemma1Sample>& samples) {
  Report report("lemma1");
  for (const auto& [j, k, s, m] : samples) {
    ++report.checked;
    const LatticeVector sm = s + m;
    const RationalMatrix lhs = commutator(D.at(j).at(s), D.at(k).at(m));
    const RationalMatrix rhs =
        m[j] * (D.at(k).at(sm) - D.at(k).at(m)) - s[k] * (D.at(j).at(sm) - D.at(j).at(s));
    if (lhs != rhs) report.fail(point_str(j, s, m) + " k=" + std::to_string(k), "[D_j(s), D_k(m)] mismatch");
  }
  return report;
}

Report check_lemma1(const std::vector<OperatorFamilyWindow>& D) {
  std::vector<Lemma1Sample> samples;
  for (std::size_t j = 0; j < D.size(); ++j) {
    for (std::size_t k = 0; k < D.size(); ++k) {
      for (const auto& [s, a] : D[j].samples()) {
        for (const auto& [m, b] : D[k].samples()) {
          const LatticeVector sm = s + m;
          if (D[j].contains(sm) && D[k].contains(sm)) samples.push_back({j, k, s, m});
        }
      }
    }
  }
  return check_lemma1(D, samples);
}

std::vector<std::pair<MultiIndex, RationalMatrix>> expand_D(const MatrixPolynomial& p) {
  std::vector<std::pair<MultiIndex, RationalMatrix>> out;
  for (const auto& [alpha, coeff] : p.terms()) {
    if (!alpha.is_zero()) out.emplace_back(alpha, alpha.factorial() * coeff);
  }
  return out;
}

std::vector<std::pair<MultiIndex, RationalMatrix>> expand_D(const CategoryJModule& M, std::size_t j) {
  return expand_D(M.dpoly(j));
}

FiniteRep coefficients_as_rep(const CategoryJModule& M) {
  FiniteRep out(LieAlgebra{AlgebraKind::WnPlus, M.n(), nullptr}, M.dim());
  for (std::size_t j = 0; j < M.n(); ++j) {
    for (const auto& [alpha, coeff] : expand_D(M, j)) out.set(BasisSymbol::wn_plus(j, alpha), coeff);
  }
  return out;
}

Report check_relations_37(const FiniteRep& terms) {
  Report report = rep_check_exhaustive(terms);
  report.name = "relations37";
  return report;
}

std::vector<MatrixPolynomial> structure_polynomials(const CategoryJModule& M) {
  const std::size_t n = M.n();
  std::vector<std::size_t> placement(n);
  for (std::size_t i = 0; i < n; ++i) placement[i] = i;
  std::vector<MatrixPolynomial> out;
  const auto id = RationalMatrix::identity(M.dim());
  for (std::size_t j = 0; j < n; ++j) {
    MatrixPolynomial f = M.dpoly(j).embed(2 * n, placement);
    f.add_term(MultiIndex::unit(2 * n, n + j), id);
    out.push_back(std::move(f));
  }
  return out;
}

DegreeReport degree_report(const CategoryJModule& M) {
  DegreeReport out;
  for (const auto& p : M.dpolys()) {
    out.per_j.push_back(p.degree());
    out.max = std::max(out.max, p.degree());
  }
  return out;
}

Report weight_shift_iso(const CategoryJModule& M, const LatticeVector& t, int radius, bool shift_map) {
  Report report("weight_shift_iso");
  const std::size_t n = M.n();
  const CategoryJModule shifted = CategoryJModule::from_polynomials(M.lambda().shifted(t), [&] {
    std::vector<MatrixPolynomial> polys = M.dpolys();
    const auto id = RationalMatrix::identity(M.dim());
    for (std::size_t j = 0; j < n; ++j) polys[j].add_term(MultiIndex(n), id, t[j]);
    return polys;
  }());
  const auto box = lattice_box(n, radius);
  // psi(e^m (x) v) = e^{m - t} (x) v. Both sides map e^m (x) v to a multiple of
  // e^{m+s-t}; compare the matrices.
  const LatticeVector offset = shift_map ? t : LatticeVector(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& s : box) {
      for (const auto& m : box) {
        ++report.checked;
        const RationalMatrix lhs = M.action_matrix(j, s, m);              // psi(d_j(s) w)
        const RationalMatrix rhs = shifted.action_matrix(j, s, m - offset);  // d_j(s) psi(w)
        if (lhs != rhs) report.fail(point_str(j, s, m), "map does not intertwine");
      }
    }
  }
  return report;
}

}  // namespace jetmod
