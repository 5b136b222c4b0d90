#include "jetmod/jets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "jetmod/serialize.hpp"

namespace jetmod {

namespace {

void require_jet(const JetModuleSpec& spec, const JetBasisIndex& b) {
  if (b.alpha.size() != spec.n || b.m.size() != spec.n) throw std::domain_error("jet basis index has the wrong n");
  if (b.alpha.degree() > spec.N) {
    throw std::domain_error("jet index " + b.alpha.str() + " exceeds the order N=" + std::to_string(spec.N));
  }
  if (b.fiber >= spec.fiber.dim()) throw std::domain_error("fiber index out of range");
}

void sort_table(CoefficientTable& t) {
  auto key = [](const CoefficientEntry& e) { return std::tie(e.j, e.s, e.m, e.source, e.target, e.tau_power); };
  std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
}

}  // namespace

JetModuleSpec JetModuleSpec::tensor_type(std::size_t n, int N, std::size_t s, std::size_t k) {
  std::string name;
  if (s == 0 && k == 0) {
    name = "trivial";
  } else if (s == 0 && k == 1) {
    name = "natural";
  } else if (s == 1 && k == 0) {
    name = "conatural";
  } else {
    name = "tensor(" + std::to_string(s) + "," + std::to_string(k) + ")";
  }
  return with_fiber(n, N, tensor_fiber(n, s, k), name);
}

JetModuleSpec JetModuleSpec::with_fiber(std::size_t n, int N, FiniteRep fiber, std::string name) {
  if (N < 0) throw std::domain_error("jet order N must be non-negative");
  if (fiber.algebra().kind != AlgebraKind::Gln || fiber.n() != n) throw std::domain_error("jet fiber must be a gl_n module");
  return JetModuleSpec{n, N, std::move(fiber), std::move(name)};
}

std::size_t JetModuleSpec::rank() const { return jet_indices().size() * fiber.dim(); }

std::size_t JetModuleSpec::index_of(const MultiIndex& alpha, std::size_t fiber_index) const {
  return truncated_index(alpha, fiber_index, fiber.dim(), N);
}

std::vector<JetTerm> jet_action_terms(const JetModuleSpec& spec, std::size_t j, const LatticeVector& s,
                                      const JetBasisIndex& b, bool rescaled) {
  require_jet(spec, b);
  const std::size_t n = spec.n;
  const std::size_t fd = spec.fiber.dim();
  const MultiIndex& alpha = b.alpha;
  // Passing between v^(gamma) and w^(gamma) = tau^|gamma| v^(gamma) multiplies
  // a term v^(alpha) -> v^(gamma) by tau^{|alpha| - |gamma|}.
  auto tau = [&](int raw, const MultiIndex& gamma) { return rescaled ? raw + alpha.degree() - gamma.degree() : raw; };

  std::vector<JetTerm> out;
  // u^i d f / d x^i with u = tau^{-1} e^{tau s x} d_j and f = e^{tau m x}.
  if (b.m[j] != 0) out.push_back({spec.index_of(alpha, b.fiber), Rational(b.m[j]), 0});

  // alpha_j sum_{beta > 0} (u^j)^(beta) / beta! v^(alpha - e_j + beta); each
  // derivative of u^j brings a factor tau s.
  if (alpha[j] > 0) {
    const MultiIndex base = alpha.lowered(j);
    for (const auto& beta : enumerate_multiindices(n, spec.N - base.degree())) {
      if (beta.is_zero()) continue;
      const MultiIndex gamma = base + beta;
      const Rational c = Rational(alpha[j]) * monomial_value(beta, s) / beta.factorial();
      if (!c.is_zero()) out.push_back({spec.index_of(gamma, b.fiber), c, tau(beta.degree() - 1, gamma)});
    }
  }

  // sum_k sum_{beta >= 0} (u^j)^(beta + e_k) / beta! (E^k_j v)^(alpha + beta).
  for (std::size_t k = 0; k < n; ++k) {
    const RationalMatrix ekj = spec.fiber.of(BasisSymbol::gln(n, k, j));
    if (ekj.is_zero()) continue;
    for (const auto& beta : enumerate_multiindices(n, spec.N - alpha.degree())) {
      const MultiIndex gamma = alpha + beta;
      const Rational c = monomial_value(beta.raised(k), s) / beta.factorial();
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < fd; ++r) {
        const Rational& e = ekj(r, b.fiber);
        if (!e.is_zero()) out.push_back({spec.index_of(gamma, r), c * e, tau(beta.degree(), gamma)});
      }
    }
  }
  return out;
}

WeightVector jet_action(const JetModuleSpec& spec, std::size_t j, const LatticeVector& s, const JetBasisIndex& b) {
  WeightVector out{b.m + s, RationalVector(spec.rank())};
  for (const auto& t : jet_action_terms(spec, j, s, b, true)) {
    if (t.tau_power != 0) throw std::logic_error("jet_action: rescaled term carries a power of tau");
    out.v[t.target] += t.coeff;
  }
  return out;
}

WeightVector function_jet_action(std::size_t n, int N, std::size_t j, const LatticeVector& s, const JetBasisIndex& b) {
  if (b.alpha.degree() > N) throw std::domain_error("jet index exceeds the order N");
  const auto jets = enumerate_multiindices(n, N);
  WeightVector out{b.m + s, RationalVector(jets.size())};
  // For each target jet gamma: the derivative term needs gamma = alpha, the
  // Taylor term needs gamma = alpha - e_j + beta with beta > 0.
  for (std::size_t t = 0; t < jets.size(); ++t) {
    const MultiIndex& gamma = jets[t];
    Rational c;
    if (gamma == b.alpha) c += b.m[j];
    if (b.alpha[j] > 0 && b.alpha.lowered(j).leq(gamma)) {
      const MultiIndex beta = gamma - b.alpha.lowered(j);
      if (!beta.is_zero()) c += Rational(b.alpha[j]) * monomial_value(beta, s) / beta.factorial();
    }
    out.v[t] = c;
  }
  return out;
}

CoefficientTable jet_coefficient_table(const JetModuleSpec& spec, int radius, bool rescaled) {
  CoefficientTable table;
  const auto box = lattice_box(spec.n, radius);
  const auto jets = spec.jet_indices();
  for (std::size_t j = 0; j < spec.n; ++j) {
    for (const auto& s : box) {
      for (const auto& m : box) {
        for (const auto& alpha : jets) {
          for (std::size_t i = 0; i < spec.fiber.dim(); ++i) {
            const std::size_t source = spec.index_of(alpha, i);
            // Merge equal (target, tau power) pairs.
            std::map<std::pair<std::size_t, int>, Rational> merged;
            for (const auto& t : jet_action_terms(spec, j, s, {m, alpha, i}, rescaled)) {
              merged[{t.target, t.tau_power}] += t.coeff;
            }
            for (const auto& [key, c] : merged) {
              if (!c.is_zero()) table.push_back({j, s, m, source, key.first, c, key.second});
            }
          }
        }
      }
    }
  }
  sort_table(table);
  return table;
}

CoefficientTable module_coefficient_table(const CategoryJModule& M, int radius) {
  CoefficientTable table;
  const auto box = lattice_box(M.n(), radius);
  for (std::size_t j = 0; j < M.n(); ++j) {
    for (const auto& s : box) {
      const RationalMatrix Ds = M.D(j, s);
      for (const auto& m : box) {
        for (std::size_t src = 0; src < M.dim(); ++src) {
          for (std::size_t dst = 0; dst < M.dim(); ++dst) {
            Rational c = Ds(dst, src);
            if (dst == src) c += m[j];
            if (!c.is_zero()) table.push_back({j, s, m, src, dst, c, 0});
          }
        }
      }
    }
  }
  sort_table(table);
  return table;
}

CategoryJModule tensor_truncation_module(const JetModuleSpec& spec) {
  WeightCoset zero{std::vector<Rational>(spec.n)};
  return from_wnplus_rep(zero, tensor_module_truncated(spec.fiber, spec.N),
                         Provenance{"jet", spec.N, spec.fiber_name});
}

Report iso_to_tensor_truncation(const JetModuleSpec& spec, int radius, bool rescaled) {
  Report report(rescaled ? "iso_to_tensor_truncation" : "iso_to_tensor_truncation(unscaled)");
  const CoefficientTable jet = jet_coefficient_table(spec, radius, rescaled);
  const CoefficientTable tensor = module_coefficient_table(tensor_truncation_module(spec), radius);
  report.checked = std::max(jet.size(), tensor.size());
  if (serialize_table(jet) == serialize_table(tensor)) return report;

  // Name the first differing entries.
  std::size_t shown = 0;
  const std::size_t limit = 20;
  std::size_t a = 0, b = 0;
  auto describe = [](const CoefficientEntry& e) {
    return "j=" + std::to_string(e.j) + " s=" + e.s.str() + " m=" + e.m.str() + " " + std::to_string(e.source) + "->" +
           std::to_string(e.target);
  };
  while ((a < jet.size() || b < tensor.size()) && shown < limit) {
    if (a < jet.size() && b < tensor.size() && jet[a] == tensor[b]) {
      ++a;
      ++b;
      continue;
    }
    if (a < jet.size()) {
      const auto& e = jet[a++];
      report.fail(describe(e), "jet coefficient " + e.coeff.str() +
                                   (e.tau_power ? " * tau^" + std::to_string(e.tau_power) : std::string()) +
                                   " has no equal tensor-module entry");
    } else {
      const auto& e = tensor[b++];
      report.fail(describe(e), "tensor-module coefficient " + e.coeff.str() + " missing on the jet side");
    }
    ++shown;
  }
  if (report.violations.empty()) report.fail("table", "serialized tables differ");
  return report;
}

FiltrationResult filtration_submodule(const JetModuleSpec& spec, int l, int radius) {
  if (l < 0 || l > spec.N) {
    throw std::domain_error("filtration level " + std::to_string(l) + " outside [0, " + std::to_string(spec.N) + "]");
  }
  FiltrationResult out;
  const auto jets = spec.jet_indices();
  const std::size_t fd = spec.fiber.dim();
  // Graded-lex order puts the jets of order <= l first.
  std::size_t low = 0;
  while (low < jets.size() && jets[low].degree() <= l) ++low;
  const std::size_t quotient_rank = low * fd;
  for (std::size_t i = quotient_rank; i < spec.rank(); ++i) out.submodule_basis.push_back(i);

  const auto box = lattice_box(spec.n, radius);
  for (std::size_t j = 0; j < spec.n; ++j) {
    for (const auto& s : box) {
      for (const auto& m : box) {
        for (std::size_t a = low; a < jets.size(); ++a) {
          for (std::size_t i = 0; i < fd; ++i) {
            ++out.invariance.checked;
            for (const auto& t : jet_action_terms(spec, j, s, {m, jets[a], i})) {
              if (t.target < quotient_rank && !t.coeff.is_zero()) {
                out.invariance.fail("j=" + std::to_string(j) + " s=" + s.str() + " m=" + m.str() + " alpha=" +
                                        jets[a].str(),
                                    "action reaches jet order <= " + std::to_string(l));
              }
            }
          }
        }
      }
    }
  }

  // Quotient: keep the low-order part of the action on low-order jets.
  CoefficientTable projected;
  for (const auto& e : jet_coefficient_table(spec, radius)) {
    if (e.source < quotient_rank && e.target < quotient_rank) projected.push_back(e);
  }
  const JetModuleSpec lower = JetModuleSpec::with_fiber(spec.n, l, spec.fiber, spec.fiber_name);
  const CoefficientTable reference = jet_coefficient_table(lower, radius);
  out.quotient.checked = reference.size();
  if (serialize_table(projected) != serialize_table(reference)) {
    out.quotient.fail("l=" + std::to_string(l), "quotient coefficients differ from the order-l jet module");
  }
  return out;
}

}  // namespace jetmod
