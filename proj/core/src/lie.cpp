#include "jetmod/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetmod {

namespace {

LatticeVector to_lattice(const MultiIndex& alpha) { return alpha.as_lattice(); }

const char* kind_tag(BasisSymbol::Kind k) {
  switch (k) {
    case BasisSymbol::Kind::Wn: return "wn";
    case BasisSymbol::Kind::WnPlus: return "wn_plus";
    case BasisSymbol::Kind::Gln: return "gln";
    case BasisSymbol::Kind::Loop: return "loop";
    case BasisSymbol::Kind::PolyLoop: return "poly_loop";
  }
  return "?";
}

[[noreturn]] void reject(const LieAlgebra& algebra, const BasisSymbol& x) {
  throw std::domain_error("symbol " + x.str() + " does not belong to " + algebra_kind_name(algebra.kind) +
                          " with n=" + std::to_string(algebra.n));
}

}  // namespace

// --- BasisSymbol ---------------------------------------------------------------

BasisSymbol BasisSymbol::wn(std::size_t j, const LatticeVector& s) {
  if (j >= s.size()) throw std::domain_error("d_j(s): index j out of range");
  BasisSymbol x;
  x.kind_ = Kind::Wn;
  x.a_ = static_cast<int>(j);
  x.vec_ = s;
  return x;
}

BasisSymbol BasisSymbol::wn_plus(std::size_t j, const MultiIndex& alpha) {
  if (j >= alpha.size()) throw std::domain_error("z^alpha d_j: index j out of range");
  BasisSymbol x;
  x.kind_ = Kind::WnPlus;
  x.a_ = static_cast<int>(j);
  x.vec_ = to_lattice(alpha);
  return x;
}

BasisSymbol BasisSymbol::gln(std::size_t n, std::size_t p, std::size_t q) {
  if (p >= n || q >= n) throw std::domain_error("E^p_q: index out of range");
  BasisSymbol x;
  x.kind_ = Kind::Gln;
  x.a_ = static_cast<int>(p);
  x.b_ = static_cast<int>(q);
  x.vec_ = LatticeVector(n);
  return x;
}

BasisSymbol BasisSymbol::loop(const LatticeVector& s, std::size_t g) {
  BasisSymbol x;
  x.kind_ = Kind::Loop;
  x.b_ = static_cast<int>(g);
  x.vec_ = s;
  return x;
}

BasisSymbol BasisSymbol::poly_loop(const MultiIndex& beta, std::size_t g) {
  BasisSymbol x;
  x.kind_ = Kind::PolyLoop;
  x.b_ = static_cast<int>(g);
  x.vec_ = to_lattice(beta);
  return x;
}

std::strong_ordering operator<=>(const BasisSymbol& a, const BasisSymbol& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.a_ <=> b.a_; c != 0) return c;
  if (auto c = a.b_ <=> b.b_; c != 0) return c;
  return a.vec_ <=> b.vec_;
}

std::string BasisSymbol::str() const {
  switch (kind_) {
    case Kind::Wn: return "d_" + std::to_string(a_) + vec_.str();
    case Kind::WnPlus: return "z^" + vec_.str() + "d_" + std::to_string(a_);
    case Kind::Gln: return "E^" + std::to_string(a_) + "_" + std::to_string(b_);
    case Kind::Loop: return "e^" + vec_.str() + "g" + std::to_string(b_);
    case Kind::PolyLoop: return "z^" + vec_.str() + "g" + std::to_string(b_);
  }
  return kind_tag(kind_);
}

// --- LieElement ------------------------------------------------------------------

LieElement::LieElement(const BasisSymbol& x, const Rational& c) {
  if (!c.is_zero()) terms_.push_back({x, c});
}

Rational LieElement::coefficient(const BasisSymbol& x) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), x,
                             [](const Term& t, const BasisSymbol& key) { return t.symbol < key; });
  return it != terms_.end() && it->symbol == x ? it->coeff : Rational();
}

void LieElement::normalize() {
  if (terms_.size() > 1) {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.symbol < b.symbol; });
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term merged = std::move(terms_[i]);
    std::size_t k = i + 1;
    for (; k < terms_.size() && terms_[k].symbol == merged.symbol; ++k) merged.coeff += terms_[k].coeff;
    if (!merged.coeff.is_zero()) terms_[out++] = std::move(merged);
    i = k;
  }
  terms_.resize(out);
}

LieElement& LieElement::operator+=(const LieElement& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  normalize();
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& rhs) {
  for (const auto& t : rhs.terms_) terms_.push_back({t.symbol, -t.coeff});
  normalize();
  return *this;
}

LieElement& LieElement::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= k;
  return *this;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.str() + ")" + t.symbol.str();
  }
  return out;
}

// --- FiniteLieAlgebra ------------------------------------------------------------

FiniteLieAlgebra::FiniteLieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets, std::string name)
    : dim_(dim), name_(std::move(name)), table_(dim * dim, RationalVector(dim)) {
  std::vector<bool> seen(dim * dim, false);
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim) throw std::invalid_argument("structure constants: index out of range");
    if (b.coeffs.size() != dim) throw std::invalid_argument("structure constants: coefficient vector has wrong length");
    const bool nonzero = std::any_of(b.coeffs.begin(), b.coeffs.end(), [](const Rational& q) { return !q.is_zero(); });
    if (b.i == b.j) {
      if (nonzero) throw std::invalid_argument("structure constants: [e_i, e_i] must vanish");
      continue;
    }
    RationalVector neg(dim);
    for (std::size_t k = 0; k < dim; ++k) neg[k] = -b.coeffs[k];
    const std::size_t ij = b.i * dim + b.j;
    const std::size_t ji = b.j * dim + b.i;
    if ((seen[ij] && table_[ij] != b.coeffs) || (seen[ji] && table_[ji] != neg)) {
      throw std::invalid_argument("structure constants: conflicting entries for (" + std::to_string(b.i) + ", " +
                                  std::to_string(b.j) + ")");
    }
    table_[ij] = b.coeffs;
    table_[ji] = std::move(neg);
    seen[ij] = seen[ji] = true;
  }
  // Jacobi on basis triples.
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = x + 1; y < dim; ++y) {
      for (std::size_t z = y + 1; z < dim; ++z) {
        RationalVector total(dim);
        auto unit = [dim](std::size_t i) {
          RationalVector e(dim);
          e[i] = 1;
          return e;
        };
        for (auto [a, b, c] : {std::array{x, y, z}, std::array{y, z, x}, std::array{z, x, y}}) {
          const RationalVector inner = table_[b * dim + c];
          const RationalVector outer = bracket(unit(a), inner);
          for (std::size_t k = 0; k < dim; ++k) total[k] += outer[k];
        }
        if (std::any_of(total.begin(), total.end(), [](const Rational& q) { return !q.is_zero(); })) {
          throw std::invalid_argument("structure constants violate the Jacobi identity on (" + std::to_string(x) +
                                      ", " + std::to_string(y) + ", " + std::to_string(z) + ")");
        }
      }
    }
  }
}

FiniteLieAlgebra FiniteLieAlgebra::abelian(std::size_t dim) { return FiniteLieAlgebra(dim, {}, "abelian"); }

FiniteLieAlgebra FiniteLieAlgebra::sl2() {
  // e = 0, h = 1, f = 2
  return FiniteLieAlgebra(3,
                          {
                              {0, 2, {0, 1, 0}},   // [e, f] = h
                              {1, 0, {2, 0, 0}},   // [h, e] = 2e
                              {1, 2, {0, 0, -2}},  // [h, f] = -2f
                          },
                          "sl2");
}

const RationalVector& FiniteLieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::domain_error("FiniteLieAlgebra::bracket: index out of range");
  return table_[i * dim_ + j];
}

RationalVector FiniteLieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::domain_error("FiniteLieAlgebra::bracket: wrong length");
  RationalVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Rational w = x[i] * y[j];
      const auto& c = table_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  return out;
}

std::vector<FiniteLieAlgebra::Bracket> FiniteLieAlgebra::nonzero_brackets() const {
  std::vector<Bracket> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const auto& c = table_[i * dim_ + j];
      if (std::any_of(c.begin(), c.end(), [](const Rational& q) { return !q.is_zero(); })) out.push_back({i, j, c});
    }
  }
  return out;
}

RationalMatrix FiniteLieAlgebra::ad(std::size_t i) const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto& c = bracket(i, j);
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = c[k];
  }
  return m;
}

// --- algebras --------------------------------------------------------------------

std::string algebra_kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Wn: return "wn";
    case AlgebraKind::WnPlus: return "wn_plus";
    case AlgebraKind::DerPoly: return "der_poly";
    case AlgebraKind::Gln: return "gln";
    case AlgebraKind::Semidirect: return "semidirect";
    case AlgebraKind::GPlus: return "g_plus";
  }
  return "?";
}

AlgebraKind parse_algebra_kind(const std::string& text) {
  for (auto k : {AlgebraKind::Wn, AlgebraKind::WnPlus, AlgebraKind::DerPoly, AlgebraKind::Gln, AlgebraKind::Semidirect,
                 AlgebraKind::GPlus}) {
    if (algebra_kind_name(k) == text) return k;
  }
  throw std::invalid_argument("unknown algebra tag '" + text + "'");
}

bool LieAlgebra::admits(const BasisSymbol& x) const {
  if (x.n() != n) return false;
  const std::size_t gdim = gdot ? gdot->dim() : 0;
  switch (x.kind()) {
    case BasisSymbol::Kind::Wn:
      return kind == AlgebraKind::Wn || kind == AlgebraKind::Semidirect;
    case BasisSymbol::Kind::WnPlus:
      if (kind == AlgebraKind::DerPoly) return true;
      return (kind == AlgebraKind::WnPlus || kind == AlgebraKind::GPlus) && x.alpha().degree() >= 1;
    case BasisSymbol::Kind::Gln:
      return kind == AlgebraKind::Gln;
    case BasisSymbol::Kind::Loop:
      return kind == AlgebraKind::Semidirect && x.g() < gdim;
    case BasisSymbol::Kind::PolyLoop:
      return kind == AlgebraKind::GPlus && x.g() < gdim;
  }
  return false;
}

void bracket_into(const LieAlgebra& algebra, const BasisSymbol& x, const BasisSymbol& y, const Rational& scale,
                  LieElement& out) {
  if (!algebra.admits(x)) reject(algebra, x);
  if (!algebra.admits(y)) reject(algebra, y);
  using K = BasisSymbol::Kind;
  const K kx = x.kind();
  const K ky = y.kind();

  // Mixed pairs are written with the vector field first.
  if ((kx == K::Loop && ky == K::Wn) || (kx == K::PolyLoop && ky == K::WnPlus)) {
    bracket_into(algebra, y, x, -scale, out);
    return;
  }

  if (kx == K::Wn && ky == K::Wn) {
    // [d_j(s), d_k(m)] = m_j d_k(s+m) - s_k d_j(s+m)
    const std::size_t j = x.j(), k = y.j();
    const LatticeVector sum = x.s() + y.s();
    if (int mj = y.s()[j]; mj != 0) out.push(BasisSymbol::wn(k, sum), scale * mj);
    if (int sk = x.s()[k]; sk != 0) out.push(BasisSymbol::wn(j, sum), -(scale * sk));
    return;
  }
  if (kx == K::WnPlus && ky == K::WnPlus) {
    // [z^a d_j, z^b d_k] = b_j z^{a+b-e_j} d_k - a_k z^{a+b-e_k} d_j
    const std::size_t j = x.j(), k = y.j();
    const MultiIndex a = x.alpha(), b = y.alpha();
    const MultiIndex sum = a + b;
    if (b[j] != 0) out.push(BasisSymbol::wn_plus(k, sum.lowered(j)), scale * b[j]);
    if (a[k] != 0) out.push(BasisSymbol::wn_plus(j, sum.lowered(k)), -(scale * a[k]));
    return;
  }
  if (kx == K::Gln && ky == K::Gln) {
    // [E^p_q, E^r_t] = delta_qr E^p_t - delta_tp E^r_q
    const std::size_t n = algebra.n;
    if (x.q() == y.p()) out.push(BasisSymbol::gln(n, x.p(), y.q()), scale);
    if (y.q() == x.p()) out.push(BasisSymbol::gln(n, y.p(), x.q()), -scale);
    return;
  }
  if (kx == K::Wn && ky == K::Loop) {
    // [d_j(s), e^m g] = m_j e^{s+m} g
    if (int mj = y.s()[x.j()]; mj != 0) out.push(BasisSymbol::loop(x.s() + y.s(), y.g()), scale * mj);
    return;
  }
  if (kx == K::WnPlus && ky == K::PolyLoop) {
    // [z^a d_j, z^b g] = b_j z^{a+b-e_j} g
    const MultiIndex b = y.alpha();
    if (int bj = b[x.j()]; bj != 0) out.push(BasisSymbol::poly_loop((x.alpha() + b).lowered(x.j()), y.g()), scale * bj);
    return;
  }
  if ((kx == K::Loop && ky == K::Loop) || (kx == K::PolyLoop && ky == K::PolyLoop)) {
    const RationalVector& c = algebra.gdot->bracket(x.g(), y.g());
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      if (kx == K::Loop) {
        out.push(BasisSymbol::loop(x.s() + y.s(), k), scale * c[k]);
      } else {
        out.push(BasisSymbol::poly_loop(x.alpha() + y.alpha(), k), scale * c[k]);
      }
    }
    return;
  }
  throw std::domain_error("no bracket between " + x.str() + " and " + y.str());
}

LieElement bracket(const LieAlgebra& algebra, const BasisSymbol& x, const BasisSymbol& y) {
  LieElement out;
  bracket_into(algebra, x, y, 1, out);
  out.normalize();
  return out;
}

LieElement bracket(const LieAlgebra& algebra, const LieElement& a, const LieElement& b) {
  LieElement out;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) bracket_into(algebra, ta.symbol, tb.symbol, ta.coeff * tb.coeff, out);
  }
  out.normalize();
  return out;
}

namespace {

std::size_t infer_n(const LieElement& a, const LieElement& b) {
  for (const auto* e : {&a, &b}) {
    if (!e->is_zero()) return e->terms().front().symbol.n();
  }
  return 0;
}

LieElement bracket_inferred(AlgebraKind kind, const LieElement& a, const LieElement& b,
                            std::shared_ptr<const FiniteLieAlgebra> gdot = nullptr) {
  const std::size_t n = infer_n(a, b);
  if (n == 0) return {};
  LieAlgebra algebra{kind, n, std::move(gdot)};
  return bracket(algebra, a, b);
}

}  // namespace

LieElement bracket_wn(const LieElement& a, const LieElement& b) { return bracket_inferred(AlgebraKind::Wn, a, b); }

LieElement bracket_wnplus(const LieElement& a, const LieElement& b) {
  return bracket_inferred(AlgebraKind::WnPlus, a, b);
}

LieElement bracket_gln(const LieElement& a, const LieElement& b) { return bracket_inferred(AlgebraKind::Gln, a, b); }

LieElement bracket_semidirect(const LieElement& a, const LieElement& b, std::shared_ptr<const FiniteLieAlgebra> gdot) {
  if (!gdot) throw std::domain_error("bracket_semidirect: missing finite-dimensional algebra");
  return bracket_inferred(AlgebraKind::Semidirect, a, b, std::move(gdot));
}

Report jacobi_check(const LieAlgebra& algebra, std::span<const BasisSymbol> basis) {
  Report report{"jacobi"};
  // Cache the inner brackets of basis pairs; the outer ones involve symbols
  // outside the window and are computed on the fly.
  const std::size_t b = basis.size();
  std::vector<LieElement> inner(b * b);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t k = i; k < b; ++k) {
      inner[i * b + k] = bracket(algebra, basis[i], basis[k]);
      inner[k * b + i] = -1 * inner[i * b + k];
    }
  }
  LieElement acc;
  for (std::size_t x = 0; x < b; ++x) {
    for (std::size_t y = x; y < b; ++y) {
      for (std::size_t z = y; z < b; ++z) {
        acc = LieElement();
        for (auto [u, v, w] : {std::array{x, y, z}, std::array{y, z, x}, std::array{z, x, y}}) {
          for (const auto& t : inner[v * b + w].terms()) bracket_into(algebra, basis[u], t.symbol, t.coeff, acc);
        }
        acc.normalize();
        ++report.checked;
        if (!acc.is_zero()) {
          report.fail("(" + basis[x].str() + ", " + basis[y].str() + ", " + basis[z].str() + ")",
                      "Jacobi sum = " + acc.str());
        }
      }
    }
  }
  return report;
}

Report antisymmetry_check(const LieAlgebra& algebra, std::span<const BasisSymbol> basis) {
  Report report{"antisymmetry"};
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      ++report.checked;
      LieElement sum = bracket(algebra, x, y) + bracket(algebra, y, x);
      if (!sum.is_zero()) report.fail("(" + x.str() + ", " + y.str() + ")", "[x,y]+[y,x] = " + sum.str());
    }
  }
  return report;
}

std::vector<BasisSymbol> wn_window(std::size_t n, int radius) {
  std::vector<BasisSymbol> out;
  for (const auto& s : lattice_box(n, radius)) {
    for (std::size_t j = 0; j < n; ++j) out.push_back(BasisSymbol::wn(j, s));
  }
  return out;
}

std::vector<BasisSymbol> wnplus_window(std::size_t n, int max_degree, bool include_constant) {
  std::vector<BasisSymbol> out;
  for (const auto& alpha : enumerate_multiindices(n, max_degree)) {
    if (alpha.is_zero() && !include_constant) continue;
    for (std::size_t j = 0; j < n; ++j) out.push_back(BasisSymbol::wn_plus(j, alpha));
  }
  return out;
}

std::vector<BasisSymbol> gln_basis(std::size_t n) {
  std::vector<BasisSymbol> out;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) out.push_back(BasisSymbol::gln(n, p, q));
  }
  return out;
}

std::vector<BasisSymbol> loop_window(std::size_t n, int radius, std::size_t gdim) {
  std::vector<BasisSymbol> out;
  for (const auto& s : lattice_box(n, radius)) {
    for (std::size_t g = 0; g < gdim; ++g) out.push_back(BasisSymbol::loop(s, g));
  }
  return out;
}

std::vector<BasisSymbol> poly_loop_window(std::size_t n, int max_degree, std::size_t gdim) {
  std::vector<BasisSymbol> out;
  for (const auto& beta : enumerate_multiindices(n, max_degree)) {
    for (std::size_t g = 0; g < gdim; ++g) out.push_back(BasisSymbol::poly_loop(beta, g));
  }
  return out;
}

}  // namespace jetmod
