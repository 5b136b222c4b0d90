#include "jetmod/serialize.hpp"

#include <utility>

namespace jetmod {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t need_size(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

const json& need_array(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
  return v;
}

std::vector<int> int_list(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of integers");
  if (j.size() > kMaxVariables) throw FormatError("too many coordinates");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw FormatError("expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

const char* symbol_kind_tag(BasisSymbol::Kind k) {
  switch (k) {
    case BasisSymbol::Kind::Wn:
      return "wn";
    case BasisSymbol::Kind::WnPlus:
      return "wn_plus";
    case BasisSymbol::Kind::Gln:
      return "gln";
    case BasisSymbol::Kind::Loop:
      return "loop";
    case BasisSymbol::Kind::PolyLoop:
      return "poly_loop";
  }
  return "?";
}

json encode_generators(const FiniteRep& r, bool skip_poly_loops) {
  json gens = json::array();
  for (const auto& [x, m] : r.generators()) {
    if (skip_poly_loops && x.kind() == BasisSymbol::Kind::PolyLoop) continue;
    gens.push_back({{"symbol", encode(x)}, {"matrix", encode(m)}});
  }
  return gens;
}

FiniteRep decode_rep_with(const json& j, std::shared_ptr<const FiniteLieAlgebra> gdot) {
  AlgebraKind kind;
  try {
    kind = parse_algebra_kind(need(j, "algebra").get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const std::size_t n = need_size(j, "n");
  const std::size_t dim = need_size(j, "dim");
  if (n == 0 || n > kMaxVariables / 2) throw FormatError("n out of range");
  if ((kind == AlgebraKind::GPlus || kind == AlgebraKind::Semidirect) && !gdot) {
    if (!j.contains("g_algebra")) throw FormatError("missing field \"g_algebra\"");
    gdot = std::make_shared<const FiniteLieAlgebra>(decode_lie_algebra(j.at("g_algebra")));
  }
  FiniteRep r(LieAlgebra{kind, n, gdot}, dim);
  for (const auto& g : need_array(j, "generators")) {
    try {
      r.set(decode_symbol(need(g, "symbol"), n), decode_matrix(need(g, "matrix")));
    } catch (const std::domain_error& e) {
      throw FormatError(e.what());
    }
  }
  return r;
}

}  // namespace

json encode(const Rational& r) { return r.str(); }

json encode(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json encode(const LatticeVector& v) {
  json out = json::array();
  for (int x : v.entries()) out.push_back(x);
  return out;
}

json encode(const MultiIndex& a) {
  json out = json::array();
  for (int x : a.entries()) out.push_back(x);
  return out;
}

json encode(const BasisSymbol& x) {
  json out{{"kind", symbol_kind_tag(x.kind())}};
  switch (x.kind()) {
    case BasisSymbol::Kind::Wn:
      out["j"] = x.j();
      out["s"] = encode(x.s());
      break;
    case BasisSymbol::Kind::WnPlus:
      out["j"] = x.j();
      out["alpha"] = encode(x.alpha());
      break;
    case BasisSymbol::Kind::Gln:
      out["p"] = x.p();
      out["q"] = x.q();
      break;
    case BasisSymbol::Kind::Loop:
      out["s"] = encode(x.s());
      out["g"] = x.g();
      break;
    case BasisSymbol::Kind::PolyLoop:
      out["beta"] = encode(x.alpha());
      out["g"] = x.g();
      break;
  }
  return out;
}

json encode(const FiniteLieAlgebra& g) {
  json brackets = json::array();
  for (const auto& b : g.nonzero_brackets()) {
    json coeffs = json::array();
    for (const auto& c : b.coeffs) coeffs.push_back(c.str());
    brackets.push_back({{"i", b.i}, {"j", b.j}, {"coeffs", std::move(coeffs)}});
  }
  return {{"dim", g.dim()}, {"name", g.name()}, {"brackets", std::move(brackets)}};
}

json encode(const FiniteRep& r) {
  json out{{"algebra", algebra_kind_name(r.algebra().kind)},
           {"n", r.n()},
           {"dim", r.dim()},
           {"generators", encode_generators(r, false)}};
  if (r.algebra().gdot) out["g_algebra"] = encode(*r.algebra().gdot);
  return out;
}

json encode(const GPlusRep& r) {
  json out{{"algebra", algebra_kind_name(AlgebraKind::GPlus)},
           {"n", r.n()},
           {"dim", r.dim()},
           {"generators", encode_generators(r.rep(), true)},
           {"g_algebra", encode(*r.gdot())}};
  json loops = json::array();
  for (const auto& [x, m] : r.loop_generators()) {
    loops.push_back({{"beta", encode(x.alpha())}, {"g", x.g()}, {"matrix", encode(m)}});
  }
  out["loop_generators"] = std::move(loops);
  return out;
}

json encode(const WeightCoset& lambda) {
  json out = json::array();
  for (const auto& x : lambda.lambda) out.push_back(x.str());
  return out;
}

json encode(const Provenance& p) {
  json out{{"recipe", p.recipe}, {"fiber", p.fiber}};
  out["N"] = p.N ? json(*p.N) : json(nullptr);
  return out;
}

json encode(const CategoryJModule& M) {
  return {{"n", M.n()}, {"lambda", encode(M.lambda())}, {"rep", encode(M.rep())}, {"provenance", encode(M.provenance())}};
}

json encode(const GModule& M, const GPlusRep& source) {
  return {{"n", M.n()},
          {"lambda", encode(M.wn().lambda())},
          {"gplus", encode(source)},
          {"provenance", encode(M.wn().provenance())}};
}

json encode(const MatrixPolynomial& p) {
  json terms = json::array();
  for (const auto& [alpha, m] : p.terms()) terms.push_back({{"alpha", encode(alpha)}, {"matrix", encode(m)}});
  return {{"vars", p.variables()}, {"rows", p.rows()}, {"cols", p.cols()}, {"terms", std::move(terms)}};
}

json encode(const OperatorFamilyWindow& f) {
  json points = json::array();
  for (const auto& [s, m] : f.samples()) points.push_back({{"s", encode(s)}, {"matrix", encode(m)}});
  return {{"dim_u", f.dim()}, {"vars", f.variables()}, {"points", std::move(points)}};
}

json encode(const Report& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"sample", v.sample}, {"detail", v.detail}});
  return {{"name", r.name},
          {"ok", r.ok()},
          {"checked", r.checked},
          {"indeterminate", r.indeterminate},
          {"violations", std::move(violations)},
          {"notes", r.notes}};
}

json encode(const CoefficientTable& t) {
  json out = json::array();
  for (const auto& e : t) {
    out.push_back({{"j", e.j},
                   {"s", encode(e.s)},
                   {"m", encode(e.m)},
                   {"source", e.source},
                   {"target", e.target},
                   {"coeff", e.coeff.str()},
                   {"tau_power", e.tau_power}});
  }
  return out;
}

json encode(const DetectionReport& d) {
  json y = json::array();
  for (const auto& m : d.y) y.push_back(encode(m));
  json theta = json::array();
  for (const auto& [p, r] : d.theta) theta.push_back({{"p", p}, {"report", encode(r)}});
  json out{{"verdict", detection_verdict_name(d.verdict)},
           {"window", {d.lo, d.hi}},
           {"order", d.order},
           {"y", std::move(y)},
           {"precondition", encode(d.precondition)},
           {"lemma2", encode(d.lemma2)},
           {"residual", encode(d.residual)},
           {"theta", std::move(theta)},
           {"reason", d.reason}};
  if (d.polynomial_found()) {
    out["polynomial"] = encode(d.polynomial);
    out["degree"] = d.polynomial.degree();
  }
  return out;
}

json encode(const ProbeResult& p) {
  json out{{"verdict", probe_verdict_name(p.verdict)}, {"commutant_dim", p.commutant_dim}, {"reason", p.reason}};
  if (p.projection) out["projection"] = encode(*p.projection);
  return out;
}

json encode(const DegreeReport& d) { return {{"per_j", d.per_j}, {"max", d.max}}; }

Rational decode_rational(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  } catch (const std::domain_error& e) {
    throw FormatError(e.what());
  }
  throw FormatError("expected a rational \"p/q\" or an integer");
}

RationalMatrix decode_matrix(const json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw FormatError("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = decode_rational(j[i][k]);
  }
  return m;
}

LatticeVector decode_lattice(const json& j) {
  const auto v = int_list(j);
  return LatticeVector(std::span<const int>(v));
}

MultiIndex decode_multiindex(const json& j) {
  const auto v = int_list(j);
  for (int x : v) {
    if (x < 0) throw FormatError("multi-index entries must be non-negative");
  }
  return MultiIndex(std::span<const int>(v));
}

BasisSymbol decode_symbol(const json& j, std::size_t n) {
  const std::string kind = need(j, "kind").get<std::string>();
  auto check_n = [&](std::size_t size) {
    if (size != n) throw FormatError("symbol vector has " + std::to_string(size) + " entries, expected " + std::to_string(n));
  };
  auto index = [&](const char* key) {
    const std::size_t v = need_size(j, key);
    if (v >= 64) throw FormatError(std::string("index \"") + key + "\" out of range");
    return v;
  };
  if (kind == "wn") {
    const auto s = decode_lattice(need(j, "s"));
    check_n(s.size());
    const std::size_t jj = index("j");
    if (jj >= n) throw FormatError("index j out of range");
    return BasisSymbol::wn(jj, s);
  }
  if (kind == "wn_plus") {
    const auto a = decode_multiindex(need(j, "alpha"));
    check_n(a.size());
    const std::size_t jj = index("j");
    if (jj >= n) throw FormatError("index j out of range");
    return BasisSymbol::wn_plus(jj, a);
  }
  if (kind == "gln") {
    const std::size_t p = index("p"), q = index("q");
    if (p >= n || q >= n) throw FormatError("gl_n index out of range");
    return BasisSymbol::gln(n, p, q);
  }
  if (kind == "loop") {
    const auto s = decode_lattice(need(j, "s"));
    check_n(s.size());
    return BasisSymbol::loop(s, index("g"));
  }
  if (kind == "poly_loop") {
    const auto b = decode_multiindex(need(j, "beta"));
    check_n(b.size());
    return BasisSymbol::poly_loop(b, index("g"));
  }
  throw FormatError("unknown symbol kind '" + kind + "'");
}

FiniteLieAlgebra decode_lie_algebra(const json& j) {
  const std::size_t dim = need_size(j, "dim");
  std::vector<FiniteLieAlgebra::Bracket> brackets;
  for (const auto& b : need_array(j, "brackets")) {
    RationalVector coeffs;
    for (const auto& c : need_array(b, "coeffs")) coeffs.push_back(decode_rational(c));
    brackets.push_back({need_size(b, "i"), need_size(b, "j"), std::move(coeffs)});
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  try {
    return FiniteLieAlgebra(dim, brackets, std::move(name));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

FiniteRep decode_rep(const json& j) { return decode_rep_with(j, nullptr); }

GPlusRep decode_gplus(const json& j) {
  auto gdot = std::make_shared<const FiniteLieAlgebra>(decode_lie_algebra(need(j, "g_algebra")));
  FiniteRep r = decode_rep_with(j, gdot);
  if (r.algebra().kind != AlgebraKind::GPlus) throw FormatError("expected algebra \"g_plus\"");
  GPlusRep out(std::move(r));
  if (j.contains("loop_generators")) {
    for (const auto& g : need_array(j, "loop_generators")) {
      const auto beta = decode_multiindex(need(g, "beta"));
      if (beta.size() != out.n()) throw FormatError("loop generator has the wrong number of coordinates");
      const std::size_t gi = need_size(g, "g");
      if (gi >= gdot->dim()) throw FormatError("loop generator index out of range");
      try {
        out.set_loop(beta, gi, decode_matrix(need(g, "matrix")));
      } catch (const std::domain_error& e) {
        throw FormatError(e.what());
      }
    }
  }
  return out;
}

WeightCoset decode_weight(const json& j) {
  if (!j.is_array()) throw FormatError("lambda must be an array");
  WeightCoset w;
  for (const auto& x : j) w.lambda.push_back(decode_rational(x));
  return w;
}

Provenance decode_provenance(const json& j) {
  Provenance p;
  if (!j.is_object()) return p;
  if (j.contains("recipe") && j["recipe"].is_string()) p.recipe = j["recipe"].get<std::string>();
  if (j.contains("fiber") && j["fiber"].is_string()) p.fiber = j["fiber"].get<std::string>();
  if (j.contains("N") && j["N"].is_number_integer()) p.N = j["N"].get<int>();
  return p;
}

CategoryJModule decode_module(const json& j) {
  const std::size_t n = need_size(j, "n");
  WeightCoset lambda = decode_weight(need(j, "lambda"));
  if (lambda.n() != n) throw FormatError("lambda has " + std::to_string(lambda.n()) + " entries, expected n");
  FiniteRep rep = decode_rep(need(j, "rep"));
  if (rep.n() != n) throw FormatError("representation and module disagree on n");
  try {
    return CategoryJModule::unchecked(std::move(lambda), std::move(rep),
                                      j.contains("provenance") ? decode_provenance(j["provenance"]) : Provenance{});
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

MatrixPolynomial decode_polynomial(const json& j) {
  MatrixPolynomial p(need_size(j, "vars"), need_size(j, "rows"), need_size(j, "cols"));
  for (const auto& t : need_array(j, "terms")) {
    const auto alpha = decode_multiindex(need(t, "alpha"));
    if (alpha.size() != p.variables()) throw FormatError("term exponent has the wrong number of variables");
    const auto m = decode_matrix(need(t, "matrix"));
    if (m.rows() != p.rows() || m.cols() != p.cols()) throw FormatError("term matrix has the wrong shape");
    p.add_term(alpha, m);
  }
  return p;
}

OperatorFamilyWindow decode_family(const json& j) {
  const std::size_t dim = need_size(j, "dim_u");
  const json& points = need_array(j, "points");
  std::size_t vars = j.contains("vars") ? need_size(j, "vars") : 0;
  if (vars == 0 && !points.empty()) vars = need(points.front(), "s").size();
  if (vars == 0) vars = 1;
  OperatorFamilyWindow f(vars, dim);
  for (const auto& pt : points) {
    try {
      f.insert(decode_lattice(need(pt, "s")), decode_matrix(need(pt, "matrix")));
    } catch (const std::domain_error& e) {
      throw FormatError(e.what());
    }
  }
  return f;
}

JetModuleSpec decode_jet_spec(const json& j) {
  const std::size_t n = need_size(j, "n");
  const int N = need_int(j, "N");
  if (n == 0 || n > kMaxVariables / 2) throw FormatError("n out of range");
  try {
    if (j.contains("tensor_type")) {
      const json& t = j["tensor_type"];
      return JetModuleSpec::tensor_type(n, N, need_size(t, "s"), need_size(t, "k"));
    }
    return JetModuleSpec::with_fiber(n, N, decode_rep(need(j, "fiber")));
  } catch (const std::domain_error& e) {
    throw FormatError(e.what());
  }
}

std::string serialize_table(const CoefficientTable& t) { return encode(t).dump(); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

}  // namespace jetmod
