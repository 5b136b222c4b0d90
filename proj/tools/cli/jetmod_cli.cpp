#include "jetmod_cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "jetmod/category_j.hpp"
#include "jetmod/jets.hpp"
#include "jetmod/polynomiality.hpp"
#include "jetmod/representation.hpp"
#include "jetmod/semidirect.hpp"
#include "jetmod/serialize.hpp"

namespace jetmod::cli {

namespace {

/// Input problems that map to exit code 2.
struct UsageError : std::runtime_error {
  std::string kind;
  UsageError(std::string k, const std::string& detail) : std::runtime_error(detail), kind(std::move(k)) {}
};

struct Globals {
  int window = 2;
  std::vector<int> theta_p{2, 3};
  std::string out;
  bool quiet = false;
};

struct Output {
  json body;
  int code = kVerified;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("io", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("io", "cannot write '" + path + "'");
  out << text << '\n';
}

json load(const std::string& path) { return parse_json(read_file(path)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

WeightCoset parse_lambda(const std::string& text, std::size_t n) {
  WeightCoset w;
  if (text.empty()) {
    w.lambda.assign(n, Rational(0));
    return w;
  }
  for (const auto& item : split(text, ',')) {
    try {
      w.lambda.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw UsageError("parse", std::string("lambda: ") + e.what());
    }
  }
  if (w.lambda.size() != n) throw UsageError("usage", "lambda needs " + std::to_string(n) + " entries");
  return w;
}

bool is_gmodule(const json& j) { return j.is_object() && j.contains("gplus"); }

GPlusRep gmodule_source(const json& j) { return decode_gplus(j.at("gplus")); }

GModule decode_gmodule(const json& j) {
  const GPlusRep R = gmodule_source(j);
  WeightCoset lambda = decode_weight(j.at("lambda"));
  if (lambda.n() != R.n()) throw FormatError("lambda and representation disagree on n");
  return gmodule_unchecked(lambda, R, j.contains("provenance") ? decode_provenance(j["provenance"]) : Provenance{});
}

std::vector<OperatorFamilyWindow> extract_all(const CategoryJModule& M, int radius) {
  const auto box = lattice_box(M.n(), radius);
  std::vector<OperatorFamilyWindow> D;
  for (std::size_t j = 0; j < M.n(); ++j) D.push_back(extract_D(M, j, box));
  return D;
}

// --- verbs -------------------------------------------------------------------------------

Output cmd_build_jet(const Globals& g, std::size_t n, int N, const std::string& type, const std::string& fiber_path,
                     const std::string& spec_path, const std::string& table_path) {
  JetModuleSpec spec;
  if (!spec_path.empty()) {
    spec = decode_jet_spec(load(spec_path));
  } else if (!fiber_path.empty()) {
    try {
      spec = JetModuleSpec::with_fiber(n, N, decode_rep(load(fiber_path)));
    } catch (const std::domain_error& e) {
      throw UsageError("invalid", e.what());
    }
  } else {
    const auto parts = split(type, ',');
    if (parts.size() != 2) throw UsageError("usage", "--type expects s,k");
    try {
      spec = JetModuleSpec::tensor_type(n, N, std::stoul(parts[0]), std::stoul(parts[1]));
    } catch (const std::domain_error& e) {
      throw UsageError("invalid", e.what());
    } catch (const std::logic_error&) {
      throw UsageError("parse", "--type expects two non-negative integers");
    }
  }
  const CategoryJModule M = tensor_truncation_module(spec);
  const json module = encode(M);
  Output o;
  if (!table_path.empty()) {
    const CoefficientTable table = jet_coefficient_table(spec, g.window);
    write_file(table_path, encode(table).dump());
  }
  if (g.out.empty()) {
    o.body = module;
  } else {
    write_file(g.out, module.dump(2));
    o.body = {{"n", spec.n}, {"N", spec.N}, {"fiber", spec.fiber_name}, {"dim", M.dim()}, {"out", g.out}};
    if (!table_path.empty()) o.body["table"] = table_path;
  }
  return o;
}

Output cmd_correspond(const Globals& g, const std::string& rep_path, const std::string& lambda_text) {
  const FiniteRep rep = decode_rep(load(rep_path));
  const WeightCoset lambda = parse_lambda(lambda_text, rep.n());
  Output o;
  try {
    const CategoryJModule M = from_wnplus_rep(lambda, rep, Provenance{"correspond", std::nullopt, ""});
    const json module = encode(M);
    if (g.out.empty()) {
      o.body = module;
    } else {
      write_file(g.out, module.dump(2));
      o.body = {{"dim", M.dim()}, {"out", g.out}};
    }
  } catch (const std::invalid_argument& e) {
    o.body = {{"error", "not_a_representation"}, {"detail", e.what()}};
    o.code = kViolations;
  }
  return o;
}

const std::vector<std::string> kModuleSuites{"leibniz", "bracket", "lemma1", "relations37", "jacobi", "rep"};
const std::vector<std::string> kLoopSuites{"j4", "check53", "check5455", "loop_bracket"};

Output cmd_verify(const Globals& g, const std::string& path, const std::string& suites_text) {
  const json file = load(path);
  const bool loop = is_gmodule(file);
  std::set<std::string> known(kModuleSuites.begin(), kModuleSuites.end());
  if (loop) known.insert(kLoopSuites.begin(), kLoopSuites.end());

  std::vector<std::string> suites = split(suites_text, ',');
  if (suites.empty()) {
    suites = kModuleSuites;
    if (loop) suites.insert(suites.end(), kLoopSuites.begin(), kLoopSuites.end());
  }
  for (const auto& s : suites) {
    if (!known.contains(s)) throw UsageError("unknown_suite", "unknown suite '" + s + "'");
  }

  std::optional<GModule> G;
  std::optional<GPlusRep> R;
  std::optional<CategoryJModule> M;
  if (loop) {
    R = gmodule_source(file);
    G = decode_gmodule(file);
    M = G->wn();
  } else {
    M = decode_module(file);
  }

  std::vector<Report> reports;
  for (const auto& s : suites) {
    if (s == "leibniz") {
      reports.push_back(leibniz_check(*M, g.window));
    } else if (s == "bracket") {
      reports.push_back(bracket_compat_check(*M, g.window));
    } else if (s == "lemma1") {
      reports.push_back(check_lemma1(extract_all(*M, g.window)));
    } else if (s == "relations37") {
      reports.push_back(check_relations_37(coefficients_as_rep(*M)));
    } else if (s == "jacobi") {
      if (loop) {
        const LieAlgebra alg{AlgebraKind::Semidirect, M->n(), G->gdot()};
        auto basis = wn_window(M->n(), g.window);
        const auto loops = loop_window(M->n(), g.window, G->gdot()->dim());
        basis.insert(basis.end(), loops.begin(), loops.end());
        reports.push_back(jacobi_check(alg, basis));
      } else {
        reports.push_back(jacobi_check(LieAlgebra{AlgebraKind::Wn, M->n(), nullptr}, wn_window(M->n(), g.window)));
      }
    } else if (s == "rep") {
      Report r = rep_check_exhaustive(loop ? R->rep() : M->rep());
      r.name = "rep";
      reports.push_back(std::move(r));
    } else if (s == "j4") {
      reports.push_back(j4_check(*G, g.window));
    } else if (s == "check53") {
      reports.push_back(check_53(*G, g.window));
    } else if (s == "check5455") {
      reports.push_back(check_54_55(*R));
    } else if (s == "loop_bracket") {
      reports.push_back(loop_bracket_compat_check(*G, g.window));
    }
  }

  Output o;
  json list = json::array();
  std::size_t violations = 0;
  bool ok = true;
  for (const auto& r : reports) {
    list.push_back(encode(r));
    violations += r.violations.size();
    ok = ok && r.ok();
  }
  o.body = {{"module", path}, {"window", g.window}, {"suites", std::move(list)}, {"violations", violations}, {"ok", ok}};
  o.code = ok ? kVerified : kViolations;
  return o;
}

Output cmd_degrees(const std::string& path) {
  const json file = load(path);
  const CategoryJModule M = is_gmodule(file) ? decode_gmodule(file).wn() : decode_module(file);
  const DegreeReport d = degree_report(M);
  Output o;
  o.body = encode(d);
  // The zero family has no degree; as an s-degree it counts as 0.
  const int s_degree = std::max(d.max, 0);
  o.body["s_degree"] = s_degree;
  const Provenance& p = M.provenance();
  o.body["provenance"] = encode(p);
  std::optional<int> expected;
  if (p.recipe == "jet" && p.N) {
    if (p.fiber == "natural") expected = *p.N + 1;
    if (p.fiber == "trivial" && *p.N >= 1) expected = *p.N;
  }
  if (expected) {
    o.body["expected"] = *expected;
    o.body["matches"] = *expected == s_degree;
    if (*expected != s_degree) o.code = kViolations;
  }
  return o;
}

Output cmd_polyfit(const Globals& g, const std::string& path) {
  const OperatorFamilyWindow f = decode_family(load(path));
  if (f.variables() != 1) throw UsageError("usage", "polyfit takes a one-variable family");
  DetectionOptions options;
  options.theta_p = g.theta_p;
  const DetectionReport d = detect_polynomial_rank1(f, f.dim(), options);
  Output o;
  o.body = encode(d);
  switch (d.verdict) {
    case DetectionVerdict::Polynomial:
      o.code = kVerified;
      break;
    case DetectionVerdict::InsufficientWindow:
      o.body["required_min"] = {{"lo", -1}, {"hi", static_cast<int>(lemma2_bound(f.dim())) + 1}};
      o.code = kUsage;
      break;
    default:
      o.code = kViolations;
  }
  return o;
}

Output cmd_decompose(const std::string& path) {
  const FiniteRep r = decode_rep(load(path));
  Output o;
  o.body = encode(indecomposability_probe(r));
  return o;
}

GdotPtr parse_gdot(const std::string& text) {
  if (text == "sl2") return std::make_shared<const FiniteLieAlgebra>(FiniteLieAlgebra::sl2());
  if (text.rfind("abelian:", 0) == 0) {
    try {
      return std::make_shared<const FiniteLieAlgebra>(FiniteLieAlgebra::abelian(std::stoul(text.substr(8))));
    } catch (const std::logic_error&) {
      throw UsageError("parse", "abelian:<dim> expects a dimension");
    }
  }
  return std::make_shared<const FiniteLieAlgebra>(decode_lie_algebra(load(text)));
}

FiniteRep parse_gl(const std::string& text, std::size_t n) {
  if (text == "trivial") return gln_trivial(n);
  if (text == "natural") return gln_natural(n);
  if (text == "conatural") return gln_conatural(n);
  if (text.rfind("tensor:", 0) == 0) {
    const auto parts = split(text.substr(7), ',');
    if (parts.size() != 2) throw UsageError("usage", "tensor:<s>,<k>");
    return tensor_fiber(n, std::stoul(parts[0]), std::stoul(parts[1]));
  }
  return decode_rep(load(text));
}

Output cmd_loop_build(const Globals& g, std::size_t n, const std::string& gdot_text, const std::string& gl_text,
                      const std::string& gdot_rep, std::optional<int> truncate, const std::string& lambda_text) {
  const GdotPtr gdot = parse_gdot(gdot_text);
  GdotRep rho;
  if (gdot_rep == "adjoint") {
    rho = gdot_adjoint(*gdot);
  } else if (gdot_rep == "trivial") {
    rho.assign(gdot->dim(), RationalMatrix(1, 1));
  } else {
    throw UsageError("usage", "--gdot-rep must be adjoint or trivial");
  }
  GPlusRep R;
  Provenance prov;
  try {
    if (truncate) {
      R = gplus_truncated_loop(n, *truncate, gdot, rho);
      prov = {"loop_truncated", *truncate, gdot_rep};
    } else {
      R = gplus_from_tensor(parse_gl(gl_text, n), gdot, rho);
      prov = {"loop_irreducible", std::nullopt, gl_text};
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError("invalid", e.what());
  }
  const GModule M = from_gplus_rep(parse_lambda(lambda_text, n), R, prov);
  Output o;
  const json module = encode(M, R);
  if (g.out.empty()) {
    o.body = module;
  } else {
    write_file(g.out, module.dump(2));
    o.body = {{"dim", M.dim()}, {"out", g.out}};
  }
  return o;
}

Output cmd_extract(const std::string& path, std::size_t j, std::optional<std::size_t> loop_g, int lo, int hi) {
  const json file = load(path);
  const bool loop = is_gmodule(file);
  if (loop_g && !loop) throw UsageError("usage", "--loop needs a loop module");
  std::optional<GModule> G;
  if (loop) G = decode_gmodule(file);
  const CategoryJModule M = loop ? G->wn() : decode_module(file);
  if (j >= M.n()) throw UsageError("usage", "--j out of range");
  if (hi < lo) throw UsageError("usage", "empty window");
  std::vector<LatticeVector> window;
  if (M.n() == 1) {
    for (int s = lo; s <= hi; ++s) window.push_back(LatticeVector{s});
  } else {
    for (const auto& s : lattice_box(M.n(), std::max(-lo, hi))) {
      bool inside = true;
      for (std::size_t i = 0; i < M.n(); ++i) inside = inside && s[i] >= lo && s[i] <= hi;
      if (inside) window.push_back(s);
    }
  }
  Output o;
  if (loop_g) {
    if (*loop_g >= G->gdot()->dim()) throw UsageError("usage", "--loop out of range");
    o.body = encode(extract_g(*G, *loop_g, window));
  } else {
    o.body = encode(extract_D(M, j, window));
  }
  return o;
}

void emit(const Globals& g, const Output& o, bool builder, std::ostream& out) {
  const std::string text = o.body.dump(2);
  if (!builder && !g.out.empty()) write_file(g.out, text);
  if (!g.quiet) out << text << '\n';
}

json error_body(const std::string& kind, const std::string& detail) { return {{"error", kind}, {"detail", detail}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and checks for modules over Lie algebras of vector fields on the torus", "jetmod"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--window", g.window, "Radius of the sample window (default 2)")->check(CLI::PositiveNumber);
  app.add_option("--theta-p", g.theta_p, "Scalings used to validate negative arguments")->delimiter(',');
  app.add_option("--out", g.out, "Output path");
  app.add_flag("--quiet", g.quiet, "Do not print the report");
  app.fallthrough();

  std::size_t n = 1;
  int N = 0;
  std::string type = "0,0", fiber, spec, table;
  auto* build = app.add_subcommand("build-jet", "Build the N-jet module of a tensor type");
  build->add_option("--n", n, "Number of variables");
  build->add_option("--N", N, "Jet order");
  build->add_option("--type", type, "Tensor type s,k (default 0,0)");
  build->add_option("--fiber", fiber, "gl_n representation JSON used as the fiber");
  build->add_option("--spec", spec, "Jet spec JSON");
  build->add_option("--table", table, "Write the coefficient table for the window here");

  std::string rep_path, lambda;
  auto* correspond = app.add_subcommand("correspond", "Module from a weight and a W_n^+ representation");
  correspond->add_option("rep", rep_path, "Representation JSON")->required();
  correspond->add_option("--lambda", lambda, "Weight representative, comma separated rationals");

  std::string module_path, suites;
  auto* verify = app.add_subcommand("verify", "Run verification suites on a module file");
  verify->add_option("module", module_path, "Module JSON")->required();
  verify->add_option("--suites", suites, "Comma separated suites (default: all)");

  auto* degrees = app.add_subcommand("degrees", "Degrees of the structure polynomials");
  degrees->add_option("module", module_path, "Module JSON")->required();

  std::string family_path;
  auto* polyfit = app.add_subcommand("polyfit", "Detect a polynomial one-variable family");
  polyfit->add_option("family", family_path, "Family JSON")->required();

  auto* decompose = app.add_subcommand("decompose", "Indecomposability probe for a representation");
  decompose->add_option("rep", rep_path, "Representation JSON")->required();

  std::string gdot_text = "sl2", gl_text = "trivial", gdot_rep = "adjoint";
  std::optional<int> truncate;
  auto* loop_build = app.add_subcommand("loop-build", "Module over vector fields and a loop algebra");
  loop_build->add_option("--n", n, "Number of variables");
  loop_build->add_option("--gdot", gdot_text, "sl2, abelian:<dim> or a structure-constant JSON file");
  loop_build->add_option("--gl", gl_text, "gl_n part: trivial, natural, conatural, tensor:<s>,<k> or a JSON file");
  loop_build->add_option("--gdot-rep", gdot_rep, "adjoint or trivial");
  loop_build->add_option("--truncate", truncate, "Build C[z]/(degree > N) (x) W instead");
  loop_build->add_option("--lambda", lambda, "Weight representative");

  std::size_t j = 0;
  std::optional<std::size_t> loop_g;
  int lo = -2, hi = 2;
  auto* extract = app.add_subcommand("extract", "Sample D_j(s) or g(s) from a module");
  extract->add_option("module", module_path, "Module JSON")->required();
  extract->add_option("--j", j, "Coordinate of d_j");
  extract->add_option("--loop", loop_g, "Extract g(s) for this basis element instead");
  extract->add_option("--lo", lo, "Lower end of the window");
  extract->add_option("--hi", hi, "Upper end of the window");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << '\n';
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << error_body("usage", e.what()).dump() << '\n';
    return kUsage;
  }

  try {
    Output o;
    bool builder = false;
    if (*build) {
      builder = true;
      o = cmd_build_jet(g, n, N, type, fiber, spec, table);
    } else if (*correspond) {
      builder = true;
      o = cmd_correspond(g, rep_path, lambda);
    } else if (*verify) {
      o = cmd_verify(g, module_path, suites);
    } else if (*degrees) {
      o = cmd_degrees(module_path);
    } else if (*polyfit) {
      o = cmd_polyfit(g, family_path);
    } else if (*decompose) {
      o = cmd_decompose(rep_path);
    } else if (*loop_build) {
      builder = true;
      o = cmd_loop_build(g, n, gdot_text, gl_text, gdot_rep, truncate, lambda);
    } else if (*extract) {
      o = cmd_extract(module_path, j, loop_g, lo, hi);
    }
    emit(g, o, builder, out);
    return o.code;
  } catch (const UsageError& e) {
    err << error_body(e.kind, e.what()).dump() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << error_body("parse", e.what()).dump() << '\n';
    return kUsage;
  } catch (const json::exception& e) {
    err << error_body("parse", e.what()).dump() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << error_body("invalid", e.what()).dump() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << error_body("invalid", e.what()).dump() << '\n';
    return kUsage;
  }
}

}  // namespace jetmod::cli
