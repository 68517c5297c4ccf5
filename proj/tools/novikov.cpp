/// Command-line front end. Reports are JSON on stdout; documents go to the
/// -o path (or to stdout when no path is given).
///
/// Exit codes: 0 property holds or construction succeeded, 1 property fails,
/// construction failed, NotExists or Undetermined, 2 input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "novikov/certificate.hpp"
#include "novikov/extension.hpp"
#include "novikov/fixtures.hpp"
#include "novikov/laf.hpp"
#include "novikov/lift_constructions.hpp"
#include "novikov/reduction.hpp"
#include "novikov/rmatrix.hpp"

using json = nlohmann::ordered_json;
using namespace novikov;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

json one_based(const std::vector<std::size_t>& w) {
  json a = json::array();
  for (std::size_t i : w) a.push_back(i + 1);
  return a;
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json check_json(const CheckResult& r) {
  json j{{"holds", r.holds}};
  if (!r.holds) {
    j["condition"] = r.condition;
    j["witness"] = one_based(r.witness);
  }
  return j;
}

json dims_json(const std::vector<Subspace>& s) {
  json a = json::array();
  for (const auto& t : s) a.push_back(t.dim());
  return a;
}

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json profile_json(const Profile& p) {
  return {{"dim", p.dim},
          {"derived_dims", p.derived_dims},
          {"lower_central_dims", p.lower_central_dims},
          {"nilpotency_class", optional_json(p.nilpotency_class)},
          {"derived_length", optional_json(p.derived_length)},
          {"unimodular", p.unimodular},
          {"center_dim", p.center_dim}};
}

void report(const json& j) { std::cout << j.dump(2) << '\n'; }

/// Writes a document to `path`, or to stdout when the path is empty.
void deliver(const std::string& path, const std::string& text) {
  if (path.empty()) std::cout << text;
  else write_text(path, text);
}

LieAlgebra load_lie(const std::string& path) { return parse_lie(read_text(path)); }

/// Subspace spanned by the columns of a LAF-M matrix.
Subspace load_columns(const std::string& path, std::size_t dim) {
  const Matrix m = parse_matrix(read_text(path));
  if (m.rows() != dim)
    throw InputError("ideal matrix has " + std::to_string(m.rows()) + " rows, expected " + std::to_string(dim));
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(dim, cols);
}

ExtensionData load_extension(const std::string& path) {
  ExtensionData ext = parse_extension(read_text(path));
  validate_extension(ext);
  return ext;
}

struct Options {
  std::string lie, product, ext, t, out, name, kind = "lie", method, cert, ideal, nilpotent_out;
  bool lsa = false, novikov = false, complete = false, check = false, induce = false;
  std::optional<std::size_t> element, effort;
};

int cmd_verify(const Options& o) {
  const AlgebraProduct p = parse_product(read_text(o.product));
  std::optional<LieAlgebra> g;
  if (!o.lie.empty()) {
    g = load_lie(o.lie);
    if (g->dim() != p.dim()) throw InputError("product and Lie algebra dimensions differ");
  }
  json j{{"command", "verify"}};
  bool ok = true;
  auto add = [&](const std::string& key, const CheckResult& r) {
    j["checks"][key] = check_json(r);
    ok = ok && r.holds;
  };
  if (o.lsa) {
    j["property"] = "left-symmetric";
    add("left-symmetric", is_left_symmetric(p));
  } else if (o.novikov) {
    j["property"] = "novikov";
    add("novikov", is_novikov(p));
  } else {
    j["property"] = "complete";
    add("left-symmetric", is_left_symmetric(p));
    const Completeness c = is_complete(p);
    j["checks"]["complete"] = {{"verdict", to_string(c.verdict)}, {"exact", c.exact}};
    if (c.witness) j["checks"]["complete"]["witness"] = vector_json(*c.witness);
    ok = ok && c.verdict == Completeness::Verdict::Complete;
  }
  if (g) add("compatible", is_compatible(p, *g));
  j["holds"] = ok;
  report(j);
  return ok ? kHolds : kFails;
}

int cmd_series(const Options& o) {
  const LieAlgebra g = load_lie(o.lie);
  json j{{"command", "series"},
         {"derived_series", dims_json(derived_series(g))},
         {"lower_central_series", dims_json(lower_central_series(g))},
         {"profile", profile_json(profile(g))}};
  report(j);
  return kHolds;
}

int cmd_fixture(const Options& o) {
  if (o.kind == "lie") {
    deliver(o.out, emit_lie(fixture(o.name)));
  } else if (o.kind == "product") {
    deliver(o.out, emit_product(product_fixture(o.name)));
  } else if (o.kind == "extension") {
    /// The split g = [g,g] + complement of a 2-step solvable fixture.
    deliver(o.out, emit_extension(two_step_solvable_from(fixture(o.name)).ext));
  } else {
    throw InputError("unknown fixture kind '" + o.kind + "'");
  }
  return kHolds;
}

int cmd_rmatrix(const Options& o) {
  const LieAlgebra g = load_lie(o.lie);
  const Matrix t = parse_matrix(read_text(o.t));
  if (t.rows() != g.dim() || t.cols() != g.dim()) throw InputError("T must be a square matrix of the algebra's dimension");
  const RMatrix r(g, t);
  const CheckResult cybe = check_cybe(r);
  const CheckResult novbed = check_novbed(r);
  json j{{"command", "rmatrix"}, {"cybe", check_json(cybe)}, {"novikov_condition", check_json(novbed)}};
  if (o.check || !cybe || !novbed) {
    j["holds"] = cybe.holds && novbed.holds;
    report(j);
    return cybe && novbed ? kHolds : kFails;
  }
  const AlgebraProduct p = induced_product(r);
  j["deformed_profile"] = profile_json(profile(deformed_lie(r)));
  j["novikov"] = check_json(is_novikov(p));
  j["holds"] = true;
  if (o.out.empty()) {
    std::cout << emit_product(p);
  } else {
    write_text(o.out, emit_product(p));
    report(j);
  }
  return kHolds;
}

/// First basis index for which `make` succeeds.
template <class F>
LiftData first_working(std::size_t m, const std::optional<std::size_t>& element, F make) {
  if (element) {
    if (*element == 0 || *element > m) throw InputError("--element out of range");
    return make(*element - 1);
  }
  for (std::size_t i = 0; i < m; ++i) {
    try {
      return make(i);
    } catch (const NotInvertible&) {
    } catch (const NotRegularNilpotent&) {
    } catch (const GammaExpansionFailed&) {
    }
  }
  throw HypothesisFailed("no basis element satisfies the construction's hypothesis");
}

int cmd_lift(const Options& o) {
  ExtensionData ext = load_extension(o.ext);
  LiftData lift;
  bool novikov_check = true;
  if (o.method == "scheuneman") {
    lift = scheuneman_lift(ext);
    novikov_check = false;
  } else if (o.method == "twogen") {
    lift = two_gen_lift(ext);
  } else if (o.method == "iso") {
    lift = first_working(ext.dim_b, o.element, [&](std::size_t i) { return iso_lift(ext, unit_vector(ext.dim_b, i)); });
  } else if (o.method == "jordan") {
    lift = first_working(ext.dim_b, o.element, [&](std::size_t i) { return jordan_lift(ext, i); });
  } else if (o.method == "semidirect") {
    SemidirectLift s = semidirect_lift(ext, ext.b_product);
    ext = s.ext;
    lift = s.lift;
    novikov_check = s.novikov_hypothesis;
  } else {
    throw InputError("unknown method '" + o.method + "'");
  }
  const CheckResult r = novikov_check ? check_lift_novikov(ext, lift) : check_lift_lsa(ext, lift);
  json j{{"command", "lift"}, {"method", o.method}, {"checked", novikov_check ? "novikov" : "left-symmetric"}};
  j["check"] = check_json(r);
  j["holds"] = r.holds;
  if (o.out.empty()) {
    std::cout << emit_lift(lift, ext.dim_a);
  } else {
    write_text(o.out, emit_lift(lift, ext.dim_a));
    report(j);
  }
  return r ? kHolds : kFails;
}

int cmd_reduce(const Options& o) {
  const ExtensionData ext = load_extension(o.ext);
  const InducedNilpotent ind = induced_nilpotent_extension(ext);
  if (!o.nilpotent_out.empty()) write_text(o.nilpotent_out, emit_extension(ind.ext_n));
  const LiftData lift_n = scheuneman_lift(ind.ext_n);
  const LiftData lift = reduction_lift(ext, lift_n);
  const CheckResult r = check_lift_lsa(ext, lift);
  json j{{"command", "reduce"}, {"dim_n", ind.dim_n}, {"dim_0", ind.dim_0}, {"check", check_json(r)}, {"holds", r.holds}};
  if (o.out.empty()) {
    std::cout << emit_lift(lift, ext.dim_a);
  } else {
    write_text(o.out, emit_lift(lift, ext.dim_a));
    report(j);
  }
  return r ? kHolds : kFails;
}

std::size_t effort_budget(const Options& o) {
  if (o.effort) return *o.effort;
  if (const char* env = std::getenv("NOVIKOV_EFFORT")) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0') throw InputError("NOVIKOV_EFFORT must be a non-negative integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultEffort;
}

int cmd_decide(const Options& o) {
  const LieAlgebra g = load_lie(o.lie);
  const std::size_t effort = effort_budget(o);
  const Certificate c = decide_novikov(g, effort);
  json j{{"command", "decide"},
         {"verdict", to_string(c.verdict)},
         {"method", c.method},
         {"effort", effort},
         {"steps", c.steps},
         {"verified", verify_certificate(g, c)}};
  if (c.verdict == Certificate::Verdict::Undetermined) j["residuals"] = c.residuals;
  if (!o.out.empty()) write_text(o.out, emit_certificate(c));
  report(j);
  return c.verdict == Certificate::Verdict::Exists ? kHolds : kFails;
}

int cmd_check_cert(const Options& o) {
  const LieAlgebra g = load_lie(o.lie);
  const Certificate c = parse_certificate(read_text(o.cert));
  const bool ok = verify_certificate(g, c);
  report({{"command", "check-cert"}, {"verdict", to_string(c.verdict)}, {"valid", ok}});
  return ok ? kHolds : kFails;
}

int cmd_quotient(const Options& o) {
  json j{{"command", "quotient"}};
  std::string doc;
  if (!o.lie.empty()) {
    const LieAlgebra g = load_lie(o.lie);
    const Subspace ideal = load_columns(o.ideal, g.dim());
    try {
      const Quotient q = quotient_map(g, ideal);
      doc = emit_lie(q.algebra);
      j["complement"] = one_based(q.complement);
      j["profile"] = profile_json(profile(q.algebra));
    } catch (const NotAnIdeal& e) {
      j["holds"] = false;
      j["error"] = e.what();
      report(j);
      return kFails;
    }
  } else {
    const AlgebraProduct p = parse_product(read_text(o.product));
    const Subspace ideal = load_columns(o.ideal, p.dim());
    try {
      const AlgebraProduct q = novikov_ideal_quotient(p, ideal);
      doc = emit_product(q);
      j["novikov"] = check_json(is_novikov(q));
    } catch (const NotProductIdeal& e) {
      j["holds"] = false;
      j["error"] = e.what();
      report(j);
      return kFails;
    }
  }
  j["holds"] = true;
  if (o.out.empty()) {
    std::cout << doc;
  } else {
    write_text(o.out, doc);
    report(j);
  }
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Novikov and left-symmetric structures on Lie algebras"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Check a product against the LSA, Novikov or completeness axioms");
  verify->add_option("--lie", o.lie, "LAF Lie algebra (adds the compatibility check)")->check(CLI::ExistingFile);
  verify->add_option("--product", o.product, "LAF-P product")->required()->check(CLI::ExistingFile);
  auto* f_lsa = verify->add_flag("--lsa", o.lsa, "left-symmetric");
  auto* f_nov = verify->add_flag("--novikov", o.novikov, "Novikov");
  auto* f_com = verify->add_flag("--complete", o.complete, "complete left-symmetric");
  f_lsa->excludes(f_nov)->excludes(f_com);
  f_nov->excludes(f_com);

  auto* series = app.add_subcommand("series", "Derived and lower central series");
  series->add_option("--lie", o.lie)->required()->check(CLI::ExistingFile);

  auto* fix = app.add_subcommand("fixture", "Emit a built-in fixture");
  fix->add_option("--name", o.name, "fixture name, e.g. n3, free-n2-c4, filiform:5")->required();
  fix->add_option("--kind", o.kind, "lie, product or extension")->check(CLI::IsMember({"lie", "product", "extension"}));
  fix->add_option("-o,--output", o.out);

  auto* rmat = app.add_subcommand("rmatrix", "Check or use an r-matrix T");
  rmat->add_option("--lie", o.lie)->required()->check(CLI::ExistingFile);
  rmat->add_option("--t", o.t, "LAF-M operator")->required()->check(CLI::ExistingFile);
  auto* f_check = rmat->add_flag("--check", o.check);
  auto* f_induce = rmat->add_flag("--induce", o.induce);
  f_check->excludes(f_induce);
  rmat->add_option("-o,--output", o.out);

  auto* lift = app.add_subcommand("lift", "Lift products to an extension");
  lift->add_option("--ext", o.ext, "LAF-E extension")->required()->check(CLI::ExistingFile);
  lift->add_option("--method", o.method)
      ->required()
      ->check(CLI::IsMember({"scheuneman", "twogen", "jordan", "iso", "semidirect"}));
  lift->add_option("--element", o.element, "1-based basis element for jordan and iso");
  lift->add_option("-o,--output", o.out);

  auto* reduce = app.add_subcommand("reduce", "Left-symmetric lift through the nilpotent part of the module");
  reduce->add_option("--ext", o.ext)->required()->check(CLI::ExistingFile);
  reduce->add_option("--nilpotent-out", o.nilpotent_out, "also write the induced nilpotent extension");
  reduce->add_option("-o,--output", o.out);

  auto* decide = app.add_subcommand("decide", "Decide whether a Novikov structure exists");
  decide->add_option("--lie", o.lie)->required()->check(CLI::ExistingFile);
  decide->add_option("--effort", o.effort, "elimination budget (overrides NOVIKOV_EFFORT)");
  decide->add_option("-o,--output", o.out, "LAF-C certificate");

  auto* cert = app.add_subcommand("check-cert", "Re-verify a certificate");
  cert->add_option("--lie", o.lie)->required()->check(CLI::ExistingFile);
  cert->add_option("--cert", o.cert)->required()->check(CLI::ExistingFile);

  auto* quot = app.add_subcommand("quotient", "Quotient by an ideal given as matrix columns");
  auto* q_lie = quot->add_option("--lie", o.lie)->check(CLI::ExistingFile);
  auto* q_prod = quot->add_option("--product", o.product)->check(CLI::ExistingFile);
  q_lie->excludes(q_prod);
  quot->add_option("--ideal", o.ideal, "LAF-M whose columns span the ideal")->required()->check(CLI::ExistingFile);
  quot->add_option("-o,--output", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  if (*verify && int(o.lsa) + int(o.novikov) + int(o.complete) != 1) {
    std::cerr << "input error: verify needs exactly one of --lsa, --novikov, --complete\n";
    return kInputError;
  }
  if (*quot && o.lie.empty() == o.product.empty()) {
    std::cerr << "input error: quotient needs exactly one of --lie, --product\n";
    return kInputError;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*series) return cmd_series(o);
    if (*fix) return cmd_fixture(o);
    if (*rmat) return cmd_rmatrix(o);
    if (*lift) return cmd_lift(o);
    if (*reduce) return cmd_reduce(o);
    if (*decide) return cmd_decide(o);
    if (*cert) return cmd_check_cert(o);
    if (*quot) return cmd_quotient(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnknownFixture& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    /// Hypothesis and precondition failures of a construction.
    report({{"holds", false}, {"error", e.what()}});
    return kFails;
  }
  return kInputError;
}
