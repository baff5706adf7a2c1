#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "mnl/envelope.hpp"
#include "mnl/errors.hpp"
#include "mnl/etc.hpp"
#include "mnl/io.hpp"
#include "mnl/loops.hpp"

namespace mnl::cli {
namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::string out;
  std::string tensor;
  std::string oracle;
  std::string config;
  double step = 1e-3;
  int sites = 1;
  int trials = 100;
};

struct Outcome {
  Json report;
  bool passed = false;
};

Json header(const std::string& command, const std::string& input) {
  return Json{{"schema", kSchemaVersion}, {"command", command}, {"input", input}};
}

Outcome finish(Json report, Json checks, bool passed) {
  report["checks"] = std::move(checks);
  report["pass"] = passed;
  return {std::move(report), passed};
}

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("MNL_SEED");
  if (raw == nullptr || *raw == '\0') return 0;
  const std::string s(raw);
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("MNL_SEED must be a non-negative integer");
  return seed;
}

Outcome loop_check(const Options& o) {
  const CayleyTable t = resolve_loop(o.input);
  Json checks = Json::array();
  const CheckReport quasi = is_quasigroup(t), unit = has_unit(t);
  CheckReport moufang = CheckReport::fail("moufang", {}, "requires a quasigroup with unit");
  if (quasi && unit) moufang = is_moufang(t);
  for (const CheckReport& r : {quasi, unit, moufang}) checks.push_back(report_to_json(r));
  checks.push_back(report_to_json(is_associative(t)));
  Json report = header("loop-check", o.input);
  report["order"] = t.order();
  return finish(std::move(report), std::move(checks), quasi.passed && unit.passed && moufang.passed);
}

Outcome maltsev(const Options& o) {
  const StructureTensor c = resolve_tensor(o.input);
  const CheckReport lie = is_lie(c), mal = is_maltsev(c);
  Json report = header("maltsev", o.input);
  report["dim"] = c.dim();
  return finish(std::move(report), Json::array({report_to_json(lie), report_to_json(mal)}), mal.passed);
}

Outcome tangent(const Options& o) {
  ParamLoopChart chart;
  StructureTensor expected(1);
  if (o.input == "builtin:octonion") {
    chart = unit_octonion_chart();
    expected = catalog_algebra("m7");
  } else if (o.input.starts_with("builtin:additive(")) {
    expected = catalog_algebra("abelian" + o.input.substr(std::string("builtin:additive").size()));
    chart = additive_chart(expected.dim());
  } else {
    throw InputError("unknown chart '" + o.input + "' (builtin:octonion, builtin:additive(r))");
  }
  constexpr double kTolerance = 1e-5;
  const NumericTensor full = tangent_structure_constants(chart, o.step);
  const NumericTensor half = tangent_structure_constants(chart, o.step / 2);
  const double err = max_abs_diff(full, expected), half_err = max_abs_diff(half, expected);
  Json report = header("tangent", o.input);
  report["step"] = o.step;
  report["max_error"] = err;
  report["half_step_error"] = half_err;
  report["error_ratio"] = half_err > 0 ? Json(err / half_err) : Json(nullptr);
  report["raw_asymmetry"] = full.raw_asymmetry;
  report["tolerance"] = kTolerance;
  const bool ok = err <= kTolerance;
  std::ostringstream detail;
  detail << "max-abs error " << err << " against the catalog tensor";
  const CheckReport match = ok ? CheckReport::pass("catalog-match", detail.str())
                               : CheckReport::fail("catalog-match", {}, detail.str());
  return finish(std::move(report), Json::array({report_to_json(match)}), ok);
}

StructureTensor tensor_for_generators(const Options& o) {
  return o.tensor.empty() ? default_tensor_for(o.input) : resolve_tensor(o.tensor);
}

Outcome glc(const Options& o) {
  const GeneratorSet gen = resolve_generators(o.input);
  const StructureTensor c = tensor_for_generators(o);
  if (c.dim() != gen.r) throw InputError("structure tensor dimension does not match generator count");
  const GLCReport r = check_glc(gen, c);
  Json checks = Json::array();
  for (const auto& f : r.families) checks.push_back(report_to_json(f));
  Json report = header("glc", o.input);
  report["r"] = gen.r;
  report["dim"] = gen.dim;
  return finish(std::move(report), std::move(checks), r.passed());
}

Outcome envelope(const Options& o) {
  const StructureTensor c = resolve_tensor(o.input);
  Json report = header("envelope", o.input);
  const int r = c.dim();
  const int bound = 2 * r + r * (r - 1) / 2;
  report["r"] = r;
  report["bound"] = bound;
  EnvelopeAlgebra env;
  try {
    env = build_envelope(c);
  } catch (const PreconditionError& e) {
    return finish(std::move(report), Json::array({report_to_json(CheckReport::fail("precondition", {}, e.what()))}), false);
  }
  report["dim"] = env.dim();
  report["relation_rank"] = env.relation_rank;
  report["quotient_consistent"] = env.quotient_consistent;
  report["basis"] = env.labels;
  Json checks = Json::array();
  const CheckReport jacobi = check_jacobi(env);
  const CheckReport within = env.dim() <= bound
                                 ? CheckReport::pass("dimension-bound")
                                 : CheckReport::fail("dimension-bound", {env.dim()}, "dimension exceeds 2r + r(r-1)/2");
  checks.push_back(report_to_json(jacobi));
  checks.push_back(report_to_json(within));
  bool ok = jacobi.passed && within.passed && env.quotient_consistent;
  if (!o.oracle.empty()) {
    const GeneratorSet gen = resolve_generators(o.oracle);
    const int closure = matrix_closure_dim(gen);
    report["oracle"] = o.oracle;
    report["closure_dim"] = closure;
    const CheckReport match = closure == env.dim()
                                  ? CheckReport::pass("closure-match")
                                  : CheckReport::fail("closure-match", {env.dim(), closure},
                                                      "envelope dimension differs from the matrix closure");
    const CheckReport realize = realize_check(env, gen, c);
    checks.push_back(report_to_json(match));
    checks.push_back(report_to_json(realize));
    ok = ok && match.passed && realize.passed;
  }
  return finish(std::move(report), std::move(checks), ok);
}

void apply_config(Options& o, const CLI::App& sub) {
  if (o.config.empty()) return;
  const Json cfg = read_json_file(o.config);
  if (!cfg.is_object()) throw InputError("scenario config must be a JSON object");
  static const std::set<std::string> known{"generators", "sites", "format", "trials", "tensor"};
  for (const auto& [key, value] : cfg.items()) {
    if (!known.contains(key)) throw InputError("unknown key \"" + key + "\" in scenario config");
  }
  try {
    if (cfg.contains("generators") && o.input.empty()) o.input = cfg["generators"].get<std::string>();
    if (cfg.contains("sites") && sub.count("--sites") == 0) o.sites = cfg["sites"].get<int>();
    if (cfg.contains("trials") && sub.count("--trials") == 0) o.trials = cfg["trials"].get<int>();
    if (cfg.contains("tensor") && o.tensor.empty()) o.tensor = cfg["tensor"].get<std::string>();
    if (cfg.contains("format") && sub.count("--format") == 0) o.format = cfg["format"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("scenario config: ") + e.what());
  }
  if (o.format != "json" && o.format != "text") throw InputError("format must be json or text");
}

Outcome etc(const Options& o) {
  if (o.input.empty()) throw InputError("etc needs generators (argument or \"generators\" in --config)");
  if (o.trials < 0) throw InputError("--trials must be non-negative");
  const std::uint64_t seed = seed_from_env();
  const GeneratorSet gen = resolve_generators(o.input);
  const StructureTensor c = tensor_for_generators(o);
  if (c.dim() != gen.r) throw InputError("structure tensor dimension does not match generator count");
  const FockOps fock = build_fock(gen.dim, o.sites);
  const FieldSet fields = canonical_fields(fock);

  const CheckReport canonical = canonical_etc_check(fields);
  const ChargeDensitySet dens = charge_densities(fields, gen, c);
  const ETCReport etc = etc_verify(dens, c);
  const ChargeSet q = charges(dens);
  CheckReport theorem = charge_algebra_check(q, c);
  // The lemma is an identity of one site's modes; one site is enough.
  const CheckReport lemma =
      bilinear_lemma_check(o.sites == 1 ? fields : canonical_fields(build_fock(gen.dim, 1)), o.trials, seed);
  const bool generator_level = check_glc(gen, c).passed();
  const CheckReport agree =
      generator_level == etc.passed()
          ? CheckReport::pass("consistency", std::string("density algebra and generator algebra both ") +
                                                 (generator_level ? "pass" : "fail"))
          : CheckReport::fail("consistency", {}, "density algebra and generator algebra disagree");

  Json report = header("etc", o.input);
  report["sites"] = o.sites;
  report["modes_per_site"] = gen.dim;
  report["dimension"] = fock.dim;
  report["seed"] = seed;
  report["trials"] = o.trials;
  Json body = etc_to_json(etc);
  body["conventions"]["charge-bracket-factor"] =
      q.bracket_factor.str() + ": [sigma(M), sigma(N)] = factor sigma([M,N]) with sigma = -i sum_x rho_x";
  report["conventions"] = body["conventions"];
  Json theorem_entry{{"eq", "theorem"}, {"pass", theorem.passed}};
  if (!theorem.passed) theorem_entry["witness"] = theorem.witness;
  theorem_entry["detail"] = theorem.detail;
  body["equations"].push_back(std::move(theorem_entry));
  report["equations"] = body["equations"];
  const bool ok = etc.passed() && theorem.passed && canonical.passed && lemma.passed && agree.passed;
  Json checks = Json::array({report_to_json(canonical), report_to_json(lemma), report_to_json(agree)});
  return finish(std::move(report), std::move(checks), ok);
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_entry(std::ostream& os, const Json& e, const std::string& name_key) {
  os << "  " << std::left << std::setw(16) << e.at(name_key).get<std::string>() << (e.at("pass").get<bool>() ? "pass" : "FAIL");
  if (e.contains("informational")) os << " (informational)";
  if (e.contains("witness")) os << " witness=" << e["witness"].dump();
  if (e.contains("detail")) os << "  " << e["detail"].get<std::string>();
  os << "\n";
}

void render_text(std::ostream& os, const Json& report) {
  for (const auto& [key, value] : report.items()) {
    if (key == "schema" || key == "checks" || key == "equations" || key == "pass") continue;
    if (value.is_object()) {
      os << key << ":\n";
      for (const auto& [k, v] : value.items()) os << "  " << k << ": " << scalar_text(v) << "\n";
    } else if (value.is_array()) {
      os << key << ": " << value.dump() << "\n";
    } else {
      os << key << ": " << scalar_text(value) << "\n";
    }
  }
  if (report.contains("equations")) {
    os << "equations:\n";
    for (const auto& e : report["equations"]) render_entry(os, e, "eq");
  }
  os << "checks:\n";
  for (const auto& e : report["checks"]) render_entry(os, e, "property");
  os << "result: " << (report["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification workbench for Moufang loops, Mal'tsev algebras and their charge algebras", "mnl"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, const std::string& what, bool required = true) {
    auto* opt = sub->add_option("input", o.input, what);
    if (required) opt->required();
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out, "Write the report to this file instead of stdout");
  };
  auto* loop_cmd = app.add_subcommand("loop-check", "Quasigroup, unit, Moufang and associativity scans of a Cayley table");
  common(loop_cmd, "Cayley table JSON or builtin:NAME");
  auto* maltsev_cmd = app.add_subcommand("maltsev", "Lie and Mal'tsev identities of a structure tensor");
  common(maltsev_cmd, "Structure tensor JSON or builtin:NAME");
  auto* tangent_cmd = app.add_subcommand("tangent", "Structure constants of a loop chart by finite differences");
  common(tangent_cmd, "builtin:octonion or builtin:additive(r)");
  tangent_cmd->add_option("--step", o.step, "Finite-difference step in (0, 0.1)");
  auto* glc_cmd = app.add_subcommand("glc", "Generalized Lie-Cartan relations of a generator set");
  common(glc_cmd, "Generator JSON, builtin:octonion or builtin:quaternion");
  glc_cmd->add_option("--tensor", o.tensor, "Structure tensor (default: paired with builtin generators)");
  auto* env_cmd = app.add_subcommand("envelope", "Enveloping Lie algebra of a Mal'tsev structure tensor");
  common(env_cmd, "Structure tensor JSON or builtin:NAME");
  env_cmd->add_option("--oracle", o.oracle, "Generators whose matrix closure is compared against the envelope");
  auto* etc_cmd = app.add_subcommand("etc", "Charge density ETC algebra and charge theorem on a fermionic lattice");
  common(etc_cmd, "Generator JSON, builtin:octonion or builtin:quaternion", false);
  etc_cmd->add_option("--sites", o.sites, "Lattice sites N (modes * N <= 16)");
  etc_cmd->add_option("--trials", o.trials, "Random pairs for the bilinear lemma (seed from MNL_SEED)");
  etc_cmd->add_option("--tensor", o.tensor, "Structure tensor (default: paired with builtin generators)");
  etc_cmd->add_option("--config", o.config, "Scenario JSON with generators, sites, format, trials, tensor");

  std::vector<const char*> argv{"mnl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << "error: " << e.what() << "\n" << sub->help();
    return kInputError;
  }

  Outcome outcome;
  try {
    CLI::App* sub = app.get_subcommands().front();
    if (sub == etc_cmd) apply_config(o, *etc_cmd);
    if (sub == loop_cmd) outcome = loop_check(o);
    else if (sub == maltsev_cmd) outcome = maltsev(o);
    else if (sub == tangent_cmd) outcome = tangent(o);
    else if (sub == glc_cmd) outcome = glc(o);
    else if (sub == env_cmd) outcome = envelope(o);
    else outcome = etc(o);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::ostringstream rendered;
  if (o.format == "json") {
    rendered << outcome.report.dump(2) << "\n";
  } else {
    render_text(rendered, outcome.report);
  }
  if (o.out.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(o.out);
    if (!(file << rendered.str())) {
      err << "error: cannot write " << o.out << "\n";
      return kInputError;
    }
  }
  return outcome.passed ? kPass : kViolation;
}

}  // namespace mnl::cli
