// Command-line front end: polarize, vergne, filtration, jump, stratum, cell,
// verify, probe and builtin. Exit codes: 0 ok, 1 invalid input, 2 check failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lagsel/io.hpp"
#include "lagsel/lagsel.hpp"
#include "lagsel/suites.hpp"

namespace {

using lagsel::io::Json;

enum ExitCode { kOk = 0, kInvalidInput = 1, kCheckFailed = 2 };

struct Output {
  Json payload;
  std::string text;
  ExitCode code = kOk;
};

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
Json load_document(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    return lagsel::io::parse(arg);
  }
  std::ifstream in(arg);
  if (!in) {
    throw lagsel::InvalidInput("cannot read '" + arg + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return lagsel::io::parse(buf.str());
}

/// Builtin names and inline JSON pass through; anything else is read as a file.
std::string read_algebra_spec(const std::string& arg) {
  std::ifstream in(arg);
  if (arg.empty() || arg.front() == '{' || !in) return arg;
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

lagsel::Flag load_flag(const std::string& arg, std::size_t m) {
  if (arg.empty()) return lagsel::Flag::standard(m);
  lagsel::Flag f = lagsel::io::decode_flag(load_document(arg));
  if (f.dim() != m) throw lagsel::DimensionMismatch("flag", m, f.dim());
  return f;
}

/// "0,1,1/2" or a JSON array.
lagsel::Functional parse_functional(const std::string& text) {
  if (!text.empty() && text.front() == '[') {
    return lagsel::io::decode_functional(lagsel::io::parse(text));
  }
  lagsel::Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(lagsel::parse_rational(item));
  return lagsel::Functional{std::move(v)};
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  if (!text.empty() && text.front() == '[') {
    const Json j = lagsel::io::parse(text);
    for (const auto& x : j) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw lagsel::InvalidInput("jump indices must be integers");
      out.push_back(x.get<std::size_t>());
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos) {
      throw lagsel::InvalidInput("jump indices must be comma-separated integers");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

// ---- text rendering ----

std::string format_combination(const lagsel::Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    lagsel::Rational c = v[i];
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != 1) out += lagsel::to_string(c) + " ";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> default_labels(std::size_t m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

std::string format_subspace(const lagsel::Subspace& s, const std::vector<std::string>& labels) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    out += (i ? ", " : "") + format_combination(s.basis().row_vector(i), labels);
  }
  return out + "}  (dim " + std::to_string(s.dim()) + ")";
}

std::string format_list(const std::vector<std::size_t>& v, char open = '(', char close = ')') {
  std::string out(1, open);
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + close;
}

// ---- commands ----

Output cmd_polarize(const std::string& form_arg, const std::string& flag_arg) {
  const lagsel::SkewForm b = lagsel::io::decode_form(load_document(form_arg));
  const lagsel::Flag flag = load_flag(flag_arg, b.dim());
  const lagsel::Subspace p = lagsel::vergne_select(b, flag);
  const lagsel::JumpSet cell = lagsel::jump_indices(p, flag);
  const lagsel::SignatureVector k = lagsel::signature_vector(b, flag);
  const lagsel::Subspace radical = lagsel::null_space(b);
  if (!lagsel::is_lagrangian(b, p) || !lagsel::contains(p, radical)) {
    throw lagsel::CheckFailed("selection is not a Lagrangian subspace containing N(B)");
  }
  Output out;
  out.payload = Json{{"polarization", lagsel::io::encode(p)},
                     {"null_space", lagsel::io::encode(radical)},
                     {"cell", lagsel::io::encode(cell)},
                     {"signature", lagsel::io::encode(k)}};
  const auto labels = default_labels(b.dim());
  out.text = "p(B)       = " + format_subspace(p, labels) + "\nN(B)       = " + format_subspace(radical, labels) +
             "\ncell       = " + format_list(cell.indices, '{', '}') + "\nsignature  = " + format_list(k.values()) +
             "\n";
  return out;
}

Output cmd_vergne(const std::string& algebra_arg, const std::string& xi_arg, const std::string& flag_arg) {
  const auto resolved = lagsel::io::resolve_algebra(read_algebra_spec(algebra_arg));
  const lagsel::LieAlgebra& lie = resolved.algebra;
  const lagsel::Flag flag = flag_arg.empty() ? resolved.flag : load_flag(flag_arg, lie.dim());
  const lagsel::Functional xi = parse_functional(xi_arg);
  if (xi.dim() != lie.dim()) throw lagsel::DimensionMismatch("functional", lie.dim(), xi.dim());

  const lagsel::Subspace p = lagsel::vergne_polarization(lie, flag, xi);
  const lagsel::Subspace iso = lagsel::isotropy_subalgebra(lie, xi);
  if (!lagsel::is_subalgebra(lie, p)) throw lagsel::CheckFailed("Vergne polarization is not a subalgebra");
  if (!lagsel::is_subordinate(lie, xi, p)) throw lagsel::CheckFailed("Vergne polarization is not subordinate to xi");
  const lagsel::SignatureVector k = lagsel::stratum(lie, flag, xi);
  const lagsel::JumpSet cell = lagsel::jump_indices(p, flag);

  Output out;
  out.payload = Json{{"polarization", lagsel::io::encode(p)},
                     {"isotropy", lagsel::io::encode(iso)},
                     {"stratum", lagsel::io::encode(k)},
                     {"cell", lagsel::io::encode(cell)}};
  out.text = "p_alg(xi)  = " + format_subspace(p, lie.labels()) + "\ng(xi)      = " +
             format_subspace(iso, lie.labels()) + "\nstratum    = " + format_list(k.values()) +
             "\ncell       = " + format_list(cell.indices, '{', '}') + "\n";
  return out;
}

Output cmd_filtration(const std::string& form_arg, const std::string& flag_arg) {
  const lagsel::SkewForm b = lagsel::io::decode_form(load_document(form_arg));
  const lagsel::Flag flag = load_flag(flag_arg, b.dim());
  const lagsel::FiltrationTrace trace = lagsel::filtration(b, flag);
  const lagsel::LemmaReport report = lagsel::verify_filtration_lemmas(b, flag);
  Output out;
  out.payload = Json{{"trace", lagsel::io::encode(trace)}, {"lemmas", lagsel::io::encode(report)}};
  const auto labels = default_labels(b.dim());
  std::ostringstream os;
  os << "d = " << trace.d() << "\n";
  for (std::size_t k = 0; k <= trace.d(); ++k) {
    os << "p^" << k << " = " << format_subspace(trace.chain[k], labels) << "\n";
    if (k < trace.d()) os << "  i_" << k + 1 << " = " << trace.i_seq[k] << ", j_" << k + 1 << " = " << trace.j_seq[k] << "\n";
  }
  for (const auto& c : report.checks) {
    os << (c.passed ? "[pass] " : "[FAIL] ") << c.name << (c.passed ? "" : "  " + c.witness) << "\n";
  }
  out.text = os.str();
  out.code = report.all_passed() ? kOk : kCheckFailed;
  return out;
}

Output cmd_jump(const std::string& subspace_arg, const std::string& flag_arg) {
  const lagsel::Subspace w = lagsel::io::decode_subspace(load_document(subspace_arg));
  const lagsel::Flag flag = load_flag(flag_arg, w.ambient_dim());
  const lagsel::JumpSet e = lagsel::jump_indices(w, flag);
  Output out;
  out.payload = Json{{"jumps", lagsel::io::encode(e)}};
  out.text = "jump W = " + format_list(e.indices, '{', '}') + "\n";
  return out;
}

Output cmd_stratum(const std::string& algebra_arg, const std::string& xi_arg, const std::string& flag_arg) {
  const auto resolved = lagsel::io::resolve_algebra(read_algebra_spec(algebra_arg));
  const lagsel::Flag flag = flag_arg.empty() ? resolved.flag : load_flag(flag_arg, resolved.algebra.dim());
  const lagsel::Functional xi = parse_functional(xi_arg);
  if (xi.dim() != resolved.algebra.dim()) throw lagsel::DimensionMismatch("functional", resolved.algebra.dim(), xi.dim());
  const lagsel::SignatureVector k = lagsel::stratum(resolved.algebra, flag, xi);
  Output out;
  out.payload = Json{{"stratum", lagsel::io::encode(k)}};
  out.text = "stratum = " + format_list(k.values()) + "\n";
  return out;
}

Output cmd_cell(std::size_t m, const std::string& jumps_arg) {
  const lagsel::JumpSet e{m, parse_indices(jumps_arg)};
  const lagsel::SignatureVector k = lagsel::cell_to_signature(e);
  Output out;
  out.payload = Json{{"jumps", lagsel::io::encode(e)}, {"signature", lagsel::io::encode(k)}};
  out.text = "signature = " + format_list(k.values()) + "\n";
  return out;
}

Output cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t trials) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = lagsel::suites::suite_names();
  } else {
    names.push_back(suite);
  }
  Output out;
  Json results = Json::array();
  bool all_passed = true;
  std::ostringstream os;
  for (const auto& name : names) {
    const auto r = lagsel::suites::run(name, seed, trials);
    all_passed = all_passed && r.passed();
    results.push_back(Json{{"suite", r.name},
                           {"trials", r.trials},
                           {"failures", r.failures},
                           {"passed", r.passed()},
                           {"witnesses", r.witnesses}});
    os << (r.passed() ? "PASS " : "FAIL ") << r.name << "  " << r.trials - r.failures << "/" << r.trials << "\n";
    for (const auto& w : r.witnesses) os << "  " << w << "\n";
  }
  out.payload = Json{{"seed", seed}, {"passed", all_passed}, {"suites", std::move(results)}};
  out.text = os.str();
  out.code = all_passed ? kOk : kCheckFailed;
  return out;
}

struct Preset {
  const char* name;
  const char* algebra;
  std::vector<int> base;
  std::vector<int> direction;
};

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all{
      {"g54-discontinuity", "g54", {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}},
      {"g54-instratum", "g54", {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}},
      {"g615-discontinuity", "g615", {0, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0}},
      {"g615-instratum", "g615", {0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}},
  };
  return all;
}

lagsel::Functional to_functional(const std::vector<int>& v) {
  lagsel::Vector out;
  for (int x : v) out.emplace_back(x);
  return lagsel::Functional{std::move(out)};
}

std::vector<lagsel::Rational> probe_samples(const Json& spec, const lagsel::Rational& t_star) {
  if (spec.contains("samples")) {
    return lagsel::io::decode_vector(spec.at("samples"));
  }
  const std::size_t count = spec.contains("dyadic") ? spec.at("dyadic").get<std::size_t>() : 20;
  return lagsel::dyadic_samples(t_star, count);
}

Json encode_rank_report(const lagsel::RankProbeReport& r) {
  Json outcomes = Json::array();
  for (const auto& o : r.outcomes) {
    outcomes.push_back(Json{{"scale", lagsel::io::encode(o.scale)},
                            {"trials", o.trials},
                            {"nullity_changes", o.nullity_changes},
                            {"all_within", o.all_within}});
  }
  return Json{{"base_nullity", r.base_nullity},
              {"outcomes", std::move(outcomes)},
              {"passing_scale", r.passing_scale ? lagsel::io::encode(*r.passing_scale) : Json(nullptr)},
              {"smallest_scale_failed", r.smallest_scale_failed}};
}

Output cmd_probe(const std::string& spec_arg, std::uint64_t seed) {
  Json spec;
  for (const auto& p : presets()) {
    if (spec_arg == p.name) {
      spec = Json{{"algebra", p.algebra},
                  {"base", lagsel::io::encode(to_functional(p.base).values)},
                  {"direction", lagsel::io::encode(to_functional(p.direction).values)},
                  {"t_star", "0"},
                  {"dyadic", 20}};
    }
  }
  if (spec.is_null()) spec = load_document(spec_arg);
  if (spec.contains("preset")) return cmd_probe(spec.at("preset").get<std::string>(), seed);

  Output out;
  std::ostringstream os;
  if (spec.value("kind", std::string()) == "rank-semicontinuity") {
    const lagsel::SkewForm b = lagsel::io::decode_form(spec.at("form"));
    const std::size_t trials = spec.value("trials", std::size_t{20});
    const auto scales = lagsel::io::decode_vector(spec.at("scales"));
    const auto report = lagsel::rank_semicontinuity_probe(b, trials, scales, seed);
    out.payload = encode_rank_report(report);
    os << "dim N(B) = " << report.base_nullity << "\n";
    for (const auto& o : report.outcomes) {
      os << "scale " << lagsel::to_string(o.scale) << ": " << (o.all_within ? "all dim N(B') <= dim N(B)" : "increase seen")
         << "\n";
    }
    os << "passing scale: " << (report.passing_scale ? lagsel::to_string(*report.passing_scale) : "none") << "\n";
    out.text = os.str();
    return out;
  }

  const lagsel::Rational t_star = spec.contains("t_star") ? lagsel::io::decode_rational(spec.at("t_star")) : lagsel::Rational(0);
  const auto samples = probe_samples(spec, t_star);
  lagsel::PathProbeReport report = [&] {
    if (spec.contains("form")) {
      const Json& f = spec.at("form");
      const lagsel::FormPath path{lagsel::io::decode_form(f.at("base")), lagsel::io::decode_form(f.at("direction"))};
      const lagsel::Flag flag = spec.contains("flag") ? lagsel::io::decode_flag(spec.at("flag"))
                                                      : lagsel::Flag::standard(path.base.dim());
      return lagsel::path_probe(path, flag, t_star, samples);
    }
    const Json& alg = spec.at("algebra");
    const auto resolved = lagsel::io::resolve_algebra(alg.is_string() ? alg.get<std::string>() : alg.dump());
    const lagsel::Flag flag = spec.contains("flag") ? lagsel::io::decode_flag(spec.at("flag")) : resolved.flag;
    const lagsel::FunctionalPath path{lagsel::io::decode_functional(spec.at("base")),
                                      lagsel::io::decode_functional(spec.at("direction"))};
    return lagsel::path_probe(resolved.algebra, flag, path, t_star, samples);
  }();
  out.payload = lagsel::io::encode(report);
  os << "t*        = " << lagsel::to_string(report.t_star) << "   stratum " << format_list(report.reference_stratum.values())
     << "  cell " << format_list(report.reference_cell.indices, '{', '}') << "\n";
  for (const auto& s : report.samples) {
    char line[64];
    std::snprintf(line, sizeof line, "%-12.6g gap %.12f", lagsel::to_double(s.t), s.gap);
    os << "t = " << line << "  stratum " << format_list(s.stratum.values()) << "  cell "
       << format_list(s.cell.indices, '{', '}') << "\n";
  }
  os << "verdict: " << lagsel::to_string(report.verdict) << "\n";
  out.text = os.str();
  return out;
}

Output cmd_builtin(const std::string& name) {
  const auto resolved = lagsel::io::resolve_algebra(read_algebra_spec(name));
  const bool jh = lagsel::verify_jordan_holder(resolved.algebra, resolved.flag);
  Output out;
  out.payload = Json{{"algebra", lagsel::io::encode(resolved.algebra)},
                     {"flag", lagsel::io::encode(resolved.flag)},
                     {"jordan_holder", jh},
                     {"derived_algebra", lagsel::io::encode(resolved.algebra.derived_algebra())}};
  std::ostringstream os;
  os << "dim " << resolved.algebra.dim() << "\n";
  for (const auto& br : resolved.algebra.brackets()) {
    os << "[" << resolved.algebra.labels()[br.i] << ", " << resolved.algebra.labels()[br.j]
       << "] = " << format_combination(br.value, resolved.algebra.labels()) << "\n";
  }
  os << "standard flag is Jordan-Holder: " << (jh ? "yes" : "no") << "\n";
  out.text = os.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian selections of skew forms and Vergne polarizations"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string flag_file;
  std::uint64_t seed = 42;
  std::size_t trials = 0;
  app.add_flag("--json", as_json, "Print machine-readable JSON");

  std::string form_arg, algebra_arg, xi_arg, subspace_arg, jumps_arg, suite_arg, spec_arg, builtin_arg;
  std::size_t cell_dim = 0;

  auto* polarize = app.add_subcommand("polarize", "Vergne selection p(B) with its cell and signature");
  polarize->add_option("form", form_arg, "Skew form JSON file (or inline JSON)")->required();
  polarize->add_option("--flag", flag_file, "Flag JSON file");

  auto* vergne = app.add_subcommand("vergne", "Vergne polarization p_alg(xi) of a Lie algebra");
  vergne->add_option("algebra", algebra_arg, "g54 | g615 | heisenberg:n | axb:<matrix> | algebra JSON")->required();
  vergne->add_option("--xi", xi_arg, "Functional, e.g. 0,1,0,0,0")->required();
  vergne->add_option("--flag", flag_file, "Flag JSON file");

  auto* filtration = app.add_subcommand("filtration", "Inductive filtration trace and lemma checks");
  filtration->add_option("form", form_arg, "Skew form JSON")->required();
  filtration->add_option("--flag", flag_file, "Flag JSON file");

  auto* jump = app.add_subcommand("jump", "Jump indices of a subspace");
  jump->add_option("subspace", subspace_arg, "Subspace JSON")->required();
  jump->add_option("--flag", flag_file, "Flag JSON file");

  auto* stratum = app.add_subcommand("stratum", "Stratum label of a functional");
  stratum->add_option("algebra", algebra_arg, "Algebra name or JSON")->required();
  stratum->add_option("--xi", xi_arg, "Functional")->required();
  stratum->add_option("--flag", flag_file, "Flag JSON file");

  auto* cell = app.add_subcommand("cell", "Signature vector of a Lagrangian Schubert cell");
  cell->add_option("--dim", cell_dim, "Ambient dimension m")->required();
  cell->add_option("--jumps", jumps_arg, "Jump indices, e.g. 4 or 5,6 (empty for none)");

  auto* verify = app.add_subcommand("verify", "Run a randomized verification suite");
  verify->add_option("suite", suite_arg, "filtration-lemmas | example-oracles | lie-contract | casimir | "
                                         "projector-sum | all")
      ->required();

  auto* probe = app.add_subcommand("probe", "Gap-metric path probe");
  probe->add_option("spec", spec_arg, "Preset name or probe spec JSON")->required();

  auto* builtin = app.add_subcommand("builtin", "Show a builtin algebra");
  builtin->add_option("name", builtin_arg, "g54 | g615 | heisenberg:n | axb:<matrix>")->required();

  for (auto* sub : {verify, probe}) {
    sub->add_option("--seed", seed, "Random seed");
  }
  verify->add_option("--trials", trials, "Trials (0 for the suite default)");
  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", as_json, "Print machine-readable JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  Output out;
  try {
    if (*polarize) out = cmd_polarize(form_arg, flag_file);
    else if (*vergne) out = cmd_vergne(algebra_arg, xi_arg, flag_file);
    else if (*filtration) out = cmd_filtration(form_arg, flag_file);
    else if (*jump) out = cmd_jump(subspace_arg, flag_file);
    else if (*stratum) out = cmd_stratum(algebra_arg, xi_arg, flag_file);
    else if (*cell) out = cmd_cell(cell_dim, jumps_arg);
    else if (*verify) out = cmd_verify(suite_arg, seed, trials);
    else if (*probe) out = cmd_probe(spec_arg, seed);
    else if (*builtin) out = cmd_builtin(builtin_arg);
  } catch (const lagsel::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (as_json) std::cout << Json{{"status", "invalid-input"}, {"error", e.what()}}.dump() << "\n";
    return kInvalidInput;
  } catch (const lagsel::CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    if (as_json) std::cout << Json{{"status", "check-failed"}, {"error", e.what()}}.dump() << "\n";
    return kCheckFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kInvalidInput;
  }

  if (as_json) {
    Json doc{{"status", out.code == kOk ? "ok" : "check-failed"}};
    doc["result"] = std::move(out.payload);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.code;
}
