#include "jetspace/cli.hpp"

#include <chrono>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jetspace/errors.hpp"
#include "jetspace/invariants.hpp"
#include "jetspace/jets.hpp"

namespace jetspace {

namespace {

using nlohmann::json;

constexpr const char* schema_version = "jetspace-report/1";

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

int param_int(const ProblemSpec& spec, const std::string& key, int fallback) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : std::stoi(it->second);
}

Ideal resolve_ideal(const ProblemSpec& spec, const std::string& expr) {
  std::optional<Ideal> acc;
  for (const auto& name : split_on(expr, '*')) {
    Ideal next(*spec.ring, *spec.find_ideal(name));
    acc = acc ? ideal_product(*acc, next) : next;
  }
  return *acc;
}

json strings_of(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string point_text(const Point& p) {
  std::vector<std::string> c;
  for (const auto& r : p) c.push_back(r.to_string());
  return "(" + join(c, ", ") + ")";
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json optional_rational(const std::optional<Rational>& v) { return v ? json(v->to_string()) : json(nullptr); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Human lines and the machine payload, filled by one command.
struct Section {
  std::vector<std::string> lines;
  json result = json::object();
  std::string status = "ok";
  int exit_code = exit_ok;
};

void run_jets(const ProblemSpec& spec, const RunOptions& opt, Section& s) {
  const Ideal I = resolve_ideal(spec, spec.params.at("ideal"));
  const int m = param_int(spec, "m", 0);
  const JetIdeal J = jet_ideal(I, m);
  const int dim = krull_dimension(J.ideal, opt.budget).dim;
  s.lines.push_back("jet scheme at level " + std::to_string(m) + " in " + std::to_string(J.jets.arity()) +
                    " variables");
  for (const auto& g : J.ideal.generators()) s.lines.push_back("  " + g.to_string());
  s.lines.push_back("dimension: " + std::to_string(dim));
  s.result = {{"level", m},
              {"variables", J.jets.ring().names()},
              {"generators", strings_of(J.ideal.generators())},
              {"dimension", dim}};
}

void run_dim(const ProblemSpec& spec, const RunOptions& opt, Section& s) {
  const Ideal I = resolve_ideal(spec, spec.params.at("ideal"));
  const DimensionResult d = krull_dimension(I, opt.budget);
  std::vector<std::string> names;
  for (std::size_t i : d.witness) names.push_back(I.ring().name(i));
  s.lines.push_back("dimension: " + std::to_string(d.dim));
  if (d.dim >= 0) s.lines.push_back("independent variables: {" + join(names, ", ") + "}");
  s.result = {{"dimension", d.dim}, {"independent_variables", names}};
}

void run_tangent_cone(const ProblemSpec& spec, const RunOptions& opt, Section& s) {
  const Ideal I = resolve_ideal(spec, spec.params.at("ideal"));
  const TangentCone c = tangent_cone(I, *spec.point, opt.budget);
  const std::string source =
      c.source == ConeSource::hypersurface_initial_form ? "hypersurface-initial-form" : "homogenization-gb";
  s.lines.push_back("tangent cone at " + point_text(*spec.point) + " (moved to the origin), from " + source);
  for (const auto& g : c.ideal.generators()) s.lines.push_back("  " + g.to_string());
  s.result = {{"generators", strings_of(c.ideal.generators())}, {"source", source}};
}

json lambda_json(const LambdaReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"m", row.m},
                    {"lambda0", row.nonempty ? json(row.lambda0) : json(nullptr)},
                    {"converged", row.converged},
                    {"e_range", {row.e_min, row.e_max}},
                    {"e_argmax", row.e_argmax},
                    {"cell_dims", row.cell_dims},
                    {"budget_exhausted", row.budget_exhausted},
                    {"note", row.note}});
  }
  return {{"n", r.n},
          {"e_max", r.e_max},
          {"rows", rows},
          {"stabilized", r.stabilized},
          {"lambda", optional_json(r.lambda)},
          {"isolated", r.isolated},
          {"lambda_m", r.isolated ? "equals lambda_m^0" : "bounded above by lambda_m^0"},
          {"mld_hat", optional_rational(r.mld_hat)}};
}

void lambda_lines(const LambdaReport& r, std::vector<std::string>& lines) {
  lines.push_back("n = " + std::to_string(r.n) + ", contact orders e in [0, " + std::to_string(r.e_max) + "]");
  for (const auto& row : r.rows) {
    std::string line = "  m = " + std::to_string(row.m) + ": lambda_m^0 = ";
    line += row.nonempty ? std::to_string(row.lambda0) : std::string("(no nonempty cell)");
    line += row.converged ? ", converged" : ", not converged";
    if (row.e_argmax >= 0) line += ", max at e = " + std::to_string(row.e_argmax);
    if (row.budget_exhausted) line += ", budget exhausted";
    if (!row.note.empty()) line += " (" + row.note + ")";
    lines.push_back(line);
  }
  lines.push_back(r.isolated ? "isolated singularity: lambda_m = lambda_m^0"
                             : "singular locus is positive dimensional: lambda_m <= lambda_m^0 only");
  if (r.mld_hat) lines.push_back("mld^ = n + lambda = " + r.mld_hat->to_string());
  else lines.push_back("mld^ not reported: rows did not stabilize");
}

bool any_exhausted(const LambdaReport& r) {
  return std::any_of(r.rows.begin(), r.rows.end(), [](const LambdaRow& row) { return row.budget_exhausted; });
}

void run_lambda(const ProblemSpec& spec, const RunOptions& opt, Section& s) {
  const Ideal I = resolve_ideal(spec, spec.params.at("ideal"));
  const LambdaReport r = lambda_sequence(I, *spec.point, param_int(spec, "m_max", 3), param_int(spec, "e_max", 3),
                                         opt.budget, opt.jobs);
  s.lines.push_back("lambda sequence at " + point_text(*spec.point));
  lambda_lines(r, s.lines);
  s.result = lambda_json(r);
  if (any_exhausted(r)) {
    s.status = "budget_exhausted";
    s.exit_code = exit_budget;
  }
}

void run_check_main(const ProblemSpec& spec, const RunOptions& opt, Section& s) {
  const Ideal I = resolve_ideal(spec, spec.params.at("ideal"));
  const bool cross = param_int(spec, "cross_check", 1) == 1;
  const InvariantReport r =
      check_mld_hat_equals_n(I, *spec.point, cross, param_int(spec, "e_max", 3), opt.budget, opt.jobs);
  auto verdict = [](const std::optional<bool>& v) { return v ? yes_no(*v) : std::string("undecided"); };
  s.lines.push_back("mld^ = n test at " + point_text(*spec.point) + ", n = " + std::to_string(r.n));
  s.lines.push_back("tangent cone:");
  for (const auto& g : r.tangent_cone.ideal.generators()) s.lines.push_back("  " + g.to_string());
  s.lines.push_back("reduced irreducible component (tangent cone): " + verdict(r.reduced_component));
  if (r.certificate)
    s.lines.push_back("product of multiplicity-one factors: " + r.certificate->to_string() +
                      (r.certificate->is_constant() ? " (none)" : ""));
  json lambda = nullptr;
  if (r.lambda_cross_check) {
    const LambdaRow& row = r.lambda_cross_check->rows.front();
    s.lines.push_back("lambda_1^0 = " + (row.nonempty ? std::to_string(row.lambda0) : std::string("n/a")) +
                      (row.converged ? " (converged)" : " (not converged)"));
    s.lines.push_back("lambda_1^0 = 0: " + verdict(r.lambda_verdict));
    lambda = lambda_json(*r.lambda_cross_check);
    if (any_exhausted(*r.lambda_cross_check)) {
      s.status = "budget_exhausted";
      s.exit_code = exit_budget;
    }
  }
  s.lines.push_back("mld^(x; X) = n: " + verdict(r.mld_hat_equals_n));
  if (r.agreement_checked) s.lines.push_back(std::string("verdicts agree: ") + yes_no(r.agreement));
  for (const auto& note : r.notes) s.lines.push_back("note: " + note);
  s.result = {{"n", r.n},
              {"tangent_cone", strings_of(r.tangent_cone.ideal.generators())},
              {"reduced_component", optional_json(r.reduced_component)},
              {"certificate", r.certificate ? json(r.certificate->to_string()) : json(nullptr)},
              {"lambda_cross_check", lambda},
              {"lambda_verdict", optional_json(r.lambda_verdict)},
              {"mld_hat_equals_n", optional_json(r.mld_hat_equals_n)},
              {"agreement", r.agreement_checked ? json(r.agreement) : json(nullptr)},
              {"notes", r.notes}};
}

void run_lct(const ProblemSpec& spec, const RunOptions& opt, Section& s) {
  const Ideal a = resolve_ideal(spec, spec.params.at("a"));
  std::optional<Ideal> X;
  if (spec.params.count("variety")) X = resolve_ideal(spec, spec.params.at("variety"));
  const ThresholdTable t =
      lct_hat_bound(X, a, param_int(spec, "M", 4), param_int(spec, "e_max", 3), opt.budget, opt.jobs);
  s.lines.push_back(std::string("lct^ bound on ") + (t.smooth_ambient ? "smooth ambient space" : "the variety") +
                    ", m = 1.." + std::to_string(t.M));
  json rows = json::array();
  for (const auto& row : t.rows) {
    s.lines.push_back("  m = " + std::to_string(row.m) + ": codim " +
                      (row.codim ? std::to_string(*row.codim) : std::string("n/a")) + ", ratio " +
                      (row.ratio ? row.ratio->to_string() : std::string("n/a")));
    rows.push_back({{"m", row.m}, {"codim", optional_json(row.codim)}, {"ratio", optional_rational(row.ratio)}});
  }
  s.lines.push_back("bound: " + (t.bound ? t.bound->to_string() : std::string("n/a")) + " at m = " +
                    std::to_string(t.argmin));
  s.lines.push_back(std::string("minimum before the last row: ") + yes_no(t.interior_minimum));
  s.result = {{"rows", rows},
              {"bound", optional_rational(t.bound)},
              {"argmin", t.argmin},
              {"M", t.M},
              {"interior_minimum", t.interior_minimum},
              {"ambient", t.smooth_ambient ? "smooth" : "variety"}};
}

void run_mld(const ProblemSpec& spec, const RunOptions& opt, Section& s) {
  std::vector<MldClause> clauses;
  for (const auto& c : split_on(spec.params.at("clauses"), ',')) {
    const auto colon = c.find(':');
    clauses.push_back(MldClause{resolve_ideal(spec, c.substr(0, colon)), Rational::parse(c.substr(colon + 1))});
  }
  const std::string w = spec.params.count("W") ? spec.params.at("W") : "point";
  const Center center = w == "point" ? Center{*spec.point} : Center{resolve_ideal(spec, w)};
  const MldTable t = mld_hat_bound(clauses, center, param_int(spec, "M", 4), opt.budget, opt.jobs);
  s.lines.push_back("mld^ bound over m_i in 0.." + std::to_string(t.M) + ", center " +
                    (w == "point" ? point_text(*spec.point) : w) + ", contact read as ord >= m_i");
  json rows = json::array();
  for (const auto& row : t.rows) {
    std::vector<std::string> ms;
    for (int m : row.m) ms.push_back(std::to_string(m));
    s.lines.push_back("  m = (" + join(ms, ", ") + "): codim " +
                      (row.codim ? std::to_string(*row.codim) : std::string("empty")) + ", value " +
                      (row.value ? row.value->to_string() : std::string("n/a")));
    rows.push_back({{"m", row.m}, {"codim", optional_json(row.codim)}, {"value", optional_rational(row.value)}});
  }
  std::vector<std::string> am;
  for (int m : t.argmin) am.push_back(std::to_string(m));
  s.lines.push_back("bound: " + (t.bound ? t.bound->to_string() : std::string("n/a")) + " at m = (" + join(am, ", ") +
                    ")");
  std::vector<std::string> ex;
  for (const auto& e : t.exponents) ex.push_back(e.to_string());
  s.result = {{"rows", rows},
              {"bound", optional_rational(t.bound)},
              {"argmin", t.argmin},
              {"exponents", ex},
              {"M", t.M},
              {"interior_minimum", t.interior_minimum},
              {"contact", ">="}};
}

void run_ord(const ProblemSpec& spec, const RunOptions&, Section& s) {
  const Ideal I = resolve_ideal(spec, spec.params.at("ideal"));
  const BlowupOrder o = ord_blowup_origin(I);
  s.lines.push_back("order along the exceptional divisor of the blow-up of the origin: " + std::to_string(o.ord));
  s.lines.push_back("k_E = " + std::to_string(o.k_E) + ", k_E - ord + 1 = " + std::to_string(o.value));
  s.result = {{"ord", o.ord}, {"k_E", o.k_E}, {"value", o.value}};
}

std::optional<long> env_long(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  long out = 0;
  const std::string_view text(v);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc() || ptr != text.data() + text.size() || out < 1)
    throw PreconditionError(std::string(name) + " must be a positive integer");
  return out;
}

}  // namespace

RunOptions options_from_environment() {
  RunOptions o;
  if (auto v = env_long("JETSPACE_MAX_PAIRS")) o.budget.max_pairs = static_cast<std::size_t>(*v);
  if (auto v = env_long("JETSPACE_MAX_DEGREE")) o.budget.max_degree = static_cast<std::uint64_t>(*v);
  if (auto v = env_long("JETSPACE_JOBS")) o.jobs = static_cast<int>(*v);
  return o;
}

Report run_problem(const ProblemSpec& spec, const RunOptions& options) {
  RunOptions opt = options;
  if (spec.max_pairs) opt.budget.max_pairs = *spec.max_pairs;
  if (spec.max_degree) opt.budget.max_degree = *spec.max_degree;

  Section s;
  try {
    const std::string& c = spec.command;
    if (c == "jets") run_jets(spec, opt, s);
    else if (c == "dim") run_dim(spec, opt, s);
    else if (c == "tangent-cone") run_tangent_cone(spec, opt, s);
    else if (c == "check-main") run_check_main(spec, opt, s);
    else if (c == "lambda") run_lambda(spec, opt, s);
    else if (c == "lct-bound") run_lct(spec, opt, s);
    else if (c == "mld-bound") run_mld(spec, opt, s);
    else if (c == "ord-blowup") run_ord(spec, opt, s);
    else throw PreconditionError("unsupported command '" + c + "'");
  } catch (const BudgetExhausted& e) {
    s.lines = {std::string("budget exhausted: ") + e.what(), "no result; rerun with a larger budget"};
    s.result = nullptr;
    s.status = "budget_exhausted";
    s.exit_code = exit_budget;
  }

  const std::string digest = fnv1a_hex(spec.canonical());
  std::vector<std::string> params;
  for (const auto& [k, v] : spec.params) params.push_back(k + "=" + v);

  std::ostringstream text;
  text << "jetspace report\n";
  text << "command: " << spec.command << (params.empty() ? "" : " " + join(params, " ")) << "\n";
  text << "inputs: " << digest << "\n";
  text << "budget: max_pairs=" << opt.budget.max_pairs << " max_degree=" << opt.budget.max_degree << "\n";
  text << "status: " << s.status << "\n\n";
  for (const auto& line : s.lines) text << line << "\n";
  text << "\n--- machine ---\n";
  json machine = {{"schema", schema_version},
                  {"command", spec.command},
                  {"params", spec.params},
                  {"inputs_digest", digest},
                  {"budget", {{"max_pairs", opt.budget.max_pairs}, {"max_degree", opt.budget.max_degree}}},
                  {"status", s.status},
                  {"result", s.result}};
  text << machine.dump(2) << "\n";
  return Report{text.str(), s.exit_code};
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jet schemes, contact loci and Mather-type invariants over Q"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::optional<std::size_t> max_pairs;
  std::optional<std::uint64_t> max_degree;
  std::optional<int> jobs;
  bool timing = false;
  CLI::App* run = app.add_subcommand("run", "Run a problem file");
  run->add_option("file", file, "Problem file")->required();
  run->add_option("--out", out_path, "Also write the report to this file");
  run->add_option("--max-pairs", max_pairs, "S-pair budget per Groebner basis")->check(CLI::PositiveNumber);
  run->add_option("--max-degree", max_degree, "Degree budget per Groebner basis")->check(CLI::PositiveNumber);
  run->add_option("--jobs", jobs, "Threads for independent cells")->check(CLI::PositiveNumber);
  run->add_flag("--timing", timing, "Print elapsed time to stderr");

  std::string corpus_name;
  std::string write_dir;
  CLI::App* list = app.add_subcommand("corpus", "List the built-in corpus or print one entry");
  list->add_option("name", corpus_name, "Entry to print");
  list->add_option("--write", write_dir, "Write every entry as <dir>/<name>.jsp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_usage;
  }

  if (*list) {
    if (!write_dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(write_dir, ec);
      for (const auto& e : corpus()) {
        std::ofstream f(std::filesystem::path(write_dir) / (e.name + ".jsp"));
        f << e.spec;
        if (!f) {
          err << "error: cannot write " << e.name << ".jsp\n";
          return exit_usage;
        }
      }
      return exit_ok;
    }
    if (corpus_name.empty()) {
      for (const auto& e : corpus()) out << e.name << "  " << e.description << "\n";
      return exit_ok;
    }
    const CorpusEntry* e = find_corpus_entry(corpus_name);
    if (e == nullptr) {
      err << "error: no corpus entry '" << corpus_name << "'\n";
      return exit_usage;
    }
    out << e->spec;
    return exit_ok;
  }

  std::ifstream in(file);
  if (!in) {
    err << "error: cannot read " << file << "\n";
    return exit_usage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  const auto start = std::chrono::steady_clock::now();
  try {
    RunOptions opt = options_from_environment();
    if (max_pairs) opt.budget.max_pairs = *max_pairs;
    if (max_degree) opt.budget.max_degree = *max_degree;
    if (jobs) opt.jobs = *jobs;
    const ProblemSpec spec = parse_problem(buffer.str());
    const Report report = run_problem(spec, opt);
    out << report.text;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << report.text;
      if (!f) {
        err << "error: cannot write " << out_path << "\n";
        return exit_usage;
      }
    }
    if (timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      err << "elapsed: " << ms.count() << " ms\n";
    }
    return report.exit_code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.message() << "\n";
    return exit_parse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  } catch (const ConsistencyError& e) {
    err << "consistency check failed: " << e.what() << "\n";
    return exit_consistency;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return exit_budget;
  }
}

}  // namespace jetspace
