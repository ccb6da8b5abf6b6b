// galois: command-line front end for the closure library.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "galois/catalog.hpp"
#include "galois/classify.hpp"
#include "galois/closure.hpp"
#include "galois/enumerate.hpp"
#include "galois/function_table.hpp"

namespace {

using galois::Budgets;
using galois::PermGroup;
using Json = nlohmann::ordered_json;

enum ExitCode {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kParse = 3,
  kBudget = 4,
  kIo = 5,
  kUnknownName = 6,
  kInternal = 7,
};

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success (and every checked expectation holds)\n"
    "  1  a verification expectation failed\n"
    "  2  usage error\n"
    "  3  malformed input file or permutation\n"
    "  4  a work budget would be exceeded (raise the matching --*-budget flag)\n"
    "  5  file cannot be read or written\n"
    "  6  unknown group name\n"
    "  7  invalid argument or internal consistency failure\n"
    "\n"
    "Default budgets can be set with GALOIS_TUPLE_BUDGET, GALOIS_CANDIDATE_BUDGET,\n"
    "GALOIS_MATERIALIZATION_BOUND, GALOIS_COLORING_BUDGET and GALOIS_WORKERS.\n";

class IoError : public galois::Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string format = "text";
  bool timing = false;
  Budgets budgets;

  bool json() const { return format == "json"; }
};

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used == std::string(v).size() && x > 0) return x;
  } catch (const std::exception&) {
  }
  throw galois::InvalidArgument(std::string("environment variable ") + name + " must be a positive integer");
}

PermGroup load_group(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw IoError("cannot read group file '" + arg + "'");
    return galois::parse_group_file(in);
  }
  if (arg.find('/') != std::string::npos || arg.ends_with(".txt") || arg.ends_with(".grp"))
    throw IoError("group file '" + arg + "' does not exist");
  return galois::get_group(arg);
}

Json generators_json(const PermGroup& g) {
  Json arr = Json::array();
  for (const auto& p : g.generators()) arr.push_back(galois::format_perm(p));
  return arr;
}

Json group_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  j["order"] = g.order();
  j["generators"] = generators_json(g);
  return j;
}

std::string group_text(const PermGroup& g) {
  std::ostringstream out;
  out << "order " << g.order() << ", generators";
  if (g.generators().empty()) out << " (none)";
  for (const auto& p : g.generators()) out << ' ' << galois::format_perm(p);
  return out.str();
}

Json points_json(const std::vector<int>& pts) {
  Json arr = Json::array();
  for (int x : pts) arr.push_back(x + 1);
  return arr;
}

std::string points_text(const std::vector<int>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i] + 1);
  return s + "}";
}

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.json())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

// ---- closure ---------------------------------------------------------------

int run_closure(const RunConfig& cfg, const std::string& group_arg, int k, const std::string& algorithm) {
  const PermGroup g = load_group(group_arg);
  const auto report = galois::compute_closure(g, k, galois::parse_algorithm(algorithm), cfg.budgets);
  Json j;
  j["group"] = group_json(g);
  j["k"] = k;
  j["algorithm"] = galois::to_string(report.algorithm);
  j["closure"] = group_json(report.closure);
  j["closed"] = report.closed();
  j["candidates_examined"] = report.candidates_examined;
  if (report.pruning_tuple) j["pruning_tuple"] = *report.pruning_tuple;
  if (cfg.timing) j["wall_time"] = report.wall_time.count();

  std::ostringstream out;
  out << "group: " << group_text(g) << '\n';
  out << "k: " << k << '\n';
  out << "algorithm: " << galois::to_string(report.algorithm) << '\n';
  out << "closure: " << group_text(report.closure) << '\n';
  out << "closed: " << (report.closed() ? "true" : "false") << '\n';
  out << "candidates examined: " << report.candidates_examined << '\n';
  if (report.pruning_tuple) {
    out << "pruning tuple:";
    for (int v : *report.pruning_tuple) out << ' ' << v;
    out << '\n';
  }
  if (cfg.timing) out << "wall time: " << report.wall_time.count() << " s\n";
  emit(cfg, j, out.str());
  return kOk;
}

int run_chain(const RunConfig& cfg, const std::string& group_arg) {
  const PermGroup g = load_group(group_arg);
  const auto chain = galois::closure_chain(g, cfg.budgets);
  Json j;
  j["group"] = group_json(g);
  j["chain"] = Json::array();
  std::ostringstream out;
  out << "group: " << group_text(g) << '\n';
  for (const auto& e : chain.entries) {
    Json row = group_json(e.closure);
    row["k"] = e.k;
    row["closed"] = e.closure.order() == g.order();
    j["chain"].push_back(row);
    out << "k=" << e.k << ": " << group_text(e.closure) << (e.closure.order() == g.order() ? " (closed)" : "") << '\n';
  }
  j["largest_nonclosed_k"] = chain.largest_nonclosed_k;
  j["distinct_groups"] = chain.distinct_groups();
  out << "largest non-closed k: " << chain.largest_nonclosed_k << '\n';
  out << "distinct groups in chain: " << chain.distinct_groups() << '\n';
  emit(cfg, j, out.str());
  return kOk;
}

int run_table1(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = galois::table1_report(cfg.budgets);
  const auto cmp = galois::compare_table1(rows);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
  Json j;
  j["rows"] = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["n"] = r.n;
    row["k"] = r.k;
    row["group"] = r.group;
    row["closure"] = r.closure;
    row["group_order"] = r.group_rep.order();
    row["closure_order"] = r.closure_group.order();
    row["group_generators"] = generators_json(r.group_rep);
    j["rows"].push_back(row);
  }
  j["expected_rows"] = galois::expected_table1().size();
  j["matched"] = cmp.matched;
  j["problems"] = cmp.problems;
  j["agree"] = cmp.ok();
  if (cfg.timing) j["wall_time"] = dt.count();

  std::ostringstream out;
  out << galois::format_table1(rows);
  out << '\n' << cmp.matched << " of " << galois::expected_table1().size() << " expected rows matched\n";
  for (const auto& p : cmp.problems) out << "MISMATCH " << p << '\n';
  if (cfg.timing) out << "wall time: " << dt.count() << " s\n";
  emit(cfg, j, out.str());
  return cmp.ok() ? kOk : kVerificationFailed;
}

// ---- verify ----------------------------------------------------------------

Json form_json(const galois::NonClosedForm& f) {
  Json j;
  j["kind"] = galois::to_string(f.kind);
  j["d"] = f.d;
  if (f.kind == galois::FormKind::OutOfTheoremRange) return j;
  j["B"] = points_json(f.B);
  j["D"] = points_json(f.D);
  if (f.L) j["L_order"] = f.L->order();
  if (f.L0) j["L0"] = group_json(*f.L0);
  if (f.predicted_closure) j["predicted_closure_order"] = f.predicted_closure->order();
  if (!f.diagnostics.empty()) j["diagnostics"] = f.diagnostics;
  return j;
}

int verify_main_cmd(const RunConfig& cfg, int n, int k) {
  std::vector<galois::PanelGroup> panel;
  if (n == 7) {
    panel = galois::main_panel_degree7();
  } else if (n >= 1 && n <= galois::kMaxEnumerationDegree) {
    for (const auto& cls : galois::all_subgroups(n).classes) {
      const std::string name = galois::name_by_conjugacy(cls.representative);
      panel.push_back({name.empty() ? "order " + std::to_string(cls.order) : name, cls.representative});
    }
  } else {
    throw galois::InvalidArgument("verify main supports n <= 6 (all subgroup classes) or n = 7 (spot-check panel)");
  }
  if (k < 1) throw galois::InvalidArgument("verify main needs --k");
  bool ok = true;
  std::size_t applicable = 0;
  Json j;
  j["theorem"] = "main";
  j["n"] = n;
  j["k"] = k;
  j["in_range"] = galois::in_theorem_range(n, k);
  j["groups"] = Json::array();
  std::ostringstream out;
  out << "structure theorem check, n=" << n << " k=" << k << " (d=" << n - k << ")\n";
  for (const auto& entry : panel) {
    const auto v = galois::verify_main(entry.group, k, cfg.budgets);
    const bool closed = v.computed_closure == entry.group;
    Json row;
    row["name"] = entry.name;
    row["order"] = entry.group.order();
    row["prediction"] = form_json(v.prediction);
    row["computed_closed"] = closed;
    row["computed_closure_order"] = v.computed_closure.order();
    row["applicable"] = v.applicable;
    row["agree"] = v.agree;
    j["groups"].push_back(row);
    if (v.applicable) {
      ++applicable;
      ok = ok && v.agree;
    }
    out << (v.applicable ? (v.agree ? "agree     " : "DISAGREE  ") : "n/a       ") << entry.name << ": predicted "
        << galois::to_string(v.prediction.kind);
    if (v.prediction.non_closed()) out << " B=" << points_text(v.prediction.B) << " D=" << points_text(v.prediction.D);
    out << "; computed " << (closed ? "closed" : "not closed, closure order " + std::to_string(v.computed_closure.order()))
        << '\n';
  }
  j["applicable"] = applicable;
  j["agree"] = ok;
  out << applicable << " applicable, " << (ok ? "all agree" : "DISAGREEMENT") << '\n';
  emit(cfg, j, out.str());
  return ok ? kOk : kVerificationFailed;
}

int verify_seress(const RunConfig& cfg, int n) {
  const auto r = galois::seress_report(n, cfg.budgets);
  Json j;
  j["theorem"] = "seress";
  j["n"] = n;
  j["computed_classes"] = r.computed_classes;
  j["expected_classes"] = r.expected_classes;
  j["agree"] = r.agree;
  std::ostringstream out;
  out << "orbit-equivalence classes at k=2 of primitive catalog groups, n=" << n << '\n';
  for (const auto& cls : r.computed_classes) {
    out << "  {";
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? ", " : "") << cls[i];
    out << "}\n";
  }
  out << (r.agree ? "matches the expected classes\n" : "DOES NOT match the expected classes\n");
  emit(cfg, j, out.str());
  return r.agree ? kOk : kVerificationFailed;
}

int verify_primitive3(const RunConfig& cfg, int n) {
  const auto rows = galois::primitive_3closed_report(n, cfg.budgets);
  bool ok = true;
  Json j;
  j["theorem"] = "primitive3";
  j["n"] = n;
  j["groups"] = Json::array();
  std::ostringstream out;
  out << "closedness over 3 of primitive catalog groups, n=" << n << '\n';
  for (const auto& r : rows) {
    const bool good = r.closed == r.expected_closed;
    ok = ok && good;
    j["groups"].push_back({{"name", r.name}, {"order", r.order}, {"closed", r.closed}, {"expected_closed", r.expected_closed}});
    out << (good ? "ok        " : "MISMATCH  ") << r.name << " (order " << r.order << "): "
        << (r.closed ? "closed" : "not closed") << '\n';
  }
  j["agree"] = ok;
  emit(cfg, j, out.str());
  return ok ? kOk : kVerificationFailed;
}

int verify_wielandt(const RunConfig& cfg, int n, int k) {
  if (n < 1 || n > galois::kMaxEnumerationDegree) throw galois::InvalidArgument("verify wielandt supports n <= 6");
  std::vector<int> ks;
  if (k > 0)
    ks.push_back(k);
  else
    ks = {1, 2, 3};
  const auto subgroups = galois::all_subgroup_list(n);
  std::uint64_t checked = 0, failed = 0;
  for (const auto& g : subgroups)
    for (int kk : ks) {
      ++checked;
      if (!galois::check_wielandt_containment(g, kk, cfg.budgets)) ++failed;
    }
  Json j;
  j["theorem"] = "wielandt";
  j["n"] = n;
  j["k"] = ks;
  j["subgroups"] = subgroups.size();
  j["checks"] = checked;
  j["failures"] = failed;
  j["agree"] = failed == 0;
  std::ostringstream out;
  out << "closure over k+1 inside the Wielandt k-closure: " << subgroups.size() << " subgroups of S_" << n << ", "
      << checked << " checks, " << failed << " failures\n";
  emit(cfg, j, out.str());
  return failed == 0 ? kOk : kVerificationFailed;
}

// ---- misc commands ---------------------------------------------------------

int run_orbit_equiv(const RunConfig& cfg, const std::string& a, const std::string& b, int k) {
  const PermGroup g = load_group(a), h = load_group(b);
  const bool eq = galois::orbit_equivalent(g, h, k, cfg.budgets);
  Json j{{"k", k}, {"orbit_equivalent", eq}};
  emit(cfg, j, std::string("orbit equivalent at k=") + std::to_string(k) + ": " + (eq ? "true" : "false") + "\n");
  return kOk;
}

int run_invariance(const RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read function table '" + path + "'");
  const auto f = galois::parse_function_table(in);
  const PermGroup g = galois::invariance_group(f, cfg.budgets);
  Json j{{"n", f.n}, {"k", f.k}, {"m", f.m}, {"invariance_group", group_json(g)}};
  emit(cfg, j, "invariance group: " + group_text(g) + "\n");
  return kOk;
}

int run_min_codomain(const RunConfig& cfg, const std::string& group_arg, int k) {
  const PermGroup g = load_group(group_arg);
  const auto result = galois::min_codomain(g, k, cfg.budgets);
  Json j;
  j["group"] = group_json(g);
  j["k"] = k;
  std::ostringstream out;
  if (const auto* rep = std::get_if<galois::Representation>(&result)) {
    j["representable"] = true;
    j["m"] = rep->m;
    j["colorings_examined"] = rep->colorings_examined;
    j["orbit_colors"] = rep->orbit_colors;
    out << "least codomain size: " << rep->m << '\n';
    for (std::size_t i = 0; i < rep->colorings_examined.size(); ++i)
      out << "  m=" << i + 1 << ": " << rep->colorings_examined[i] << " colorings examined\n";
  } else {
    const auto& nr = std::get<galois::NotRepresentable>(result);
    j["representable"] = false;
    j["closure"] = group_json(nr.closure);
    out << "not representable: closure over " << k << " is larger (" << group_text(nr.closure) << ")\n";
  }
  emit(cfg, j, out.str());
  return kOk;
}

int run_enumerate(const RunConfig& cfg, int n) {
  const auto cat = galois::all_subgroups(n);
  Json j;
  j["n"] = n;
  j["total_subgroups"] = cat.total_subgroups;
  j["classes"] = Json::array();
  std::ostringstream out;
  out << "S_" << n << ": " << cat.total_subgroups << " subgroups in " << cat.classes.size() << " conjugacy classes\n";
  for (const auto& c : cat.classes) {
    Json row = group_json(c.representative);
    row["class_size"] = c.class_size;
    j["classes"].push_back(row);
    out << "  order " << c.order << ", class size " << c.class_size << ": "
        << group_text(c.representative).substr(group_text(c.representative).find("generators")) << '\n';
  }
  emit(cfg, j, out.str());
  return kOk;
}

int run_catalog(const RunConfig& cfg, const std::string& action, const std::string& name) {
  if (action == "dump") {
    std::cout << galois::format_catalog(galois::catalog_entries());
    return kOk;
  }
  if (action == "validate") {
    const auto count = galois::validate_catalog();
    const bool shipped = galois::shipped_catalog_text() == galois::format_catalog(galois::catalog_entries());
    Json j{{"entries", count}, {"shipped_file_matches", shipped}};
    emit(cfg, j,
         std::to_string(count) + " catalog entries validated; shipped catalog file " +
             (shipped ? "matches" : "DOES NOT match") + " the constructions\n");
    return shipped ? kOk : kVerificationFailed;
  }
  if (action == "show") {
    if (name.empty()) throw galois::InvalidArgument("catalog show needs a group name");
    const PermGroup g = galois::get_group(name);
    if (cfg.json())
      std::cout << group_json(g).dump(2) << '\n';
    else
      std::cout << galois::format_group_file(g, galois::canonical_name(name));
    return kOk;
  }
  throw galois::InvalidArgument("unknown catalog action '" + action + "' (dump, validate, show)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois closures of permutation groups over k-element domains"};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  try {
    cfg.budgets.tuple_budget = env_or("GALOIS_TUPLE_BUDGET", cfg.budgets.tuple_budget);
    cfg.budgets.candidate_budget = env_or("GALOIS_CANDIDATE_BUDGET", cfg.budgets.candidate_budget);
    cfg.budgets.materialization_bound = env_or("GALOIS_MATERIALIZATION_BOUND", cfg.budgets.materialization_bound);
    cfg.budgets.coloring_budget = env_or("GALOIS_COLORING_BUDGET", cfg.budgets.coloring_budget);
    cfg.budgets.workers = static_cast<unsigned>(env_or("GALOIS_WORKERS", cfg.budgets.workers));
  } catch (const galois::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", cfg.timing, "Include wall-clock times in the output");
  app.add_option("--workers", cfg.budgets.workers, "Worker threads for candidate filtering")->check(CLI::PositiveNumber);
  app.add_option("--tuple-budget", cfg.budgets.tuple_budget, "Largest tuple space materialized")->check(CLI::PositiveNumber);
  app.add_option("--candidate-budget", cfg.budgets.candidate_budget, "Most candidate permutations per closure")
      ->check(CLI::PositiveNumber);
  app.add_option("--materialization-bound", cfg.budgets.materialization_bound, "Largest group materialized")
      ->check(CLI::PositiveNumber);
  app.add_option("--coloring-budget", cfg.budgets.coloring_budget, "Most colorings tried by min-codomain")
      ->check(CLI::PositiveNumber);

  std::string group_a, group_b, path, algorithm = "pruned", theorem, action, name;
  int k = 0, n = 0;

  auto* closure_cmd = app.add_subcommand("closure", "Galois closure of a group over k");
  closure_cmd->add_option("group", group_a, "Group file or catalog name")->required();
  closure_cmd->add_option("--k", k, "Domain size")->required()->check(CLI::PositiveNumber);
  closure_cmd->add_option("--algorithm", algorithm, "naive, pruned or kearnes")
      ->check(CLI::IsMember({"naive", "pruned", "kearnes"}));

  auto* chain_cmd = app.add_subcommand("chain", "Closures over k = 2..n");
  chain_cmd->add_option("group", group_a, "Group file or catalog name")->required();

  auto* table1_cmd = app.add_subcommand("table1", "Nontrivial closures of groups of degree at most 6");

  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem against computation");
  verify_cmd->add_option("--theorem", theorem, "main, seress, primitive3 or wielandt")
      ->required()
      ->check(CLI::IsMember({"main", "seress", "primitive3", "wielandt"}));
  verify_cmd->add_option("--n", n, "Degree")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--k", k, "Domain size (main: required; wielandt: default 1,2,3)");

  auto* oe_cmd = app.add_subcommand("orbit-equiv", "Compare orbit partitions of two groups on k^n");
  oe_cmd->add_option("group1", group_a)->required();
  oe_cmd->add_option("group2", group_b)->required();
  oe_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* inv_cmd = app.add_subcommand("invariance", "Invariance group of a function table");
  inv_cmd->add_option("function-file", path)->required();

  auto* mc_cmd = app.add_subcommand("min-codomain", "Least m such that G is the invariance group of some f: k^n -> m");
  mc_cmd->add_option("group", group_a)->required();
  mc_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* enum_cmd = app.add_subcommand("enumerate", "Subgroups of S_n up to conjugacy (n <= 6)");
  enum_cmd->add_option("--n", n)->required()->check(CLI::Range(1, galois::kMaxEnumerationDegree));

  auto* cat_cmd = app.add_subcommand("catalog", "Named groups: dump, validate, show NAME");
  cat_cmd->add_option("action", action)->required();
  cat_cmd->add_option("name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*closure_cmd) return run_closure(cfg, group_a, k, algorithm);
    if (*chain_cmd) return run_chain(cfg, group_a);
    if (*table1_cmd) return run_table1(cfg);
    if (*verify_cmd) {
      if (theorem == "main") return verify_main_cmd(cfg, n, k);
      if (theorem == "seress") return verify_seress(cfg, n);
      if (theorem == "primitive3") return verify_primitive3(cfg, n);
      return verify_wielandt(cfg, n, k);
    }
    if (*oe_cmd) return run_orbit_equiv(cfg, group_a, group_b, k);
    if (*inv_cmd) return run_invariance(cfg, path);
    if (*mc_cmd) return run_min_codomain(cfg, group_a, k);
    if (*enum_cmd) return run_enumerate(cfg, n);
    if (*cat_cmd) return run_catalog(cfg, action, name);
  } catch (const galois::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const galois::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const galois::UnknownName& e) {
    std::cerr << "unknown name: " << e.what() << '\n';
    return kUnknownName;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
