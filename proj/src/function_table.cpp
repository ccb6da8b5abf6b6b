#include "galois/function_table.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "galois/closure.hpp"

namespace galois {

namespace {

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

bool preserves(const FunctionTable& f, const TupleSpace& space, const Permutation& s) {
  std::vector<int> digits(f.n, 0);
  std::vector<std::uint64_t> moved_weight(f.n);
  for (int i = 0; i < f.n; ++i) moved_weight[s(i)] = space.weight(i);
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    std::uint64_t y = 0;
    for (int j = 0; j < f.n; ++j) y += static_cast<std::uint64_t>(digits[j]) * moved_weight[j];
    if (f.values[x] != f.values[y]) return false;
    for (int j = f.n - 1; j >= 0; --j) {
      if (++digits[j] < f.k) break;
      digits[j] = 0;
    }
  }
  return true;
}

}  // namespace

FunctionTable parse_function_table(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  FunctionTable f;
  bool have_header = false;
  int default_value = 0;
  std::vector<char> assigned;
  std::unique_ptr<TupleSpace> space;
  auto fail = [&](const std::string& what) {
    throw ParseError(ParseError::Kind::InvalidToken, lineno, "function table line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string extra;
      if (!(ls >> f.n >> f.k >> f.m) || (ls >> extra))
        throw ParseError(ParseError::Kind::BadHeader, lineno, "expected header 'n k m'");
      if (f.n < 1 || f.n > kMaxDegree || f.k < 1 || f.m < 1)
        throw ParseError(ParseError::Kind::BadHeader, lineno, "header values out of range");
      space = std::make_unique<TupleSpace>(f.n, f.k);
      f.values.assign(space->size(), 0);
      assigned.assign(space->size(), 0);
      have_header = true;
      continue;
    }
    std::string first;
    ls >> first;
    if (first == "default:") {
      if (!(ls >> default_value) || default_value < 1 || default_value > f.m) fail("bad default value");
      continue;
    }
    std::istringstream ts(line);
    std::vector<int> tuple;
    std::string tok;
    int value = 0;
    bool arrow = false;
    while (ts >> tok) {
      if (tok == "->") {
        arrow = true;
        if (!(ts >> value)) fail("missing value after '->'");
        if (ts >> tok) fail("trailing text after value");
        break;
      }
      try {
        std::size_t used = 0;
        tuple.push_back(std::stoi(tok, &used));
        if (used != tok.size()) fail("bad token '" + tok + "'");
      } catch (const std::logic_error&) {
        fail("bad token '" + tok + "'");
      }
    }
    if (!arrow) fail("missing '->'");
    if (static_cast<int>(tuple.size()) != f.n) fail("tuple has wrong arity");
    for (int v : tuple)
      if (v < 1 || v > f.k) fail("tuple value outside 1..k");
    if (value < 1 || value > f.m) fail("function value outside 1..m");
    const auto idx = space->encode(tuple);
    if (assigned[idx]) fail("tuple assigned twice");
    assigned[idx] = 1;
    f.values[idx] = value;
  }
  if (!have_header) throw ParseError(ParseError::Kind::BadHeader, lineno, "missing header 'n k m'");
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (assigned[i]) continue;
    if (default_value == 0)
      throw ParseError(ParseError::Kind::InvalidToken, lineno, "tuple index " + std::to_string(i) + " has no value and no default is declared");
    f.values[i] = default_value;
  }
  return f;
}

FunctionTable read_function_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open function table '" + path + "'");
  return parse_function_table(in);
}

std::string format_function_table(const FunctionTable& f) {
  std::ostringstream out;
  out << f.n << ' ' << f.k << ' ' << f.m << '\n';
  const TupleSpace space = f.space();
  for (std::uint64_t x = 0; x < space.size(); ++x) {
    for (int v : space.decode(x)) out << v << ' ';
    out << "-> " << f.values[x] << '\n';
  }
  return out.str();
}

PermGroup invariance_group(const FunctionTable& f, const Budgets& budgets) {
  if (factorial(f.n) > budgets.candidate_budget)
    throw BudgetExceeded("candidate budget", factorial(f.n), budgets.candidate_budget);
  const TupleSpace space = f.space();
  std::vector<PermKey> keys;
  for (PermKey key : all_permutation_keys(f.n))
    if (preserves(f, space, Permutation::from_key(key, f.n))) keys.push_back(key);
  return group_from_elements(PermGroup::trivial(f.n), std::move(keys));
}

FunctionTable orbit_coloring(const PermGroup& g, int k, const Budgets& budgets) {
  const OrbitPartition orbits = orbit_partition(g, k, budgets.tuple_budget);
  const auto reps = orbits.representatives();
  FunctionTable f;
  f.n = g.degree();
  f.k = k;
  f.m = static_cast<int>(reps.size());
  f.values.resize(orbits.space().size());
  for (std::uint64_t x = 0; x < f.values.size(); ++x) {
    const auto c = orbits.canonical(x);
    f.values[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), c) - reps.begin()) + 1;
  }
  return f;
}

std::variant<Representation, NotRepresentable> min_codomain(const PermGroup& g, int k, const Budgets& budgets,
                                                            MinCodomainOptions options) {
  const int n = g.degree();
  auto report = closure_pruned(g, k, budgets);
  if (!report.closed()) return NotRepresentable{std::move(report.closure)};

  const OrbitPartition orbits = orbit_partition(g, k, budgets.tuple_budget);
  const auto reps = orbits.representatives();
  const int r = static_cast<int>(reps.size());
  if (r > options.max_orbits)
    throw BudgetExceeded("orbit count for coloring search", static_cast<std::uint64_t>(r),
                         static_cast<std::uint64_t>(options.max_orbits));
  std::vector<int> orbit_of(orbits.space().size());
  for (std::uint64_t x = 0; x < orbit_of.size(); ++x)
    orbit_of[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), orbits.canonical(x)) - reps.begin());

  // One representative per left coset sG != G. A coloring has invariance group
  // exactly G iff every such s links two differently colored orbits.
  if (factorial(n) > budgets.candidate_budget)
    throw BudgetExceeded("candidate budget", factorial(n), budgets.candidate_budget);
  std::vector<std::vector<std::pair<int, int>>> links;
  {
    std::unordered_set<PermKey> covered(g.element_keys().begin(), g.element_keys().end());
    const TupleSpace& space = orbits.space();
    for (PermKey key : all_permutation_keys(n)) {
      if (covered.count(key)) continue;
      for (PermKey h : g.element_keys()) covered.insert(compose_keys(key, h, n));
      const auto s = Permutation::from_key(key, n);
      std::set<std::pair<int, int>> pairs;
      for (std::uint64_t x = 0; x < space.size(); ++x) {
        const int a = orbit_of[x];
        const int b = orbit_of[act_index(space, TupleAction::Coordinates, x, s)];
        if (a != b) pairs.emplace(std::min(a, b), std::max(a, b));
      }
      links.emplace_back(pairs.begin(), pairs.end());
    }
  }

  Representation result;
  std::uint64_t total = 0;
  for (int m = 1; m <= r; ++m) {
    std::uint64_t examined = 0;
    std::vector<int> color(r, 0);
    bool found = false;
    // Restricted growth strings with exactly m blocks.
    std::function<void(int, int)> rec = [&](int i, int used) {
      if (found) return;
      if (r - i < m - used) return;
      if (i == r) {
        if (used != m) return;
        ++examined;
        if (++total > budgets.coloring_budget)
          throw BudgetExceeded("coloring budget", total, budgets.coloring_budget);
        for (const auto& pairs : links) {
          if (std::none_of(pairs.begin(), pairs.end(),
                           [&](const auto& p) { return color[p.first] != color[p.second]; }))
            return;
        }
        found = true;
        result.orbit_colors = color;
        return;
      }
      for (int c = 0; c <= std::min(used, m - 1); ++c) {
        color[i] = c;
        rec(i + 1, std::max(used, c + 1));
        if (found) return;
      }
    };
    rec(0, 0);
    result.colorings_examined.push_back(examined);
    if (found) {
      result.m = m;
      FunctionTable f;
      f.n = n;
      f.k = k;
      f.m = m;
      f.values.resize(orbit_of.size());
      for (std::size_t x = 0; x < orbit_of.size(); ++x) f.values[x] = result.orbit_colors[orbit_of[x]] + 1;
      result.witness = std::move(f);
      return result;
    }
  }
  throw Error("min_codomain: no coloring found for a closed group (internal inconsistency)");
}

}  // namespace galois
