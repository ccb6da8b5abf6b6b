#include "galois/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "galois/catalog.hpp"
#include "galois/closure.hpp"
#include "galois/embedded_data.hpp"

namespace galois {

namespace {

// Elements of S_n by rank (rank order = key order) with multiplication and
// conjugation tables.
struct RankedSymmetric {
  int n;
  std::vector<PermKey> keys;
  std::vector<std::uint16_t> mul;  // mul[a * N + b] = rank(a * b)
  std::size_t size() const { return keys.size(); }

  explicit RankedSymmetric(int degree) : n(degree), keys(all_permutation_keys(degree)) {
    const std::size_t N = keys.size();
    mul.resize(N * N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) mul[a * N + b] = static_cast<std::uint16_t>(rank(compose_keys(keys[a], keys[b], n)));
  }
  std::size_t rank(PermKey key) const {
    return static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin());
  }
  std::uint16_t times(std::size_t a, std::size_t b) const { return mul[a * keys.size() + b]; }
};

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

// Group generated by an existing subgroup (as a bitset) and one more element.
Bits join(const RankedSymmetric& s, const Bits& h, const std::vector<std::uint16_t>& h_elems,
          const std::vector<std::uint16_t>& gens) {
  Bits out = h;
  std::vector<std::uint16_t> list = h_elems;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto g : gens) {
      const auto y = s.times(list[i], g);
      if (test(out, y)) continue;
      // The whole coset y*H belongs to the join.
      for (auto e : h_elems) {
        const auto z = s.times(y, e);
        if (!test(out, z)) {
          set(out, z);
          list.push_back(z);
        }
      }
    }
  return out;
}

std::vector<std::uint16_t> members(const Bits& b, std::size_t N) {
  std::vector<std::uint16_t> out;
  for (std::size_t i = 0; i < N; ++i)
    if (test(b, i)) out.push_back(static_cast<std::uint16_t>(i));
  return out;
}

std::vector<Bits> enumerate_bitsets(const RankedSymmetric& s, ExtensionOrder order) {
  const std::size_t N = s.size();
  const std::size_t words = (N + 63) / 64;
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  std::vector<Bits> found;
  std::vector<std::vector<std::uint16_t>> gens_of;

  // Cyclic subgroups, one generator each.
  std::vector<std::uint16_t> cyclic_gen;
  for (std::size_t g = 0; g < N; ++g) {
    Bits b(words, 0);
    std::size_t x = 0;  // rank 0 is the identity
    do {
      set(b, x);
      x = s.times(x, g);
    } while (x != 0);
    if (index.emplace(b, found.size()).second) {
      found.push_back(std::move(b));
      gens_of.push_back(g == 0 ? std::vector<std::uint16_t>{} : std::vector<std::uint16_t>{static_cast<std::uint16_t>(g)});
      cyclic_gen.push_back(static_cast<std::uint16_t>(g));
    }
  }
  if (order == ExtensionOrder::Reverse) std::reverse(cyclic_gen.begin(), cyclic_gen.end());

  std::vector<std::size_t> frontier(found.size());
  for (std::size_t i = 0; i < frontier.size(); ++i) frontier[i] = i;
  while (!frontier.empty()) {
    if (order == ExtensionOrder::Reverse) std::reverse(frontier.begin(), frontier.end());
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const Bits h = found[idx];
      const auto h_elems = members(h, N);
      const auto h_gens = gens_of[idx];
      for (auto g : cyclic_gen) {
        if (test(h, g)) continue;
        auto gens = h_gens;
        gens.push_back(g);
        Bits k = join(s, h, h_elems, gens);
        if (index.emplace(k, found.size()).second) {
          found.push_back(std::move(k));
          gens_of.push_back(std::move(gens));
          next.push_back(found.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  return found;
}

std::vector<PermKey> keys_of(const RankedSymmetric& s, const Bits& b) {
  std::vector<PermKey> out;
  for (auto i : members(b, s.size())) out.push_back(s.keys[i]);
  return out;
}

PermGroup as_group(int n, std::vector<PermKey> keys) {
  auto gens = greedy_generators(n, {}, keys);
  std::vector<int> ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i;
  return PermGroup::from_elements(n, std::move(ground), std::move(gens), std::move(keys));
}

void check_degree(int n) {
  if (n < 1 || n > kMaxEnumerationDegree)
    throw InvalidArgument("subgroup enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationDegree));
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t\r\n") - a + 1);
}

// Names tried, in order, when labeling groups: the expected groups first,
// then their closures, then a few extra labels.
const std::vector<std::pair<std::string, PermGroup>>& vocabulary() {
  static const std::vector<std::pair<std::string, PermGroup>> vocab = [] {
    std::vector<std::pair<std::string, PermGroup>> v;
    auto add = [&](const std::string& name) {
      for (const auto& [existing, g] : v)
        if (existing == name) return;
      v.emplace_back(name, get_group(name));
    };
    const auto rows = expected_table1();
    for (const auto& r : rows) add(r.group);
    for (const auto& r : rows) add(r.closure);
    // Labels for rows outside the expected table.
    for (const char* extra : {"A_3×A_3", "A_3≀S_2"}) add(extra);
    return v;
  }();
  return vocab;
}

}  // namespace

std::vector<std::vector<PermKey>> subgroup_element_sets(int n, ExtensionOrder order) {
  check_degree(n);
  const RankedSymmetric s(n);
  std::vector<std::vector<PermKey>> out;
  for (const auto& b : enumerate_bitsets(s, order)) out.push_back(keys_of(s, b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PermGroup> all_subgroup_list(int n, ExtensionOrder order) {
  std::vector<PermGroup> out;
  for (auto& keys : subgroup_element_sets(n, order)) out.push_back(as_group(n, std::move(keys)));
  return out;
}

SubgroupCatalog all_subgroups(int n, ExtensionOrder order) {
  check_degree(n);
  const RankedSymmetric s(n);
  const std::size_t N = s.size();
  const auto subgroups = enumerate_bitsets(s, order);
  std::unordered_map<Bits, std::size_t, BitsHash> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i) index.emplace(subgroups[i], i);

  std::vector<std::uint16_t> inverse(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (s.times(a, b) == 0) inverse[a] = static_cast<std::uint16_t>(b);

  SubgroupCatalog cat;
  cat.n = n;
  cat.total_subgroups = subgroups.size();
  std::vector<bool> classified(subgroups.size(), false);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (classified[i]) continue;
    const auto elems = members(subgroups[i], N);
    std::vector<std::size_t> cls;
    for (std::size_t t = 0; t < N; ++t) {
      Bits c(subgroups[i].size(), 0);
      for (auto x : elems) set(c, s.times(s.times(t, x), inverse[t]));
      const std::size_t j = index.at(c);
      if (!classified[j]) {
        classified[j] = true;
        cls.push_back(j);
      }
    }
    std::vector<PermKey> best;
    for (std::size_t j : cls) {
      auto keys = keys_of(s, subgroups[j]);
      if (best.empty() || keys < best) best = std::move(keys);
    }
    SubgroupClass sc;
    sc.order = elems.size();
    sc.class_size = cls.size();
    sc.representative = as_group(n, std::move(best));
    cat.classes.push_back(std::move(sc));
  }
  std::sort(cat.classes.begin(), cat.classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    const auto ka = a.representative.element_keys(), kb = b.representative.element_keys();
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  return cat;
}

std::vector<ExpectedTable1Row> expected_table1() {
  std::vector<ExpectedTable1Row> rows;
  std::istringstream in(embedded::table1_text());
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> cols;
    std::istringstream ls(line);
    std::string col;
    while (std::getline(ls, col, '|')) cols.push_back(trim(col));
    if (cols.size() != 4) throw ValidationError("expected table line has " + std::to_string(cols.size()) + " columns: " + line);
    rows.push_back({std::stoi(cols[0]), std::stoi(cols[1]), cols[2], cols[3]});
  }
  return rows;
}

std::string name_by_conjugacy(const PermGroup& g) {
  const PermGroup local = g.moved_points().size() == static_cast<std::size_t>(g.degree()) ? g : relabel_to_ground(
      restrict_to(g, g.moved_points()));
  for (const auto& [name, h] : vocabulary()) {
    if (h.degree() != local.degree() || h.order() != local.order()) continue;
    if (are_conjugate(local, h)) return name;
  }
  return {};
}

std::vector<Table1Row> table1_report(const Budgets& budgets) {
  const auto expected = expected_table1();
  std::vector<std::pair<std::size_t, Table1Row>> keyed;
  for (int n = 2; n <= kMaxEnumerationDegree; ++n) {
    for (const auto& cls : all_subgroups(n).classes) {
      const PermGroup& g = cls.representative;
      // Groups with fixed points already appear at a smaller degree.
      if (g.moved_points().size() != static_cast<std::size_t>(n)) continue;
      const ClosureChain chain = closure_chain(g, budgets);
      if (chain.largest_nonclosed_k == 0) continue;
      Table1Row row;
      row.n = n;
      row.k = chain.largest_nonclosed_k;
      row.group_rep = g;
      row.closure_group = chain.entries[row.k - 2].closure;
      row.group = name_by_conjugacy(row.group_rep);
      row.closure = name_by_conjugacy(row.closure_group);
      std::size_t pos = expected.size();
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (expected[i].group == row.group && expected[i].n == row.n) {
          pos = i;
          break;
        }
      keyed.emplace_back(pos, std::move(row));
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Table1Row> rows;
  for (auto& [pos, row] : keyed) rows.push_back(std::move(row));
  return rows;
}

Table1Comparison compare_table1(const std::vector<Table1Row>& rows) {
  Table1Comparison cmp;
  const auto expected = expected_table1();
  std::vector<bool> used(expected.size(), false);
  for (const auto& row : rows) {
    bool hit = false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const auto& e = expected[i];
      if (used[i] || e.group != row.group || e.n != row.n) continue;
      used[i] = true;
      hit = true;
      if (e.k != row.k || e.closure != row.closure) {
        cmp.problems.push_back("row " + e.group + ": got k=" + std::to_string(row.k) + " closure " +
                               (row.closure.empty() ? "<unnamed>" : row.closure) + ", expected k=" +
                               std::to_string(e.k) + " closure " + e.closure);
      } else {
        ++cmp.matched;
      }
      break;
    }
    if (!hit)
      cmp.problems.push_back("unexpected row: n=" + std::to_string(row.n) + " k=" + std::to_string(row.k) + " " +
                             (row.group.empty() ? "<unnamed, order " + std::to_string(row.group_rep.order()) + ">"
                                                : row.group) +
                             " -> " + (row.closure.empty() ? "<unnamed>" : row.closure));
  }
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (!used[i]) cmp.problems.push_back("missing row: " + expected[i].group + " -> " + expected[i].closure);
  return cmp;
}

std::string format_table1(const std::vector<Table1Row>& rows) {
  auto label = [](const std::string& name, const PermGroup& g) {
    return name.empty() ? "<order " + std::to_string(g.order()) + ">" : name;
  };
  // Width in code points, so the unicode operators line up.
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
      if ((c & 0xC0) != 0x80) ++w;
    return w;
  };
  std::size_t wg = 1;
  for (const auto& r : rows) wg = std::max(wg, width(label(r.group, r.group_rep)));
  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t w) { return s + std::string(w > width(s) ? w - width(s) : 0, ' '); };
  out << "n  k  " << pad("G", wg) << "  closure\n";
  for (const auto& r : rows)
    out << r.n << "  " << r.k << "  " << pad(label(r.group, r.group_rep), wg) << "  "
        << label(r.closure, r.closure_group) << '\n';
  return out.str();
}

std::map<std::size_t, std::uint64_t> chain_length_census(int n, const Budgets& budgets) {
  std::map<std::size_t, std::uint64_t> hist;
  for (const auto& cls : all_subgroups(n).classes) {
    const auto chain = closure_chain(cls.representative, budgets);
    ++hist[std::max<std::size_t>(1, chain.distinct_groups())];
  }
  return hist;
}

}  // namespace galois
