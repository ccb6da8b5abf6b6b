#include "galois/closure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace galois {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<int> all_points(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Evaluates pred(i) for i in [0, count) on `workers` threads with a fixed
// strided split; results are per index, so the outcome ignores scheduling.
std::vector<char> parallel_flags(std::size_t count, unsigned workers,
                                 const std::function<bool(std::size_t)>& pred) {
  std::vector<char> flags(count, 0);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) flags[i] = pred(i) ? 1 : 0;
    return flags;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) flags[i] = pred(i) ? 1 : 0;
    });
  }
  for (auto& t : pool) t.join();
  return flags;
}

// Most balanced tuple with at most k values: contiguous blocks whose sizes
// differ by at most one.
std::vector<int> balanced_tuple(int n, int k) {
  const int classes = std::min(n, k);
  std::vector<int> a;
  a.reserve(n);
  for (int c = 0; c < classes; ++c) {
    const int size = n / classes + (c < n % classes ? 1 : 0);
    for (int j = 0; j < size; ++j) a.push_back(c + 1);
  }
  return a;
}

// Restricted growth strings: set partitions of {0..n-1} into at most k blocks.
void for_each_set_partition(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      visit(label);
      return;
    }
    for (int b = 0; b <= std::min(blocks, k - 1); ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    visit(label);
    return;
  }
  rec(0, 0);
}

ClosureReport start_report(const PermGroup& g, int k, ClosureAlgorithm algorithm) {
  if (k < 2) throw InvalidArgument("closure: k must be at least 2");
  ClosureReport r;
  r.group = g;
  r.k = k;
  r.algorithm = algorithm;
  return r;
}

}  // namespace

std::string to_string(ClosureAlgorithm a) {
  switch (a) {
    case ClosureAlgorithm::Naive: return "naive";
    case ClosureAlgorithm::Pruned: return "pruned";
    case ClosureAlgorithm::Kearnes: return "kearnes";
  }
  return "?";
}

ClosureAlgorithm parse_algorithm(const std::string& name) {
  if (name == "naive") return ClosureAlgorithm::Naive;
  if (name == "pruned") return ClosureAlgorithm::Pruned;
  if (name == "kearnes") return ClosureAlgorithm::Kearnes;
  throw UnknownName("unknown closure algorithm '" + name + "'");
}

PermGroup group_from_elements(const PermGroup& seed, std::vector<PermKey> keys) {
  const int n = seed.degree();
  auto gens = greedy_generators(n, seed.generators(), keys);
  return PermGroup::from_elements(n, all_points(n), std::move(gens), std::move(keys));
}

CosetFilter filter_left_cosets(const PermGroup& g, std::span<const PermKey> candidates,
                               const std::function<bool(const Permutation&)>& accept, unsigned workers) {
  const int n = g.degree();
  // Candidates c, c' give the same coset cG iff they differ by an element of
  // candidates ∩ G.
  std::vector<PermKey> meet;
  for (PermKey c : candidates)
    if (g.contains_key(c)) meet.push_back(c);

  std::vector<char> marked(candidates.size(), 0);
  std::vector<PermKey> reps;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (marked[i]) continue;
    reps.push_back(candidates[i]);
    for (PermKey s : meet) {
      const PermKey y = compose_keys(candidates[i], s, n);
      const auto it = std::lower_bound(candidates.begin(), candidates.end(), y);
      if (it != candidates.end() && *it == y) marked[static_cast<std::size_t>(it - candidates.begin())] = 1;
    }
  }

  const auto flags = parallel_flags(reps.size(), workers, [&](std::size_t i) {
    return accept(Permutation::from_key(reps[i], n));
  });

  CosetFilter out;
  out.examined = reps.size();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!flags[i]) continue;
    out.accepted_representatives.push_back(Permutation::from_key(reps[i], n));
    for (PermKey h : g.element_keys()) out.elements.push_back(compose_keys(reps[i], h, n));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

ClosureReport closure_naive(const PermGroup& g, int k, const Budgets& budgets) {
  const auto t0 = Clock::now();
  ClosureReport r = start_report(g, k, ClosureAlgorithm::Naive);
  const int n = g.degree();
  if (factorial(n) > budgets.candidate_budget)
    throw BudgetExceeded("candidate budget", factorial(n), budgets.candidate_budget);
  const OrbitPartition orbits = orbit_partition(g, k, budgets.tuple_budget);
  const auto order = orbits.small_orbits_first();
  const auto all = all_permutation_keys(n);
  const auto flags = parallel_flags(all.size(), budgets.workers, [&](std::size_t i) {
    return orbits.preserved_by(Permutation::from_key(all[i], n), order);
  });
  std::vector<PermKey> keys;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (flags[i]) keys.push_back(all[i]);
  r.candidates_examined = all.size();
  r.closure = group_from_elements(g, std::move(keys));
  r.wall_time = Clock::now() - t0;
  return r;
}

ClosureReport closure_pruned(const PermGroup& g, int k, const Budgets& budgets) {
  const auto t0 = Clock::now();
  ClosureReport r = start_report(g, k, ClosureAlgorithm::Pruned);
  const int n = g.degree();
  const auto a = balanced_tuple(n, k);
  std::uint64_t stab_order = 1;
  for (const auto& cls : value_classes(a)) stab_order *= factorial(static_cast<int>(cls.size()));
  if (stab_order > budgets.candidate_budget)
    throw BudgetExceeded("candidate budget", stab_order, budgets.candidate_budget);

  const OrbitPartition orbits = orbit_partition(g, k, budgets.tuple_budget);
  const auto order = orbits.small_orbits_first();
  const PermGroup stab = tuple_stabilizer(a);
  auto filtered = filter_left_cosets(
      g, stab.element_keys(), [&](const Permutation& s) { return orbits.preserved_by(s, order); },
      budgets.workers);
  r.candidates_examined = filtered.examined;
  r.pruning_tuple = a;
  r.closure = group_from_elements(g, std::move(filtered.elements));
  r.wall_time = Clock::now() - t0;
  return r;
}

ClosureReport closure_kearnes(const PermGroup& g, int k, const Budgets& budgets, bool per_partition) {
  const auto t0 = Clock::now();
  ClosureReport r = start_report(g, k, ClosureAlgorithm::Kearnes);
  const int n = g.degree();
  if (n > 7) throw BudgetExceeded("Kearnes oracle degree", static_cast<std::uint64_t>(n), 7);
  const auto all = all_permutation_keys(n);
  auto rank = [&](PermKey key) {
    return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), key) - all.begin());
  };

  std::vector<char> in_all(all.size(), 1);
  std::vector<char> product(all.size());
  std::uint64_t examined = 0;
  auto intersect_with = [&](const std::vector<int>& tuple) {
    const PermGroup stab = tuple_stabilizer(tuple);
    std::fill(product.begin(), product.end(), 0);
    for (PermKey s : stab.element_keys())
      for (PermKey h : g.element_keys()) product[rank(compose_keys(s, h, n))] = 1;
    for (std::size_t i = 0; i < all.size(); ++i) in_all[i] = in_all[i] && product[i];
    ++examined;
  };

  if (per_partition) {
    for_each_set_partition(n, k, [&](const std::vector<int>& labels) {
      std::vector<int> tuple(labels.begin(), labels.end());
      for (int& v : tuple) ++v;
      intersect_with(tuple);
    });
  } else {
    const TupleSpace space(n, k, budgets.tuple_budget);
    for (std::uint64_t x = 0; x < space.size(); ++x) intersect_with(space.decode(x));
  }

  std::vector<PermKey> keys;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (in_all[i]) keys.push_back(all[i]);
  r.candidates_examined = examined;
  r.closure = group_from_elements(g, std::move(keys));
  r.wall_time = Clock::now() - t0;
  return r;
}

ClosureReport compute_closure(const PermGroup& g, int k, ClosureAlgorithm algorithm, const Budgets& budgets) {
  switch (algorithm) {
    case ClosureAlgorithm::Naive: return closure_naive(g, k, budgets);
    case ClosureAlgorithm::Kearnes: return closure_kearnes(g, k, budgets);
    case ClosureAlgorithm::Pruned: break;
  }
  return closure_pruned(g, k, budgets);
}

PermGroup closure(const PermGroup& g, int k, const Budgets& budgets) {
  return closure_pruned(g, k, budgets).closure;
}

bool is_closed(const PermGroup& g, int k, const Budgets& budgets) {
  return closure_pruned(g, k, budgets).closed();
}

std::size_t ClosureChain::distinct_groups() const {
  std::vector<const PermGroup*> seen;
  for (const auto& e : entries) {
    if (std::none_of(seen.begin(), seen.end(), [&](const PermGroup* p) { return *p == e.closure; }))
      seen.push_back(&e.closure);
  }
  return seen.size();
}

ClosureChain closure_chain(const PermGroup& g, const Budgets& budgets) {
  ClosureChain chain;
  for (int k = 2; k <= g.degree(); ++k) {
    auto c = closure(g, k, budgets);
    if (c.order() != g.order()) chain.largest_nonclosed_k = k;
    chain.entries.push_back({k, std::move(c)});
  }
  return chain;
}

bool orbit_equivalent(const PermGroup& g, const PermGroup& h, int k, const Budgets& budgets) {
  if (g.degree() != h.degree()) throw InvalidArgument("orbit_equivalent: degree mismatch");
  return orbit_partition(g, k, budgets.tuple_budget) == orbit_partition(h, k, budgets.tuple_budget);
}

Thickness is_k_thick(const PermGroup& h, int k, const Budgets& budgets) {
  // A tuple has a trivial stabilizer in H exactly when its H-orbit has |H|
  // elements.
  const PermGroup local = relabel_to_ground(h);
  const OrbitPartition orbits = orbit_partition(local, k, budgets.tuple_budget);
  const auto sizes = orbits.orbit_size_of_each();
  Thickness t;
  for (std::uint64_t x = 0; x < orbits.space().size(); ++x) {
    if (sizes[x] == local.order()) {
      t.failing_tuple = orbits.space().decode(x);
      return t;
    }
  }
  t.thick = true;
  return t;
}

std::vector<std::vector<int>> witness_tuples(int m, int k, int d, WitnessFamily family) {
  std::vector<std::vector<int>> out;
  if (d < 1) return out;
  if (family == WitnessFamily::SingleRepeat) {
    // Values: 1 on the chosen d+1 coordinates, 2,3,... elsewhere.
    if (m < d + 1 || 1 + (m - d - 1) > k) return out;
    std::vector<int> pick(m, 0);
    std::fill(pick.end() - (d + 1), pick.end(), 1);
    do {
      std::vector<int> t(m);
      int next = 2;
      for (int i = 0; i < m; ++i) t[i] = pick[i] ? 1 : next++;
      out.push_back(std::move(t));
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
  }
  // d disjoint pairs sharing values 1..d, remaining coordinates distinct.
  if (m < 2 * d || d + (m - 2 * d) > k) return out;
  std::set<std::vector<int>> seen;
  std::vector<int> t(m, 0);
  std::function<void(int)> place = [&](int value) {
    if (value > d) {
      std::vector<int> full = t;
      int next = d + 1;
      for (int& v : full)
        if (v == 0) v = next++;
      seen.insert(std::move(full));
      return;
    }
    // Pair value with the least free coordinate ordering to avoid duplicates.
    for (int i = 0; i < m; ++i) {
      if (t[i]) continue;
      for (int j = i + 1; j < m; ++j) {
        if (t[j]) continue;
        t[i] = t[j] = value;
        place(value + 1);
        t[i] = t[j] = 0;
      }
    }
  };
  place(1);
  out.assign(seen.begin(), seen.end());
  return out;
}

bool has_nontrivial_stabilizer(const PermGroup& g, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != g.degree())
    throw InvalidArgument("has_nontrivial_stabilizer: arity mismatch");
  const PermKey id = identity_key(g.degree());
  for (PermKey key : g.element_keys()) {
    if (key == id) continue;
    const auto p = Permutation::from_key(key, g.degree());
    bool fixes = true;
    for (int i = 0; i < g.degree() && fixes; ++i) fixes = tuple[i] == tuple[p(i)];
    if (fixes) return true;
  }
  return false;
}

}  // namespace galois
