#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galois/error.hpp"
#include "galois/orbit.hpp"
#include "galois/perm_group.hpp"

namespace galois {

enum class ClosureAlgorithm { Naive, Pruned, Kearnes };

std::string to_string(ClosureAlgorithm a);
ClosureAlgorithm parse_algorithm(const std::string& name);

/// Galois closure of a group over a k-element domain: the largest subgroup
/// of S_n with the same orbits on k^n.
struct ClosureReport {
  PermGroup group;
  int k = 0;
  PermGroup closure;
  ClosureAlgorithm algorithm = ClosureAlgorithm::Pruned;
  std::uint64_t candidates_examined = 0;
  /// The tuple whose stabilizer bounds the candidates (pruned only), 1-indexed.
  std::optional<std::vector<int>> pruning_tuple;
  std::chrono::duration<double> wall_time{};

  bool closed() const { return closure.order() == group.order(); }
};

/// Tests every permutation of S_n against the orbit partition.
ClosureReport closure_naive(const PermGroup& g, int k, const Budgets& budgets = {});

/// Restricts candidates to (S_n)_a * G for a tuple a with the most balanced
/// value classes, testing one representative per left coset of G.
ClosureReport closure_pruned(const PermGroup& g, int k, const Budgets& budgets = {});

/// Intersection of the products (S_n)_a * G. With `per_partition` the
/// intersection runs over one tuple per value-class partition; otherwise over
/// every a in k^n. Oracle grade: degree at most 7.
ClosureReport closure_kearnes(const PermGroup& g, int k, const Budgets& budgets = {},
                              bool per_partition = true);

ClosureReport compute_closure(const PermGroup& g, int k, ClosureAlgorithm algorithm,
                              const Budgets& budgets = {});

/// Shorthand for the pruned closure group.
PermGroup closure(const PermGroup& g, int k, const Budgets& budgets = {});

bool is_closed(const PermGroup& g, int k, const Budgets& budgets = {});

struct ClosureChain {
  struct Entry {
    int k;
    PermGroup closure;
  };
  std::vector<Entry> entries;  // k = 2..n
  /// Largest k whose closure differs from the group; 0 when closed over 2.
  int largest_nonclosed_k = 0;

  /// Number of distinct groups among the closures.
  std::size_t distinct_groups() const;
};

ClosureChain closure_chain(const PermGroup& g, const Budgets& budgets = {});

/// Identical orbit partitions of k^n.
bool orbit_equivalent(const PermGroup& g, const PermGroup& h, int k, const Budgets& budgets = {});

struct Thickness {
  bool thick = false;
  /// First tuple over the ground set (ground-set order, values 1..k) whose
  /// stabilizer in H is trivial.
  std::optional<std::vector<int>> failing_tuple;
};

/// Every tuple in k^Omega (Omega = ground set of H) is fixed by some
/// non-identity element of H.
Thickness is_k_thick(const PermGroup& h, int k, const Budgets& budgets = {});

enum class WitnessFamily {
  /// One value repeated exactly d+1 times, all other values distinct.
  SingleRepeat,
  /// d values each repeated exactly twice, all other values distinct.
  PairedRepeats,
};

/// All tuples of the family over m coordinates and alphabet k; empty when the
/// family cannot be realized.
std::vector<std::vector<int>> witness_tuples(int m, int k, int d, WitnessFamily family);

/// Some non-identity element of the group fixes the tuple (coordinate action).
bool has_nontrivial_stabilizer(const PermGroup& g, std::span<const int> tuple);

/// Union of the left cosets cG over representatives c of the cosets meeting
/// `candidates` (a group) that pass `accept`. `g` must be a subgroup of the
/// group generated by candidates together with g.
struct CosetFilter {
  std::vector<PermKey> elements;  // sorted
  std::vector<Permutation> accepted_representatives;
  std::uint64_t examined = 0;
};

CosetFilter filter_left_cosets(const PermGroup& g, std::span<const PermKey> candidates,
                               const std::function<bool(const Permutation&)>& accept,
                               unsigned workers = 1);

/// Assemble a report's closure group from sorted keys, reusing the group's
/// generators as a seed.
PermGroup group_from_elements(const PermGroup& seed, std::vector<PermKey> keys);

}  // namespace galois
