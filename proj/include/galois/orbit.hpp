#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "galois/error.hpp"
#include "galois/perm_group.hpp"

namespace galois {

/// {1..alphabet}^arity with a mixed-radix index: coordinate 1 is the most
/// significant digit and value j is stored as digit j-1, so lexicographic
/// order on tuples is index order.
class TupleSpace {
 public:
  TupleSpace(int arity, int alphabet, std::uint64_t budget = Budgets{}.tuple_budget);

  int arity() const noexcept { return arity_; }
  int alphabet() const noexcept { return alphabet_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Place value of coordinate i (0-indexed).
  std::uint64_t weight(int i) const noexcept { return weights_[i]; }

  /// Values are 1-indexed.
  std::uint64_t encode(std::span<const int> tuple) const;
  std::vector<int> decode(std::uint64_t index) const;

  friend bool operator==(const TupleSpace& a, const TupleSpace& b) noexcept {
    return a.arity_ == b.arity_ && a.alphabet_ == b.alphabet_;
  }

 private:
  int arity_;
  int alphabet_;
  std::uint64_t size_;
  std::vector<std::uint64_t> weights_;
};

/// How permutations act on the tuples of a space.
enum class TupleAction {
  /// a in k^n, (a^s)_i = a_{s(i)}: permuting coordinates.
  Coordinates,
  /// r in n^k, (r^s)_i = s(r_i): moving the entries (Wielandt relations).
  Entries,
};

/// a^s for a 1-indexed tuple; throws InvalidArgument on arity mismatch.
std::vector<int> act_tuple(std::span<const int> tuple, const Permutation& s);

/// Index of the image of `index` under `s`.
std::uint64_t act_index(const TupleSpace& space, TupleAction action, std::uint64_t index,
                        const Permutation& s);

/// Partition of a tuple space into orbits of a group. Each tuple carries the
/// index of the least member of its orbit (its canonical representative).
class OrbitPartition {
 public:
  OrbitPartition(TupleSpace space, TupleAction action, std::vector<std::uint32_t> canonical,
                 std::uint64_t orbit_count);

  const TupleSpace& space() const noexcept { return space_; }
  TupleAction action() const noexcept { return action_; }
  std::uint64_t orbit_count() const noexcept { return orbit_count_; }
  std::uint32_t canonical(std::uint64_t index) const noexcept { return canonical_[index]; }
  std::span<const std::uint32_t> canonical_map() const noexcept { return canonical_; }
  bool same_orbit(std::uint64_t a, std::uint64_t b) const noexcept {
    return canonical_[a] == canonical_[b];
  }

  /// Canonical representatives in increasing order.
  std::vector<std::uint32_t> representatives() const;
  /// Size of the orbit of each tuple's representative, indexed by tuple.
  std::vector<std::uint32_t> orbit_size_of_each() const;
  /// Orbit sizes aligned with representatives().
  std::vector<std::uint64_t> orbit_sizes() const;
  /// True iff every orbit of this partition lies inside an orbit of `coarser`.
  bool refines(const OrbitPartition& coarser) const;

  /// True iff s maps every tuple into its own orbit. `order` optionally fixes
  /// the test sequence (early exit on the first failure).
  bool preserved_by(const Permutation& s, std::span<const std::uint32_t> order = {}) const;

  /// Tuple indices sorted by orbit size, then index: small orbits first.
  std::vector<std::uint32_t> small_orbits_first() const;

  /// Plain-text census: orbit count, size histogram, representatives.
  std::string census(std::size_t max_representatives = 64) const;

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) noexcept {
    return a.space_ == b.space_ && a.canonical_ == b.canonical_;
  }

 private:
  TupleSpace space_;
  TupleAction action_;
  std::vector<std::uint32_t> canonical_;
  std::uint64_t orbit_count_;
};

/// Orbits of G on {1..k}^n (n = degree of G) under the coordinate action,
/// built from the generators with union-find.
OrbitPartition orbit_partition(const PermGroup& g, int k, std::uint64_t tuple_budget = Budgets{}.tuple_budget);

/// Orbits of G acting entrywise on {1..n}^k.
OrbitPartition kpow_orbit_partition(const PermGroup& g, int k,
                                    std::uint64_t tuple_budget = Budgets{}.tuple_budget);

/// Stabilizer of a 1-indexed tuple in S_n: the direct product of the
/// symmetric groups on the value classes.
PermGroup tuple_stabilizer(std::span<const int> tuple);

/// Value-class partition of a tuple (classes ordered by least coordinate).
std::vector<std::vector<int>> value_classes(std::span<const int> tuple);

/// |Fix(g)| summed over the group divided by |G| (Burnside count).
std::uint64_t burnside_count(const PermGroup& g, int k);

}  // namespace galois
