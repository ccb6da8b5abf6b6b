#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galois/error.hpp"
#include "galois/permutation.hpp"

namespace galois {

/// A permutation group given by generators together with its fully
/// materialized element set. Every generator fixes the points outside the
/// ground set. Elements are kept as packed keys sorted by image-array
/// lexicographic order, so membership is a binary search and equality of
/// groups is equality of the sorted sets.
class PermGroup {
 public:
  PermGroup() = default;

  /// Trivial group of the given degree with ground set {0..degree-1}.
  static PermGroup trivial(int degree);
  static PermGroup trivial(int degree, std::vector<int> ground_set);

  /// Assemble from an element set already known to be a group. The keys must
  /// be sorted and duplicate free; only cheap sanity checks are performed.
  static PermGroup from_elements(int degree, std::vector<int> ground_set,
                                 std::vector<Permutation> generators,
                                 std::vector<PermKey> sorted_elements);

  int degree() const noexcept { return degree_; }
  const std::vector<int>& ground_set() const noexcept { return ground_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::span<const PermKey> element_keys() const noexcept { return elements_; }
  std::uint64_t order() const noexcept { return elements_.size(); }

  Permutation element(std::size_t i) const { return Permutation::from_key(elements_[i], degree_); }
  std::vector<Permutation> elements() const;

  bool contains(const Permutation& p) const;
  bool contains_key(PermKey key) const noexcept;
  /// Subgroup test on element sets (same degree required).
  bool is_subgroup_of(const PermGroup& other) const;

  /// Points moved by at least one element (0-indexed).
  std::vector<int> moved_points() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) noexcept {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  int degree_ = 0;
  std::vector<int> ground_;
  std::vector<Permutation> generators_;
  std::vector<PermKey> elements_;
};

/// Closure of the generators under composition (breadth-first with dedup).
/// An empty ground set means all of {0..n-1}; otherwise every generator must
/// fix the points outside it. Throws BudgetExceeded past `bound` elements.
PermGroup generate_group(int degree, const std::vector<Permutation>& generators,
                         std::vector<int> ground_set = {},
                         std::uint64_t bound = Budgets{}.materialization_bound);

/// Generators parsed from cycle notation, 1-indexed.
PermGroup generate_group(int degree, const std::vector<std::string>& cycle_generators,
                         std::vector<int> ground_set = {});

/// Symmetric / alternating group on a 0-indexed point set inside S_degree.
PermGroup symmetric_group(int degree, std::vector<int> points);
PermGroup alternating_group(int degree, std::vector<int> points);
inline PermGroup symmetric_group(int n) { return symmetric_group(n, {}); }
inline PermGroup alternating_group(int n) { return alternating_group(n, {}); }

/// All permutations of S_n in lexicographic order of image arrays.
std::vector<PermKey> all_permutation_keys(int n);

/// Direct product with the intransitive action. The result has degree
/// max(G.degree, H.degree); the ground sets must be disjoint.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);

/// Subdirect product data: two groups on disjoint ground sets and labelings
/// of their elements by a common quotient K = {0..quotient_size-1}. Labels
/// are aligned with the sorted element order of the respective group.
struct SubdirectSpec {
  PermGroup left;
  PermGroup right;
  int quotient_size = 1;
  std::vector<int> left_classes;
  std::vector<int> right_classes;
};

/// {g1 x g2 : phi1(g1) = phi2(g2)}. Both labelings must be surjective
/// homomorphisms inducing the same multiplication on K.
PermGroup subdirect_from_homs(const SubdirectSpec& spec);

/// (A_B x L0) u ((S_B \ A_B) x (L \ L0)) where B is the ground set of
/// `b_group` (which must be S_B) and L0 has index 2 in L.
PermGroup index2_subdirect(const PermGroup& b_group, const PermGroup& l, const PermGroup& l0);

/// Labels of the two cosets of an index-2 subgroup: 0 on `sub`, 1 elsewhere.
std::vector<int> index2_labels(const PermGroup& group, const PermGroup& sub);

/// Orbits of the group on its degree's points, each sorted, ordered by least
/// point. Points outside the ground set appear as singletons.
std::vector<std::vector<int>> orbits_on_points(const PermGroup& g);
/// Orbits restricted to the ground set.
std::vector<std::vector<int>> ground_orbits(const PermGroup& g);

bool is_transitive(const PermGroup& g);

/// True iff the action on the ground set has no nontrivial block system.
/// Throws InvalidArgument when the group is not transitive on its ground set.
bool is_primitive(const PermGroup& g);

/// Image of the group under restriction to `points` (which must be a union of
/// orbits); the result keeps the degree and has ground set `points`.
PermGroup restrict_to(const PermGroup& g, const std::vector<int>& points);

/// Relabel the moved points (or ground set) to 0..m-1 preserving order.
PermGroup relabel_to_ground(const PermGroup& g);

/// Same group viewed inside S_new_degree (extra points fixed).
PermGroup embed(const PermGroup& g, int new_degree);

/// Conjugate s * g * s^-1 of every element.
PermGroup conjugate(const PermGroup& g, const Permutation& s);

/// Search S_n for a conjugating element; returns true and sets `witness`
/// when H = s G s^-1. Degree must be at most 9.
bool are_conjugate(const PermGroup& g, const PermGroup& h, Permutation* witness = nullptr);

/// Group file: "degree: n" then one generator per line in cycle notation,
/// '#' starts a comment. Throws ParseError with the line number as position.
PermGroup parse_group_file(std::istream& in);
PermGroup read_group_file(const std::string& path);
std::string format_group_file(const PermGroup& g, std::string_view comment = {});

/// A short generating set for the group spanned by `seed` and `elements`,
/// chosen greedily in element order.
std::vector<Permutation> greedy_generators(int degree, const std::vector<Permutation>& seed,
                                           std::span<const PermKey> sorted_elements);

}  // namespace galois
