#include <doctest.h>

#include <random>

#include "galois/catalog.hpp"
#include "galois/closure.hpp"
#include "galois/enumerate.hpp"

using namespace galois;

namespace {

PermGroup grp(int n, std::vector<std::string> gens) { return generate_group(n, gens); }

}  // namespace

TEST_CASE("naive closure examples") {
  CHECK(closure_naive(alternating_group(3), 2).closure == symmetric_group(3));
  for (int k = 2; k <= 5; ++k) CHECK(closure_naive(symmetric_group(4), k).closure == symmetric_group(4));
  CHECK_THROWS_AS(closure_naive(symmetric_group(4), 1), InvalidArgument);
  const auto trivial = PermGroup::trivial(3);
  CHECK(closure_naive(trivial, 2).closure.order() == 1);
}

TEST_CASE("pruned closure examples") {
  const auto c4 = grp(4, {"(1 2 3 4)"});
  const auto r = closure_pruned(c4, 2);
  CHECK(r.closure.order() == 8);
  CHECK(r.closure == get_group("D_4"));
  CHECK(r.pruning_tuple.has_value());
  CHECK_FALSE(r.closed());

  const auto g = grp(5, {"(1 2 3)", "(1 2)(4 5)"});
  REQUIRE(g.order() == 6);
  CHECK(closure_pruned(g, 2).closure == direct_product(symmetric_group(5, {0, 1, 2}), symmetric_group(5, {3, 4})));
  CHECK(closure_pruned(alternating_group(5), 4).closure == symmetric_group(5));
}

TEST_CASE("Kearnes closure examples") {
  CHECK(closure_kearnes(alternating_group(4), 3).closure == symmetric_group(4));
  const auto d4 = get_group("D_4");
  CHECK(closure_kearnes(d4, 2).closure == d4);
  CHECK(closure_kearnes(d4, 2).closure == closure_naive(d4, 2).closure);
  CHECK(closure_kearnes(get_group("AGL(1,5)"), 2).closure == symmetric_group(5));
  CHECK_THROWS_AS(closure_kearnes(symmetric_group(8), 2), BudgetExceeded);
}

TEST_CASE("literal Kearnes intersection equals the per-partition one") {
  for (const auto& cls : all_subgroups(4).classes)
    for (int k = 2; k <= 4; ++k)
      CHECK(closure_kearnes(cls.representative, k, {}, false).closure ==
            closure_kearnes(cls.representative, k, {}, true).closure);
}

TEST_CASE("worker count does not change the result") {
  Budgets many;
  many.workers = 3;
  for (const auto& cls : all_subgroups(5).classes) {
    const auto& g = cls.representative;
    CHECK(closure_naive(g, 2).closure == closure_naive(g, 2, many).closure);
    const auto a = closure_pruned(g, 3), b = closure_pruned(g, 3, many);
    CHECK(a.closure == b.closure);
    CHECK(a.candidates_examined == b.candidates_examined);
  }
}

TEST_CASE("budgets are enforced") {
  Budgets tight;
  tight.candidate_budget = 10;
  CHECK_THROWS_AS(closure_naive(alternating_group(4), 2, tight), BudgetExceeded);
  tight = Budgets{};
  tight.tuple_budget = 10;
  CHECK_THROWS_AS(closure_pruned(alternating_group(4), 3, tight), BudgetExceeded);
}

TEST_CASE("algorithm names") {
  for (auto a : {ClosureAlgorithm::Naive, ClosureAlgorithm::Pruned, ClosureAlgorithm::Kearnes})
    CHECK(parse_algorithm(to_string(a)) == a);
  CHECK_THROWS_AS(parse_algorithm("fast"), UnknownName);
  CHECK(compute_closure(alternating_group(3), 2, ClosureAlgorithm::Naive).algorithm == ClosureAlgorithm::Naive);
}

TEST_CASE("closedness, chains, orbit equivalence") {
  CHECK_FALSE(is_closed(alternating_group(4), 3));
  CHECK(is_closed(alternating_group(4), 4));
  const auto chain = closure_chain(alternating_group(4));
  REQUIRE(chain.entries.size() == 3);
  CHECK(chain.largest_nonclosed_k == 3);
  CHECK(chain.distinct_groups() == 2);
  CHECK(closure_chain(symmetric_group(4)).largest_nonclosed_k == 0);
  CHECK(orbit_equivalent(alternating_group(3), symmetric_group(3), 2));
  CHECK_FALSE(orbit_equivalent(alternating_group(3), symmetric_group(3), 3));
  CHECK_THROWS_AS(orbit_equivalent(symmetric_group(3), symmetric_group(4), 2), InvalidArgument);
}

TEST_CASE("k-thickness") {
  CHECK(is_k_thick(symmetric_group(3), 2).thick);
  const auto t = is_k_thick(symmetric_group(3), 3);
  CHECK_FALSE(t.thick);
  REQUIRE(t.failing_tuple.has_value());
  CHECK(*t.failing_tuple == std::vector<int>{1, 2, 3});
  // Thickness only looks at the ground set.
  CHECK(is_k_thick(symmetric_group(6, {3, 4}), 1).thick);
  CHECK_FALSE(is_k_thick(symmetric_group(6, {3, 4}), 2).thick);
}

TEST_CASE("witness tuple families") {
  const auto single = witness_tuples(4, 3, 1, WitnessFamily::SingleRepeat);
  // Values are normalized: the repeated value is 1, so one tuple per choice
  // of the two repeated coordinates.
  CHECK(single.size() == 6);
  for (const auto& a : single) CHECK(value_classes(a).size() == 3);
  CHECK(witness_tuples(3, 2, 3, WitnessFamily::SingleRepeat).empty());
  const auto paired = witness_tuples(4, 2, 2, WitnessFamily::PairedRepeats);
  CHECK(paired.size() == 6);
  CHECK(has_nontrivial_stabilizer(symmetric_group(4), paired.front()));
  CHECK_FALSE(has_nontrivial_stabilizer(grp(4, {"(1 2 3 4)"}), std::vector<int>{1, 1, 2, 2}));
}

TEST_CASE("coset filter returns whole cosets") {
  const auto g = alternating_group(4);
  const auto s4 = symmetric_group(4);
  const auto all = filter_left_cosets(g, s4.element_keys(), [](const Permutation&) { return true; });
  CHECK(all.elements.size() == 24);
  CHECK(all.examined == 2);
  const auto even = filter_left_cosets(g, s4.element_keys(), [](const Permutation& p) { return p.sign() == 1; });
  CHECK(even.elements.size() == 12);
}
