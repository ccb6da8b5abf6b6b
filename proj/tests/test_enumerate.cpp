#include <doctest.h>

#include <algorithm>
#include <set>

#include "galois/enumerate.hpp"

using namespace galois;

TEST_CASE("subgroup counts") {
  const std::uint64_t totals[] = {0, 1, 2, 6, 30, 156, 1455};
  const std::size_t classes[] = {0, 1, 2, 4, 11, 19, 56};
  for (int n = 1; n <= 6; ++n) {
    const auto cat = all_subgroups(n);
    CHECK(cat.total_subgroups == totals[n]);
    CHECK(cat.classes.size() == classes[n]);
    std::uint64_t sum = 0;
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& c : cat.classes) {
      sum += c.class_size;
      CHECK(fact % c.order == 0);
      CHECK(c.representative.order() == c.order);
      CHECK(fact % c.class_size == 0);
    }
    CHECK(sum == cat.total_subgroups);
  }
  CHECK_THROWS_AS(all_subgroups(7), InvalidArgument);
  CHECK_THROWS_AS(all_subgroups(0), InvalidArgument);
}

TEST_CASE("every subgroup of S_n, n <= 4, is generated by at most two elements") {
  for (int n = 1; n <= 4; ++n) {
    const auto elements = symmetric_group(n).elements();
    std::set<std::vector<PermKey>> two_generated;
    for (const auto& x : elements)
      for (const auto& y : elements) {
        const auto g = generate_group(n, std::vector<Permutation>{x, y});
        two_generated.emplace(g.element_keys().begin(), g.element_keys().end());
      }
    const auto listed = subgroup_element_sets(n);
    CHECK(std::set<std::vector<PermKey>>(listed.begin(), listed.end()) == two_generated);
    CHECK(listed.size() == two_generated.size());
  }
}

TEST_CASE("extension order does not change the census") {
  for (int n = 3; n <= 6; ++n) {
    const auto a = all_subgroups(n, ExtensionOrder::Forward);
    const auto b = all_subgroups(n, ExtensionOrder::Reverse);
    REQUIRE(a.classes.size() == b.classes.size());
    CHECK(a.total_subgroups == b.total_subgroups);
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      CHECK(a.classes[i].representative == b.classes[i].representative);
      CHECK(a.classes[i].class_size == b.classes[i].class_size);
    }
    if (n <= 5) CHECK(subgroup_element_sets(n, ExtensionOrder::Forward) == subgroup_element_sets(n, ExtensionOrder::Reverse));
  }
}

TEST_CASE("class representatives are pairwise non-conjugate") {
  for (int n = 3; n <= 5; ++n) {
    const auto cat = all_subgroups(n);
    for (std::size_t i = 0; i < cat.classes.size(); ++i)
      for (std::size_t j = i + 1; j < cat.classes.size(); ++j)
        CHECK_FALSE(are_conjugate(cat.classes[i].representative, cat.classes[j].representative));
  }
}

TEST_CASE("chain length census") {
  for (int n = 2; n <= 6; ++n) {
    const auto hist = chain_length_census(n);
    for (const auto& [len, count] : hist) CHECK((len == 1 || len == 2));
    std::uint64_t total = 0;
    for (const auto& [len, count] : hist) total += count;
    CHECK(total == all_subgroups(n).classes.size());
  }
}

TEST_CASE("expected table data") {
  const auto rows = expected_table1();
  REQUIRE(rows.size() == 19);
  CHECK(rows.front().group == "A_3");
  CHECK(rows.back().group == "R(cube)");
  CHECK(rows.back().closure == "S(cube)");
}

TEST_CASE("computed table contains the expected rows") {
  const auto rows = table1_report();
  auto has = [&](int n, int k, const std::string& g, const std::string& c) {
    return std::any_of(rows.begin(), rows.end(),
                       [&](const Table1Row& r) { return r.n == n && r.k == k && r.group == g && r.closure == c; });
  };
  CHECK(has(6, 2, "R(cube)", "S(cube)"));
  CHECK(has(5, 2, "A_3×S_2", "S_3×S_2"));
  CHECK(has(4, 3, "A_4", "S_4"));
  const auto cmp = compare_table1(rows);
  CHECK(cmp.matched == 19);
  for (const auto& r : rows) CHECK_FALSE(r.group.empty());
  const std::string text = format_table1(rows);
  CHECK(text.find("R(cube)") != std::string::npos);
}
