#include <doctest.h>

#include <sstream>
#include <variant>

#include "galois/catalog.hpp"
#include "galois/closure.hpp"
#include "galois/function_table.hpp"

using namespace galois;

TEST_CASE("function table parsing") {
  std::istringstream in("# xor-like\n2 2 2\n1 1 -> 1\n1 2 -> 2\n2 1 -> 2\n2 2 -> 1\n");
  const auto f = parse_function_table(in);
  CHECK(f.n == 2);
  CHECK(f.values == std::vector<int>{1, 2, 2, 1});
  std::istringstream back(format_function_table(f));
  CHECK(parse_function_table(back).values == f.values);

  std::istringstream with_default("3 2 2\ndefault: 1\n2 2 2 -> 2\n");
  const auto g = parse_function_table(with_default);
  CHECK(g.values.back() == 2);
  CHECK(g.values.front() == 1);
}

TEST_CASE("function table errors") {
  auto fails = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_function_table(in), ParseError);
  };
  fails("");
  fails("2 2\n");
  fails("2 2 2\n1 1 -> 1\n");             // missing tuples, no default
  fails("2 2 2\n1 1 -> 3\ndefault: 1\n");  // value out of range
  fails("2 2 2\n1 3 -> 1\ndefault: 1\n");  // entry out of range
  fails("2 2 2\n1 1 1 -> 1\ndefault: 1\n");
  fails("2 2 2\n1 1 1\ndefault: 1\n");
  fails("2 2 2\n1 1 -> 1\n1 1 -> 2\ndefault: 1\n");
}

TEST_CASE("invariance groups of symmetric and cyclic functions") {
  std::istringstream maj("3 2 2\ndefault: 1\n1 2 2 -> 2\n2 1 2 -> 2\n2 2 1 -> 2\n2 2 2 -> 2\n");
  CHECK(invariance_group(parse_function_table(maj)) == symmetric_group(3));
  // f(a) = a_1 depends on the first coordinate only.
  std::istringstream first("3 2 2\ndefault: 1\n2 1 1 -> 2\n2 1 2 -> 2\n2 2 1 -> 2\n2 2 2 -> 2\n");
  CHECK(invariance_group(parse_function_table(first)) == symmetric_group(3, {1, 2}));
}

TEST_CASE("orbit coloring represents the closure") {
  for (const char* name : {"C_4", "V_4", "A_4", "D_4"}) {
    const auto g = get_group(name);
    for (int k = 2; k <= 3; ++k) CHECK(invariance_group(orbit_coloring(g, k)) == closure(g, k));
  }
}

TEST_CASE("Klein four-group needs three values over a two-element domain") {
  const auto v = get_group("V_4");
  const auto result = min_codomain(v, 2);
  REQUIRE(std::holds_alternative<Representation>(result));
  const auto& rep = std::get<Representation>(result);
  CHECK(rep.m == 3);
  REQUIRE(rep.colorings_examined.size() == 3);
  CHECK(rep.orbit_colors.size() == 7);
  CHECK(rep.colorings_examined[1] == 63);  // every 2-coloring of 7 orbits up to swapping colors
  CHECK(invariance_group(rep.witness) == v);
  CHECK(rep.witness.m == 3);
}

TEST_CASE("non-closed groups are not representable") {
  const auto result = min_codomain(alternating_group(3), 2);
  REQUIRE(std::holds_alternative<NotRepresentable>(result));
  CHECK(std::get<NotRepresentable>(result).closure == symmetric_group(3));
  const auto s3 = min_codomain(symmetric_group(3), 2);
  REQUIRE(std::holds_alternative<Representation>(s3));
  CHECK(std::get<Representation>(s3).m == 1);
}

TEST_CASE("coloring budget") {
  Budgets tight;
  tight.coloring_budget = 5;
  CHECK_THROWS_AS(min_codomain(get_group("V_4"), 2, tight), BudgetExceeded);
}
