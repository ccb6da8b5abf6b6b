#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "galois/enumerate.hpp"
#include "galois/perm_group.hpp"

using namespace galois;

namespace {

// Every nontrivial partition of the points preserved by all generators.
bool has_block_system_brute_force(const PermGroup& g) {
  const int n = g.degree();
  std::vector<int> block(n, 0);
  bool found = false;
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (found) return;
    if (i == n) {
      if (used == 1 || used == n) return;
      for (const auto& s : g.generators())
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if ((block[x] == block[y]) != (block[s(x)] == block[s(y)])) return;
      found = true;
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return found;
}

}  // namespace

TEST_CASE("S_3 from two generators, closed multiplication table") {
  const auto s3 = generate_group(3, std::vector<std::string>{"(1 2)", "(1 2 3)"});
  REQUIRE(s3.order() == 6);
  for (const auto& a : s3.elements())
    for (const auto& b : s3.elements()) CHECK(s3.contains(a * b));
  CHECK(s3 == symmetric_group(3));
  CHECK(generate_group(3, std::vector<Permutation>{}).order() == 1);
}

TEST_CASE("symmetric and alternating groups") {
  const std::uint64_t fact[] = {1, 1, 2, 6, 24, 120, 720, 5040};
  for (int n = 1; n <= 7; ++n) {
    CHECK(symmetric_group(n).order() == fact[n]);
    const auto a = alternating_group(n);
    CHECK(a.order() == std::max<std::uint64_t>(1, fact[n] / 2));
    for (const auto& p : a.elements()) CHECK(p.sign() == 1);
  }
  CHECK(symmetric_group(5, {1, 3}).order() == 2);
  const auto keys = all_permutation_keys(4);
  CHECK(keys.size() == 24);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("generation budget") {
  CHECK_THROWS_AS(generate_group(6, std::vector<Permutation>{parse_perm("(1 2 3 4 5 6)", 6), parse_perm("(1 2)", 6)}, {}, 100),
                  BudgetExceeded);
}

TEST_CASE("direct product") {
  const auto b = symmetric_group(5, {0, 1, 2});
  const auto d = symmetric_group(5, {3, 4});
  const auto p = direct_product(b, d);
  CHECK(p.order() == 12);
  CHECK(p.ground_set() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(direct_product(b, symmetric_group(5, {2, 3})), InvalidArgument);
}

TEST_CASE("index-2 subdirect product of S_{1,2,3} and S_{4,5}") {
  const auto g = index2_subdirect(symmetric_group(5, {0, 1, 2}), symmetric_group(5, {3, 4}),
                                  PermGroup::trivial(5, {3, 4}));
  const auto expected = generate_group(
      5, std::vector<std::string>{"(1 2 3)", "(1 3 2)", "(1 2)(4 5)", "(1 3)(4 5)", "(2 3)(4 5)"});
  CHECK(g.order() == 6);
  CHECK(g == expected);
}

TEST_CASE("order-18 index-2 subdirect agrees with pair matching") {
  const auto b = symmetric_group(6, {0, 1, 2});
  const auto l = symmetric_group(6, {3, 4, 5});
  const auto l0 = alternating_group(6, {3, 4, 5});
  const auto g = index2_subdirect(b, l, l0);
  std::vector<PermKey> oracle;
  for (const auto& x : b.elements())
    for (const auto& y : l.elements())
      if (x.sign() == y.sign()) oracle.push_back((x * y).key());
  std::sort(oracle.begin(), oracle.end());
  CHECK(g.order() == 18);
  CHECK(std::equal(oracle.begin(), oracle.end(), g.element_keys().begin(), g.element_keys().end()));

  SubdirectSpec spec;
  spec.left = b;
  spec.right = l;
  spec.quotient_size = 2;
  spec.left_classes = index2_labels(b, alternating_group(6, {0, 1, 2}));
  spec.right_classes = index2_labels(l, l0);
  CHECK(subdirect_from_homs(spec) == g);
  spec.right_classes[1] ^= 1;  // no longer a homomorphism
  CHECK_THROWS_AS(subdirect_from_homs(spec), InvalidArgument);
}

TEST_CASE("orbits and primitivity") {
  const auto c4 = generate_group(4, std::vector<std::string>{"(1 2 3 4)"});
  CHECK(orbits_on_points(c4).size() == 1);
  CHECK(is_transitive(c4));
  CHECK_FALSE(is_primitive(c4));  // blocks {1,3},{2,4}
  CHECK(is_primitive(symmetric_group(4)));
  CHECK(is_primitive(alternating_group(4)));
  const auto split = generate_group(5, std::vector<std::string>{"(1 2)", "(3 4 5)"});
  CHECK(orbits_on_points(split) == std::vector<std::vector<int>>{{0, 1}, {2, 3, 4}});
  CHECK_THROWS_AS(is_primitive(split), InvalidArgument);
  const auto fixed = generate_group(4, std::vector<std::string>{"(1 2)"});
  CHECK(orbits_on_points(fixed) == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
}

TEST_CASE("primitivity against brute-force block search on S_4 and S_5") {
  for (int n : {4, 5})
    for (const auto& g : all_subgroup_list(n)) {
      if (!is_transitive(g)) continue;
      CHECK(is_primitive(g) == !has_block_system_brute_force(g));
    }
}

TEST_CASE("restriction, relabeling, embedding, conjugation") {
  const auto g = generate_group(6, std::vector<std::string>{"(2 4 6)", "(1 3)"});
  const auto r = restrict_to(g, {1, 3, 5});
  CHECK(r.order() == 3);
  CHECK(r.ground_set() == std::vector<int>{1, 3, 5});
  const auto local = relabel_to_ground(r);
  CHECK(local.degree() == 3);
  CHECK(local == alternating_group(3));
  CHECK_THROWS_AS(restrict_to(g, {1, 2}), InvalidArgument);
  const auto e = embed(alternating_group(3), 5);
  CHECK(e.degree() == 5);
  CHECK(e.order() == 3);
  const auto s = parse_perm("(1 4)", 4);
  const auto c4 = generate_group(4, std::vector<std::string>{"(1 2 3 4)"});
  const auto conj = conjugate(c4, s);
  Permutation w;
  CHECK(are_conjugate(c4, conj, &w));
  CHECK(conjugate(c4, w) == conj);
  CHECK_FALSE(are_conjugate(c4, generate_group(4, std::vector<std::string>{"(1 2)(3 4)", "(1 3)(2 4)"})));
}

TEST_CASE("group file round trip and errors") {
  std::istringstream in("# comment\ndegree: 5\n(1 2 3)   # trailing\n\n(4 5)\n");
  const auto g = parse_group_file(in);
  CHECK(g.degree() == 5);
  CHECK(g.order() == 6);
  std::istringstream back(format_group_file(g, "round trip"));
  CHECK(parse_group_file(back) == g);

  auto line_of = [](const char* text) {
    std::istringstream s(text);
    try {
      parse_group_file(s);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::size_t{0};
  };
  CHECK(line_of("degree: 3\n(1 2)\n(1 5)\n") == 3);
  CHECK(line_of("(1 2)\n") == 1);
  CHECK(line_of("degree: x\n") == 1);
}

TEST_CASE("greedy generators span the group") {
  const auto s4 = symmetric_group(4);
  const auto gens = greedy_generators(4, {}, s4.element_keys());
  CHECK(gens.size() <= 3);
  CHECK(generate_group(4, gens) == s4);
}
