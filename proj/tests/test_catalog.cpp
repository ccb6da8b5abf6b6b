#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "galois/catalog.hpp"
#include "galois/closure.hpp"

using namespace galois;

TEST_CASE("every catalog entry validates") {
  CHECK(validate_catalog() == catalog_entries().size());
  for (const auto& e : catalog_entries()) {
    const auto g = get_group(e.name);
    CHECK(g.order() == e.expected_order);
    CHECK(g.degree() == e.degree);
  }
}

TEST_CASE("named groups") {
  const auto agl = get_group("AGL(1,5)");
  CHECK(agl.order() == 20);
  CHECK(is_primitive(agl));
  const auto pgl = get_group("PGL(2,5)");
  CHECK(pgl.order() == 120);
  CHECK(pgl.degree() == 6);
  CHECK(is_primitive(pgl));
  CHECK(get_group("S(cube)").order() == 48);
  CHECK(get_group("R(cube)").order() == 24);
  CHECK(get_group("ASL(3,2)").order() == 1344);
  CHECK(get_group("PΓL(2,8)").order() == 1512);
  CHECK(get_group("PGammaL(2,8)") == get_group("PΓL(2,8)"));
  CHECK(get_group("D_10") == get_group("D_5"));
  CHECK(get_group("C_3") == get_group("A_3"));
  CHECK(get_group("S_3 wr S_2") == get_group("S_3≀S_2"));
  CHECK(get_group("(S_3 wr S_2) cap A_6").order() == 36);
  CHECK(get_group("C_6").order() == 6);
  CHECK(get_group("D_6").order() == 12);
}

TEST_CASE("products and subdirect products by name") {
  const auto p = get_group("S_3×S_2");
  CHECK(p.degree() == 5);
  CHECK(p.order() == 12);
  CHECK(get_group("S_3 x S_2") == p);
  CHECK(get_group("S_3xS_2") == p);
  const auto sd = get_group("S_3 x_sd S_2");
  CHECK(sd.order() == 6);
  CHECK(sd == get_group("S_3×_sd S_2"));
  CHECK(get_group("D_4×_sd S_2").order() == 8);
  CHECK(get_group("C_4×_sd S_2").order() == 4);
  CHECK(get_group("S_3×S_2×S_2").degree() == 7);
  CHECK_THROWS_AS(get_group("A_3×_sd S_2"), UnknownName);
}

TEST_CASE("unknown names") {
  CHECK_THROWS_AS(get_group("M_12"), UnknownName);
  CHECK_THROWS_AS(get_group("S_x"), UnknownName);
  CHECK_THROWS_AS(get_group("S_40"), UnknownName);
  CHECK(canonical_name(" S_3 x_sd S_2 ") == "S_3×_sd S_2");
}

TEST_CASE("shipped catalog file matches the constructions") {
  CHECK(shipped_catalog_text() == format_catalog(catalog_entries()));
  std::istringstream in(shipped_catalog_text());
  const auto parsed = parse_catalog(in);
  REQUIRE(parsed.size() == catalog_entries().size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].name == catalog_entries()[i].name);
    CHECK(parsed[i].generators == catalog_entries()[i].generators);
    CHECK(parsed[i].aliases == catalog_entries()[i].aliases);
    CHECK(validate_entry(parsed[i]).order() == parsed[i].expected_order);
  }
}

TEST_CASE("a wrong generator table is rejected with the entry name") {
  CatalogEntry bad = catalog_entries().front();
  bad.expected_order += 1;
  try {
    validate_entry(bad);
    FAIL("no error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find(bad.name) != std::string::npos);
  }
  CatalogEntry flag = catalog_entries().front();
  flag.primitive = !flag.primitive;
  CHECK_THROWS_AS(validate_entry(flag), ValidationError);
}

TEST_CASE("results do not depend on point labels") {
  std::mt19937 rng(2024);
  for (const auto& e : catalog_entries()) {
    if (e.degree > 7) continue;
    const auto g = get_group(e.name);
    std::vector<int> img(e.degree);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const auto s = Permutation::from_images(img);
    const auto h = conjugate(g, s);
    CHECK(h.order() == g.order());
    if (is_transitive(g)) CHECK(is_primitive(h) == is_primitive(g));
    CHECK(orbit_partition(h, 2).orbit_count() == orbit_partition(g, 2).orbit_count());
    CHECK(closure(h, 2) == conjugate(closure(g, 2), s));
  }
}

TEST_CASE("orbit-equivalence classes at small degree") {
  for (int n : {3, 4, 5, 6, 7}) {
    const auto r = seress_report(n);
    CHECK(r.agree);
  }
  const auto five = seress_report(5);
  CHECK(five.expected_classes.size() == 2);
}

TEST_CASE("primitive groups of degree 5 over 3") {
  for (const auto& row : primitive_3closed_report(5)) CHECK(row.closed == row.expected_closed);
}
