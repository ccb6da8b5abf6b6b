#include <doctest.h>

#include "galois/catalog.hpp"
#include "galois/classify.hpp"
#include "galois/enumerate.hpp"

using namespace galois;

TEST_CASE("theorem range") {
  CHECK(in_theorem_range(7, 5));
  CHECK_FALSE(in_theorem_range(5, 2));
  CHECK(in_theorem_range(3, 2));
  CHECK_FALSE(in_theorem_range(6, 4));
  CHECK(in_theorem_range(13, 10));
  CHECK(in_theorem_range(4, 4));
}

TEST_CASE("classifier on the alternating groups of degree 7") {
  const auto a7 = classify_main(alternating_group(7), 5);
  CHECK(a7.kind == FormKind::AlternatingTimesL);
  CHECK(a7.B.size() == 7);
  CHECK(a7.D.empty());
  REQUIRE(a7.predicted_closure.has_value());
  CHECK(*a7.predicted_closure == symmetric_group(7));

  const auto a6 = classify_main(embed(alternating_group(6), 7), 5);
  CHECK(a6.kind == FormKind::AlternatingTimesL);
  CHECK(a6.D == std::vector<int>{6});
  CHECK(a6.L->order() == 1);
}

TEST_CASE("classifier outside the range") {
  for (const auto& g : all_subgroup_list(5)) CHECK(classify_main(g, 2).kind == FormKind::OutOfTheoremRange);
}

TEST_CASE("verify_main examples") {
  const auto s7 = verify_main(symmetric_group(7), 5);
  CHECK(s7.applicable);
  CHECK(s7.agree);
  CHECK(s7.prediction.kind == FormKind::PredictedClosed);

  const auto sd = verify_main(get_group("S_5×_sd S_2"), 5);
  CHECK(sd.prediction.kind == FormKind::PredictedClosed);
  CHECK(sd.agree);

  const auto out = verify_main(alternating_group(5), 2);
  CHECK_FALSE(out.applicable);
}

TEST_CASE("subdirect branch of the decomposition") {
  // S_5 ×_sd S_2 on 7 points at d = 3: |D| = 2 < d, reported with the range
  // check disabled.
  const auto g = get_group("S_5×_sd S_2");
  const auto form = classify_main(g, 4, false);
  CHECK(form.kind == FormKind::ProperSubdirect);
  REQUIRE(form.L0.has_value());
  CHECK(form.L0->order() == 1);
  CHECK(form.L->order() == 2);
  CHECK(form.predicted_closure->order() == 240);

  const auto prod = classify_main(get_group("A_5×S_2"), 4, false);
  CHECK(prod.kind == FormKind::AlternatingTimesL);
  // A trivial L has no index-2 subgroup: only the alternating form appears.
  CHECK(classify_main(embed(symmetric_group(6), 7), 4, false).kind == FormKind::PredictedClosed);
}

TEST_CASE("classifier agrees with computation at k = n-1 for n <= 6") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& cls : all_subgroups(n).classes) {
      const auto v = verify_main(cls.representative, n - 1);
      REQUIRE(v.applicable);
      CHECK(v.agree);
      // Soundness: never a non-closed form for a closed group.
      if (v.computed_closure == cls.representative) CHECK_FALSE(v.prediction.non_closed());
    }
}

TEST_CASE("Wielandt closure examples") {
  CHECK(wielandt_closure(alternating_group(3), 1) == symmetric_group(3));
  const auto c4 = get_group("C_4");
  CHECK(wielandt_closure(c4, 2) == c4);
  for (int k = 1; k <= 3; ++k) CHECK(wielandt_closure(symmetric_group(5), k) == symmetric_group(5));
  CHECK(check_wielandt_containment(alternating_group(3), 1));
  CHECK(check_wielandt_containment(c4, 2));
}

TEST_CASE("Wielandt closures decrease with k on subgroups of S_4") {
  for (const auto& g : all_subgroup_list(4))
    for (int k = 1; k <= 3; ++k) {
      const auto wk = wielandt_closure(g, k);
      CHECK(g.is_subgroup_of(wk));
      CHECK(wielandt_closure(g, k + 1).is_subgroup_of(wk));
    }
}

TEST_CASE("degree-7 panel") {
  const auto panel = main_panel_degree7();
  CHECK(panel.size() == 10);
  for (const auto& p : panel) CHECK(p.group.degree() == 7);
}

// Unproved claim: Galois closed over 2 implies floor(n/2)-closed. Checked on
// every conjugacy class for n <= 5 only.
TEST_CASE("closed over 2 implies Wielandt floor(n/2)-closed, n <= 5") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& cls : all_subgroups(n).classes) {
      const auto& g = cls.representative;
      if (!is_closed(g, 2)) continue;
      CHECK_MESSAGE(wielandt_closure(g, n / 2) == g, "n=" << n << " order " << cls.order);
    }
}
