#include "galois/classify.hpp"

#include <algorithm>
#include <cmath>

#include "galois/catalog.hpp"
#include "galois/orbit.hpp"

namespace galois {

namespace {

std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

// Projection onto D of the elements acting evenly on B.
PermGroup even_part_projection(const PermGroup& g, const std::vector<int>& B, const std::vector<int>& D) {
  const int n = g.degree();
  std::vector<bool> in_b(n, false);
  for (int x : B) in_b[x] = true;
  std::vector<PermKey> keys;
  for (const Permutation& p : g.elements()) {
    std::vector<int> b_img(n), d_img(n);
    for (int i = 0; i < n; ++i) {
      b_img[i] = in_b[i] ? p(i) : i;
      d_img[i] = in_b[i] ? i : p(i);
    }
    if (Permutation::from_images(b_img).sign() == 1) keys.push_back(Permutation::from_images(d_img).key());
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  auto gens = greedy_generators(n, {}, keys);
  return PermGroup::from_elements(n, D, std::move(gens), std::move(keys));
}

}  // namespace

std::string to_string(FormKind kind) {
  switch (kind) {
    case FormKind::AlternatingTimesL: return "alternating_times_L";
    case FormKind::ProperSubdirect: return "proper_subdirect";
    case FormKind::PredictedClosed: return "predicted_closed";
    case FormKind::OutOfTheoremRange: return "out_of_theorem_range";
  }
  return "?";
}

bool in_theorem_range(int n, int k) {
  const double d = static_cast<double>(n) - k;
  return static_cast<double>(n) > std::max(std::pow(2.0, d), d * d + d);
}

NonClosedForm classify_main(const PermGroup& g, int k, bool enforce_range) {
  NonClosedForm form;
  form.n = g.degree();
  form.k = k;
  form.d = form.n - k;
  if (enforce_range && !in_theorem_range(form.n, k)) {
    form.kind = FormKind::OutOfTheoremRange;
    return form;
  }
  const int n = form.n;
  std::vector<std::vector<int>> candidates;
  for (auto& orbit : orbits_on_points(g))
    if (static_cast<int>(orbit.size()) > n - form.d) candidates.push_back(std::move(orbit));
  if (candidates.empty()) {
    form.kind = FormKind::PredictedClosed;
    return form;
  }
  if (candidates.size() > 1)
    form.diagnostics.push_back(std::to_string(candidates.size()) +
                               " orbits exceed n - d points; the largest was taken as B");
  form.B = *std::max_element(candidates.begin(), candidates.end(),
                             [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(form.B.begin(), form.B.end(), i)) form.D.push_back(i);

  const PermGroup pi1 = restrict_to(g, form.B);
  PermGroup l = restrict_to(g, form.D);
  const std::uint64_t sym_b = factorial(form.B.size());
  const bool alt = form.B.size() >= 2 && pi1.order() * 2 == sym_b;
  const bool sym = pi1.order() == sym_b;

  if (alt && g.order() * 2 == sym_b * l.order()) {
    form.kind = FormKind::AlternatingTimesL;
  } else if (sym && g.order() < sym_b * l.order()) {
    PermGroup l0 = even_part_projection(g, form.B, form.D);
    if (l0.order() * 2 == l.order() && g.order() * 2 == sym_b * l.order()) {
      form.kind = FormKind::ProperSubdirect;
      form.L0 = std::move(l0);
    } else {
      form.kind = FormKind::PredictedClosed;
      form.diagnostics.push_back("projection onto B is symmetric but G is not an index-2 subdirect product");
    }
  } else {
    form.kind = FormKind::PredictedClosed;
  }
  if (form.non_closed()) form.predicted_closure = direct_product(symmetric_group(n, form.B), l);
  form.L = std::move(l);
  return form;
}

MainVerification verify_main(const PermGroup& g, int k, const Budgets& budgets) {
  MainVerification v;
  v.prediction = classify_main(g, k);
  v.computed_closure = closure_pruned(g, k, budgets).closure;
  v.applicable = v.prediction.kind != FormKind::OutOfTheoremRange;
  if (!v.applicable) return v;
  if (v.prediction.non_closed())
    v.agree = v.computed_closure == *v.prediction.predicted_closure && !(v.computed_closure == g);
  else
    v.agree = v.computed_closure == g;
  return v;
}

std::vector<PanelGroup> main_panel_degree7() {
  std::vector<PanelGroup> panel;
  for (const char* name : {"A_7", "S_7", "C_7", "D_7", "S_3×S_4", "A_3×A_4", "S_5×_sd S_2", "F_21"})
    panel.push_back({name, get_group(name)});
  panel.insert(panel.begin() + 1, {"A_6 fixing 7", embed(get_group("A_6"), 7)});
  panel.push_back({"S_6 fixing 7", embed(get_group("S_6"), 7)});
  return panel;
}

PermGroup wielandt_closure(const PermGroup& g, int k, const Budgets& budgets) {
  const int n = g.degree();
  const OrbitPartition relations = kpow_orbit_partition(g, k, budgets.tuple_budget);
  // The closure preserves every point orbit, so it lies in the product of
  // the symmetric groups on them.
  std::vector<PermKey> candidates{identity_key(n)};
  for (const auto& orbit : orbits_on_points(g)) {
    if (orbit.size() < 2) continue;
    const PermGroup s = symmetric_group(n, orbit);
    std::uint64_t total = candidates.size() * s.order();
    if (total > budgets.candidate_budget) throw BudgetExceeded("candidate budget", total, budgets.candidate_budget);
    std::vector<PermKey> next;
    next.reserve(total);
    for (PermKey a : candidates)
      for (PermKey b : s.element_keys()) next.push_back(compose_keys(a, b, n));
    candidates = std::move(next);
  }
  std::sort(candidates.begin(), candidates.end());
  const auto order = relations.small_orbits_first();
  auto filtered = filter_left_cosets(
      g, candidates, [&](const Permutation& s) { return relations.preserved_by(s, order); }, budgets.workers);
  return group_from_elements(g, std::move(filtered.elements));
}

bool check_wielandt_containment(const PermGroup& g, int k, const Budgets& budgets) {
  return closure(g, k + 1, budgets).is_subgroup_of(wielandt_closure(g, k, budgets));
}

}  // namespace galois
