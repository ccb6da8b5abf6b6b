#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galois/closure.hpp"
#include "galois/error.hpp"
#include "galois/perm_group.hpp"

namespace galois {

enum class FormKind { AlternatingTimesL, ProperSubdirect, PredictedClosed, OutOfTheoremRange };

std::string to_string(FormKind kind);

/// Shape of G with respect to the structure theorem for d = n - k: a point
/// orbit B with |B| > n - d, its complement D, and the projections.
struct NonClosedForm {
  FormKind kind = FormKind::PredictedClosed;
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<int> B;  // 0-indexed, sorted
  std::vector<int> D;
  std::optional<PermGroup> L;   // projection onto D
  std::optional<PermGroup> L0;  // ProperSubdirect only
  /// S_B x L for the non-closed forms.
  std::optional<PermGroup> predicted_closure;
  std::vector<std::string> diagnostics;

  bool non_closed() const {
    return kind == FormKind::AlternatingTimesL || kind == FormKind::ProperSubdirect;
  }
};

/// True iff n > max(2^d, d^2 + d) with d = n - k.
bool in_theorem_range(int n, int k);

/// With `enforce_range` false the decomposition is reported even outside the
/// theorem's range (the prediction then carries no guarantee).
NonClosedForm classify_main(const PermGroup& g, int k, bool enforce_range = true);

struct MainVerification {
  NonClosedForm prediction;
  PermGroup computed_closure;
  bool applicable = false;  // false when out of the theorem's range
  bool agree = false;
};

/// Compares the classifier's prediction with closure_pruned.
MainVerification verify_main(const PermGroup& g, int k, const Budgets& budgets = {});

struct PanelGroup {
  std::string name;
  PermGroup group;
};

/// Spot-check panel on 7 points for k = 5: A_7, A_6 and S_6 fixing point 7,
/// S_7, C_7, D_7, S_3×S_4, A_3×A_4, S_5×_sd S_2, F_21.
std::vector<PanelGroup> main_panel_degree7();

/// Wielandt k-closure: permutations mapping every r in n^k into the orbit
/// of r under G (entrywise action).
PermGroup wielandt_closure(const PermGroup& g, int k, const Budgets& budgets = {});

/// closure(G, k+1) is a subgroup of wielandt_closure(G, k).
bool check_wielandt_containment(const PermGroup& g, int k, const Budgets& budgets = {});

}  // namespace galois
