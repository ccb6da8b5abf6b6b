#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "galois/error.hpp"
#include "galois/orbit.hpp"
#include "galois/perm_group.hpp"

namespace galois {

/// A total function {1..k}^n -> {1..m}, stored by tuple index.
struct FunctionTable {
  int n = 0;
  int k = 0;
  int m = 0;
  std::vector<int> values;

  int operator()(std::uint64_t index) const { return values[index]; }
  TupleSpace space() const { return TupleSpace(n, k); }
};

/// Header "n k m", then lines "a_1 ... a_n -> v". A line "default: v" allows
/// tuples to be omitted. '#' starts a comment.
FunctionTable parse_function_table(std::istream& in);
FunctionTable read_function_table(const std::string& path);
std::string format_function_table(const FunctionTable& f);

/// {s in S_n : f(a^s) = f(a) for all a}.
PermGroup invariance_group(const FunctionTable& f, const Budgets& budgets = {});

/// Each orbit of G on k^n gets its own value, numbered by canonical
/// representative order.
FunctionTable orbit_coloring(const PermGroup& g, int k, const Budgets& budgets = {});

struct Representation {
  int m = 0;
  /// Color (0-based) of each orbit, orbits in representative order.
  std::vector<int> orbit_colors;
  /// Colorings tried for each m = 1..result (index m-1).
  std::vector<std::uint64_t> colorings_examined;
  FunctionTable witness;
};

struct NotRepresentable {
  PermGroup closure;
};

struct MinCodomainOptions {
  int max_orbits = 16;
};

/// Least m such that G is the invariance group of some f: k^n -> m, found
/// by exhaustive search over set partitions of the orbits.
std::variant<Representation, NotRepresentable> min_codomain(const PermGroup& g, int k,
                                                            const Budgets& budgets = {},
                                                            MinCodomainOptions options = {});

}  // namespace galois
