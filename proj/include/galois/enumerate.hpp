#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galois/error.hpp"
#include "galois/perm_group.hpp"

namespace galois {

inline constexpr int kMaxEnumerationDegree = 6;

struct SubgroupClass {
  PermGroup representative;  // least sorted element list in the class
  std::uint64_t class_size = 0;
  std::uint64_t order = 0;
};

struct SubgroupCatalog {
  int n = 0;
  /// Sorted by order, then by representative element list.
  std::vector<SubgroupClass> classes;
  std::uint64_t total_subgroups = 0;
};

enum class ExtensionOrder { Forward, Reverse };

/// Every subgroup of S_n as a sorted element-key list, found by joining known
/// subgroups with cyclic subgroups until nothing new appears. Sorted.
std::vector<std::vector<PermKey>> subgroup_element_sets(int n, ExtensionOrder order = ExtensionOrder::Forward);

/// Every subgroup of S_n as a group.
std::vector<PermGroup> all_subgroup_list(int n, ExtensionOrder order = ExtensionOrder::Forward);

/// Subgroups of S_n up to conjugacy; n must be at most 6.
SubgroupCatalog all_subgroups(int n, ExtensionOrder order = ExtensionOrder::Forward);

struct Table1Row {
  int n = 0;  // number of moved points
  int k = 0;  // largest k over which the group is not closed
  std::string group;    // empty when no name matched
  std::string closure;  // closure over k
  PermGroup group_rep;
  PermGroup closure_group;
};

struct ExpectedTable1Row {
  int n = 0;
  int k = 0;
  std::string group;
  std::string closure;
};

/// Rows of the embedded expected table.
std::vector<ExpectedTable1Row> expected_table1();

/// Groups of degree at most 6 without fixed points that are not closed over
/// 2, with the largest non-closed k and the closure there. Rows are ordered
/// like the expected table; unmatched rows come last.
std::vector<Table1Row> table1_report(const Budgets& budgets = {});

struct Table1Comparison {
  std::size_t matched = 0;
  std::vector<std::string> problems;  // one line per mismatch, missing or extra row
  bool ok() const { return problems.empty(); }
};

Table1Comparison compare_table1(const std::vector<Table1Row>& rows);

/// Aligned plain-text table with the columns n, k, G, closure.
std::string format_table1(const std::vector<Table1Row>& rows);

/// Histogram: number of distinct groups in the closure chain -> number of
/// conjugacy classes with that chain length.
std::map<std::size_t, std::uint64_t> chain_length_census(int n, const Budgets& budgets = {});

/// Name of G from the table vocabulary (first conjugate match), or "".
std::string name_by_conjugacy(const PermGroup& g);

}  // namespace galois
