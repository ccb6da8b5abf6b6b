#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "galois/error.hpp"
#include "galois/perm_group.hpp"

namespace galois {

/// A named permutation group with the facts it must satisfy.
struct CatalogEntry {
  std::string name;
  int degree = 0;
  std::vector<Permutation> generators;
  std::uint64_t expected_order = 0;
  bool primitive = false;
  std::vector<std::string> aliases;
};

/// The fixed catalog (degrees 3..10), built from the generator constructions.
/// Entries are validated on first use.
const std::vector<CatalogEntry>& catalog_entries();

/// Throws ValidationError naming the entry when the generators do not produce
/// the expected order or the primitivity flag is wrong.
PermGroup validate_entry(const CatalogEntry& entry);

/// Validates every entry; returns the number checked.
std::size_t validate_catalog();

/// Resolve a group name. Besides the fixed entries this understands C_n, D_n,
/// A_n, S_n, V_4, products "X×Y" and index-2 subdirect products "X×_sd Y"
/// (factors placed on consecutive points). ASCII spellings are accepted:
/// "x", "x_sd", "wr", "wr_sd", "cap", "Gamma".
PermGroup get_group(const std::string& name);

/// Canonical spelling of a name (unicode operators, no redundant spaces).
std::string canonical_name(const std::string& name);

/// Catalog entries of the given degree flagged primitive, in catalog order.
std::vector<const CatalogEntry*> primitive_entries(int degree);

/// Structured-text form: blocks of "name:", "aliases:", "degree:", "order:",
/// "primitive:" followed by generator lines, separated by blank lines.
std::string format_catalog(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> parse_catalog(std::istream& in);
/// The catalog text shipped with the library.
const std::string& shipped_catalog_text();

struct SeressReport {
  int n = 0;
  std::vector<std::vector<std::string>> computed_classes;  // every class, catalog order
  std::vector<std::vector<std::string>> expected_classes;  // nontrivial classes present in the catalog
  bool agree = false;
};

/// Orbit-equivalence classes at k = 2 of the primitive catalog groups of
/// degree n, compared with the published classification.
SeressReport seress_report(int n, const Budgets& budgets = {});

struct Closed3Row {
  std::string name;
  std::uint64_t order = 0;
  bool closed = false;
  bool expected_closed = false;
};

/// is_closed(G, 3) for each primitive catalog group of degree n; every group
/// except A_n is expected closed.
std::vector<Closed3Row> primitive_3closed_report(int n, const Budgets& budgets = {});

}  // namespace galois
