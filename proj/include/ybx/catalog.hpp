#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ybx/enumerate.hpp"
#include "ybx/json_io.hpp"
#include "ybx/presentation.hpp"
#include "ybx/solution.hpp"

namespace ybx {

struct CatalogEntry {
  std::string id;
  FiniteSolution canonical;
  bool involutive = false;
  bool symmetric = false;
  AbelianInvariants structure_group;  // G_X
  AbelianInvariants derived_group;    // A_X

  int n() const noexcept { return canonical.size(); }
};

/// FNV-1a (64 bit) of the compact JSON of the canonical solution, as 16 hex digits.
std::string solution_id(const FiniteSolution& canonical);
CatalogEntry make_entry(const FiniteSolution& s);

/// One entry per isomorphism class, sorted by (n, id). Identical for every
/// `jobs`.
std::vector<CatalogEntry> classify(int n, SolutionFilter filter = SolutionFilter::all, int jobs = 1);
/// Union keyed by id; existing entries are kept unchanged. Throws
/// postcondition if two different solutions share an id.
std::vector<CatalogEntry> merge_catalogs(const std::vector<CatalogEntry>& existing, const std::vector<CatalogEntry>& added);

Json to_json(const CatalogEntry& e);
CatalogEntry catalog_entry_from_json(const Json& j);
/// One entry per line so catalogs diff cleanly.
std::string format_catalog(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> catalog_from_json(const Json& j);

}  // namespace ybx
