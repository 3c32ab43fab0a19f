#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ybx/affine.hpp"
#include "ybx/constructions.hpp"
#include "ybx/finite_group.hpp"
#include "ybx/presentation.hpp"
#include "ybx/solution.hpp"
#include "ybx/symmetric_engine.hpp"

namespace ybx {

using Json = nlohmann::ordered_json;

/// Parse or read errors surface as Error(malformed).
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
/// Compact single-line form; the byte form used for hashing and output.
std::string dump(const Json& j);

/// The "type" member, or "" when absent.
std::string json_type(const Json& j);

Json to_json(const FiniteSolution& s);
FiniteSolution solution_from_json(const Json& j);

Json to_json(const CycleSet& c);
CycleSet cycle_set_from_json(const Json& j);

Json to_json(const CycleAction& a);
CycleAction cycle_action_from_json(const Json& j);

/// Relators use the 1-indexed signed letter encoding.
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json to_json(const AffineAction& r);
AffineAction affine_from_json(const Json& j);

Json to_json(const CompatiblePair& p, const FiniteGroup& g);
CompatiblePair pair_from_json(const Json& j);

Json to_json(const LatticeElement& e);
LatticeElement lattice_element_from_json(const Json& j);

Json to_json(const AbelianInvariants& a);
Json to_json(const CheckResult& c);
Json to_json(const SolutionReport& r);

std::vector<std::vector<int>> int_rows(const Json& j, const char* what);
std::vector<int> int_list(const Json& j, const char* what);
std::vector<Permutation> permutation_rows(const Json& j, const char* what);

}  // namespace ybx
