#pragma once

#include <nlohmann/json.hpp>

#include "rsk/imbalance.hpp"
#include "rsk/pair.hpp"
#include "rsk/partition.hpp"
#include "rsk/permutation.hpp"
#include "rsk/tableau.hpp"
#include "rsk/verify.hpp"

// JSON wire formats:
//   Tableau      {"rows": [[1,3,6,7],[2,4,8],[5],[9]]}
//   TableauPair  {"P": {...}, "Q": {...}}
//   Permutation  [2,9,1,5,6,4,8,3,7]
//   Partition    [4,3,1,1]
// Malformed input surfaces as ParseError.

namespace rsk {

void to_json(nlohmann::json& j, const Permutation& pi);
void from_json(const nlohmann::json& j, Permutation& pi);

void to_json(nlohmann::json& j, const Partition& shape);
void from_json(const nlohmann::json& j, Partition& shape);

void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);

void to_json(nlohmann::json& j, const TableauPair& pair);
void from_json(const nlohmann::json& j, TableauPair& pair);

void to_json(nlohmann::json& j, const ImbalanceRecord& record);

void to_json(nlohmann::json& j, const Violation& v);
void to_json(nlohmann::json& j, const VerificationReport& report);

}  // namespace rsk
