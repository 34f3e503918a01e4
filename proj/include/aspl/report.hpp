#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aspl/metrics.hpp"
#include "aspl/miner.hpp"
#include "aspl/relations.hpp"

namespace aspl {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// Payload renderers. Rationals appear as "p/q" strings; each payload carries a
// "decimal" object with display-only approximations.
Json to_json(const CentralityProfile& p);
Json to_json(const Subject& s);
Json to_json(const RelationResult& r);
Json to_json(const std::vector<RelationResult>& results);
Json to_json(const Witness& w);
Json to_json(const MiningReport& report, bool include_timing);

Subject subject_from_json(const Json& j);
Witness witness_from_json(const Json& j);

// {schema_version, command, payload}
Json document(const std::vector<std::string>& command, Json payload);

std::string to_text(const CentralityProfile& p);
std::string to_text(const std::vector<RelationResult>& results);
std::string to_text(const MiningReport& report, bool include_timing);

}  // namespace aspl
