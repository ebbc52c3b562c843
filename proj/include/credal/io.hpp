#pragma once

#include <json.hpp>
#include <string>

#include "credal/axioms.hpp"
#include "credal/idm.hpp"
#include "credal/lift.hpp"
#include "credal/measures.hpp"
#include "credal/packing.hpp"
#include "credal/polytope.hpp"
#include "credal/volume.hpp"

namespace credal {

using Json = nlohmann::json;

/// Parses the credal-set interchange format
/// {"d": <int>, "vertices": [[p1, ..., pd], ...]} and validates every
/// vertex as a probability vector.
CredalPolytope credal_set_from_json(const Json& j);
CredalPolytope load_credal_set(const std::string& path);

/// Serializes with canonical vertex order and 17 significant digits per
/// coordinate, so a read-write cycle is lossless.
std::string credal_set_to_json(const CredalPolytope& poly);
void save_credal_set(const std::string& path, const CredalPolytope& poly);

/// Grouping format: {"d1": <int>, "d2": <int>,
///                   "assign": [[i1, i2], ...]} (one pair per joint label).
Grouping grouping_from_json(const Json& j);
Grouping load_grouping(const std::string& path);

Json to_json(const VolumeResult& r);
Json to_json(const AxiomReport& r);
Json to_json(const SubadditivityReport& r);
Json to_json(const Theorem1Report& r);
Json to_json(const CarlPajorReport& r);
Json to_json(const PackingResult& r);
Json to_json(const LiftResult& r);

}  // namespace credal
