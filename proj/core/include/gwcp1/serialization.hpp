//
// serialization.hpp -- canonical JSON form for MultiSeries.
//
// The canonical form is bit-exact across runs: variables in series order,
// terms sorted lexicographically by exponent vector, coefficients as reduced
// decimal num/den strings.  It is the cache equality format.
//
#pragma once

#include <json.hpp>

#include "gwcp1/multiseries.hpp"

namespace gwcp1 {

nlohmann::json to_json(const Truncation& t);
Truncation truncation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultiSeries& s);
MultiSeries multiseries_from_json(const nlohmann::json& j);

// Deterministic text rendering (nlohmann::json orders object keys).
std::string canonical_dump(const nlohmann::json& j);

// FNV-1a 64-bit, rendered as fixed-width hex; used for cache checksums.
std::string fnv1a_hex(const std::string& data);

} // namespace gwcp1
