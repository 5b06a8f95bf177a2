#pragma once

#include <string>

#include <json.hpp>

#include "seqlab/concat.hpp"
#include "seqlab/dynamics.hpp"

namespace seqlab {

// Key order is fixed so equal reports serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json to_json(const MapSpec& m);
MapSpec map_spec_from_json(const Json& j);

// {start, width, tail_len, cycle, steps, terminated_zero}
Json to_json(const OrbitReport& r);
OrbitReport orbit_report_from_json(const Json& j);

// {map:{kind,width,c}, domain:{lo,hi}, total, zero_count, classes:[...]}
Json to_json(const CensusReport& r);
CensusReport census_report_from_json(const Json& j);

// Hits keep their rank and a human-readable classification.
Json to_json(const ScanReport& r);

// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace seqlab
