#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "backlimit/backward.hpp"
#include "backlimit/birkhoff.hpp"
#include "backlimit/eps_set.hpp"
#include "backlimit/limit_sets.hpp"
#include "backlimit/pl_map.hpp"

namespace backlimit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Rationals are always serialized as canonical strings, never as numbers.
Json to_json(const Rat& r);
Json to_json(const std::vector<Rat>& rs);
Json to_json(const Interval& j);
Json to_json(const IntervalUnion& u);
Json to_json(const EpsSet& s);
Json to_json(const Branch& b);
Json to_json(const FixedPointSet& s);
Json to_json(const PeriodicCensus& c);
Json to_json(const ChainReport& r);
Json to_json(const KmsResult& r);
Json to_json(const RadiusResult& r);
Json to_json(const SubcoverCertificate& c);
Json to_json(const ExcursionReport& r);
Json to_json(const TheoremRecord& r);
Json to_json(const ScanParams& p);
Json to_json(const ExcursionParams& p);
Json to_json(const AggregateParams& p);

/// Report envelope with keys version, command, map_digest, params, result,
/// verdict, timing_ms (in that order). `map` may be null for map-less
/// commands.
Json make_report(const std::vector<std::string>& command, const PLMap* map, Json params, Json result,
                 const std::string& verdict, double timing_ms);

/// Copy of a report without its timing field, for byte comparisons.
Json without_timing(Json report);

}  // namespace backlimit
