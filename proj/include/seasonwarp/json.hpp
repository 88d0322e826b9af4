#pragma once

// JSON mapping of every report type. Keys are emitted in declaration order
// (nlohmann::ordered_json), so output is byte-stable; doubles are written with
// round-trip precision, so parse(emit(x)) == x.

#include <json.hpp>

#include "seasonwarp/adf.hpp"
#include "seasonwarp/cleaning.hpp"
#include "seasonwarp/dtw.hpp"
#include "seasonwarp/seasonal.hpp"
#include "seasonwarp/series.hpp"
#include "seasonwarp/stats.hpp"

namespace seasonwarp {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const WeekKey& w);
void from_json(const Json& j, WeekKey& w);
void to_json(Json& j, Variable v);
void from_json(const Json& j, Variable& v);
void to_json(Json& j, const OutlierWeek& o);
void from_json(const Json& j, OutlierWeek& o);
void to_json(Json& j, const CleaningReport& r);
void from_json(const Json& j, CleaningReport& r);
void to_json(Json& j, const AdfResult& r);
void from_json(const Json& j, AdfResult& r);
void to_json(Json& j, const SeasonalEntry& e);
void from_json(const Json& j, SeasonalEntry& e);
void to_json(Json& j, const SeasonalIndexTable& t);
void from_json(const Json& j, SeasonalIndexTable& t);

[[nodiscard]] Variable parse_variable(std::string_view name);

namespace stats {
void to_json(Json& j, const DescriptiveSummary& s);
void from_json(const Json& j, DescriptiveSummary& s);
}  // namespace stats

namespace dtw {
void to_json(Json& j, const DtwOptions& o);
void from_json(const Json& j, DtwOptions& o);
void to_json(Json& j, const PathStep& s);
void from_json(const Json& j, PathStep& s);
void to_json(Json& j, const DtwResult& r);
void from_json(const Json& j, DtwResult& r);
void to_json(Json& j, const YearPair& p);
void from_json(const Json& j, YearPair& p);
void to_json(Json& j, const RankedPair& r);
void from_json(const Json& j, RankedPair& r);
void to_json(Json& j, const PairRanking& r);
void from_json(const Json& j, PairRanking& r);
}  // namespace dtw

/// Two-space indented dump followed by a newline.
[[nodiscard]] std::string dump(const Json& j);

}  // namespace seasonwarp
