#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weylflow/grading.hpp"
#include "weylflow/suites.hpp"
#include "weylflow/zhu.hpp"

namespace weylflow {

nlohmann::json state_to_json(const State& s);
State state_from_json(const nlohmann::json& j);

nlohmann::json region_to_json(const GaussRat& mu, const RegionClass& region);
nlohmann::json suite_to_json(const SuiteReport& report);

/// The zhu command's JSON payload:
/// {mu, degCap, pairBudget, reportCap, dimUpperBound, v0Dim, cQuotientDim,
///  reprBasis, starTable, checks, skippedGenerators, maxTruncationIndex}.
nlohmann::json zhu_report_json(const ZhuContext& ctx, const ZhuQuotient& quotient,
                               const Rat& report_cap, const std::vector<ZhuCheck>& checks);

struct GridPoint {
    GaussRat mu;
    RegionClass region;
};

/// Header reMu,imMu,tag,subcase followed by one row per point.
std::string classification_csv(const std::vector<GridPoint>& points);

/// Header reMu,imMu,centralCharge.
std::string central_charge_csv(const std::vector<GaussRat>& mus);

/// Deterministic SVG of the mu-plane over [re_lo, re_hi] x [im_lo, im_hi]:
/// the exterior, the strip 0 <= Re <= 1 and the closed diamond, plus the
/// sampled grid points colored by their computed class.
std::string region_map_svg(const Rat& re_lo, const Rat& re_hi, const Rat& im_lo,
                           const Rat& im_hi, const std::vector<GridPoint>& points);

} // namespace weylflow
