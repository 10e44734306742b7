#pragma once

// JSON and CSV renderings of the library's results. Integers that fit in 64 bits are JSON
// numbers; larger ones are decimal strings.

#include <string>

#include <json.hpp>

#include "maxgenus/classifier.hpp"
#include "maxgenus/construction_catalog.hpp"
#include "maxgenus/extremal_bounds.hpp"

namespace maxgenus::io {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& z);
Json params_json(const bounds::ExtremalParams& p);
/// Every Delta h entry as an integer array.
Json profile_json(const bounds::DeltaHProfile& profile);
Json report_json(const classify::ClassificationReport& report);
Json recipe_json(const catalog::Recipe& recipe, const bounds::ExtremalParams& p);
Json discrepancy_json(const bounds::DiscrepancyReport& report);

Json verify_json(const catalog::VerifyReport& report);
/// Columns s,epsilon,m,d,k,v,scroll,genus_profile,genus_liaison,status.
std::string verify_csv(const catalog::VerifyReport& report);

/// One record per cell with the full parameters, both genus values and the status.
Json sweep_json(const catalog::VerifyReport& report);
/// Columns d,s,m,epsilon,w,v,k,delta,e,genus,case,residual_degree,status.
std::string sweep_csv(const catalog::VerifyReport& report);

}  // namespace maxgenus::io
