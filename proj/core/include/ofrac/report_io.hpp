#pragma once

#include <string>
#include <vector>

#include "ofrac/inequality.hpp"

namespace ofrac {

/// Deterministic JSON document: {meta: {version, seed}, reports: [...],
/// summary: {...}}. No timestamps; identical inputs serialize byte-identically.
std::string campaign_to_json(const CampaignResult& result,
                             std::uint64_t seed);

/// Parses the reports array back; inverse of campaign_to_json on the
/// report records.
std::vector<InequalityReport> reports_from_json(const std::string& text);

/// CSV with a fixed header; floats printed with 17 significant digits.
std::string campaign_to_csv(const CampaignResult& result);

} // namespace ofrac
