#pragma once
// Eligibility filters and percentile ranks within each SDS x academic-rank
// cohort, with tier classification.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kinmetrics/ingest.hpp"
#include "kinmetrics/model.hpp"
#include "kinmetrics/scoring.hpp"

namespace kinmetrics {

struct TierFlags {
    bool above_median = false;
    bool top20 = false;
    bool top10 = false;
    bool absolute_top = false;
    bool bottom20 = false;
    bool bottom10 = false;
    bool operator==(const TierFlags&) const = default;
};

struct RankedScore {
    std::string researcher_id;
    std::string sds_code;
    Rank rank = Rank::Assistant;  // rank held at window end
    double productivity = 0.0;
    double percentile = 0.0;  // 0..100, worst to best
    TierFlags tiers;
    bool operator==(const RankedScore&) const = default;
};

// SDSs where the share of scored researchers with at least one in-window
// publication reaches config.sds_publishing_share_threshold.
std::set<std::string> eligible_sds(const DatasetBundle& bundle,
                                   const std::map<std::string, ScoreCard>& scorecards);

// Researchers with t_years >= min_faculty_years whose SDS is eligible.
std::set<std::string> eligible_researchers(const DatasetBundle& bundle,
                                           const std::map<std::string, ScoreCard>& scorecards,
                                           const std::set<std::string>& eligible_sds_codes);

// Midrank percentiles over one cohort:
//   percentile_j = 100 * (#{P_k < P_j} + 0.5 * #{k != j : P_k = P_j}) / (n - 1)
// A singleton cohort gets 50 by convention. Throws on an empty cohort.
std::map<std::string, double> percentile_ranks(
    const std::vector<std::pair<std::string, double>>& cohort_scores);

TierFlags classify_tiers(double percentile, const ObservationConfig& config);

// Full ranking pass: eligibility, cohort split by (sds, rank at window end),
// percentiles, tiers. Exactly the eligible researchers appear in the result.
std::map<std::string, RankedScore> rank_all(const DatasetBundle& bundle,
                                            const std::map<std::string, ScoreCard>& scorecards);

// Dump: researcher_id,sds_code,rank,P,percentile + tier flag columns.
void write_rankings(const std::map<std::string, RankedScore>& rankings,
                    const std::filesystem::path& path);

}  // namespace kinmetrics
