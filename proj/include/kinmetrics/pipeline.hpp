#pragma once
// Orchestration of the full analysis chain over one bundle:
// baselines -> scores -> eligibility/ranking -> kinship -> reports.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kinmetrics/baseline.hpp"
#include "kinmetrics/cohort.hpp"
#include "kinmetrics/ingest.hpp"
#include "kinmetrics/kinship.hpp"
#include "kinmetrics/ranking.hpp"
#include "kinmetrics/scoring.hpp"

namespace kinmetrics {

struct AnalysisResult {
    CitationBaseline baseline;
    std::map<std::string, ScoreCard> scorecards;
    std::set<std::string> eligible_sds_codes;
    std::map<std::string, RankedScore> ranked;
    std::set<std::string> children_candidates;
    std::set<std::string> parent_candidates;
    std::vector<KinshipLink> links;
    std::vector<KinshipPair> pairs;
    ScoringStats scoring_stats;
    int dual_roles = 0;
};

AnalysisResult run_analysis(const DatasetBundle& bundle);

// Report for one dimension with pipeline counters appended to the metadata.
CohortReport analysis_report(const DatasetBundle& bundle, const AnalysisResult& analysis,
                             ReportDimension dimension);

}  // namespace kinmetrics
