#pragma once
// Comparison groups, summary statistics, Student's t-tests, the career
// advancement analysis, and the report tables.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kinmetrics/ingest.hpp"
#include "kinmetrics/kinship.hpp"
#include "kinmetrics/model.hpp"
#include "kinmetrics/ranking.hpp"
#include "kinmetrics/scoring.hpp"

namespace kinmetrics {

struct GroupStats {
    std::string label;
    int n_observations = 0;
    // All nullopt when the group is empty; rendered as blank cells.
    std::optional<double> avg_percentile;
    std::optional<double> pct_no_publications;
    std::optional<double> pct_no_citations;
    std::optional<double> pct_above_median;
    std::optional<double> pct_top20;
    std::optional<double> pct_top10;
    std::optional<double> pct_absolute_top;
    std::optional<double> pct_bottom10;
    std::optional<double> pct_bottom20;
    bool operator==(const GroupStats&) const = default;
};

struct TTestResult {
    double t_statistic = 0.0;
    double degrees_of_freedom = 0.0;  // integer-valued for the pooled test
    double p_two_tailed = 1.0;
    bool degenerate = false;  // both samples constant and equal
    bool operator==(const TTestResult&) const = default;
};

struct ReportTest {
    std::string group_a;
    std::string group_b;
    TTestResult result;
    bool operator==(const ReportTest&) const = default;
};

struct CohortReport {
    std::string dimension;  // overall | per_uda | per_area | advancement | parents | pairs
    std::vector<GroupStats> groups;
    std::vector<ReportTest> tests;
    std::vector<std::pair<std::string, std::string>> metadata;  // config echo, counters
    bool operator==(const CohortReport&) const = default;
};

enum class ReportDimension { Overall, PerUda, PerArea, Advancement, Parents, Pairs };

const char* report_dimension_token(ReportDimension d);
std::optional<ReportDimension> parse_report_dimension(std::string_view token);

// Regularized incomplete beta I_x(a, b), absolute accuracy <= 1e-8 over the
// parameter ranges the t-test uses.
double regularized_incomplete_beta(double a, double b, double x);

// Two-sample Student's t-test with pooled variance (df = n_a + n_b - 2), or
// Welch's variant when `welch`. Two-tailed p comes from the regularized
// incomplete beta. Both samples constant and equal yields t = 0, p = 1 with
// the degenerate flag set. Throws std::invalid_argument when either sample
// has fewer than two elements.
TTestResult students_t_test(std::span<const double> sample_a, std::span<const double> sample_b,
                            bool welch = false);

// Non-children that satisfy the same entry-window criterion as candidate
// children: the primary comparison group.
std::set<std::string> seniority_matched_controls(const std::set<std::string>& children,
                                                 const DatasetBundle& bundle);

// Averages and tier shares over the group. `ids` may contain repeats (the
// pair table counts a parent once per pair). Percentiles are the global
// SDS x rank percentiles, never re-ranked inside the group. Every id must be
// present in `ranked` and `scorecards`.
GroupStats group_stats(const std::string& label, const std::vector<std::string>& ids,
                       const std::map<std::string, RankedScore>& ranked,
                       const std::map<std::string, ScoreCard>& scorecards);

// Children and seniority-matched controls split into advanced (a rank event
// to a strictly higher rank after cohort entry, up to the advancement
// horizon) vs not. Emits the four groups with bottom-tier shares, the two
// cross t-tests, and the potential-nepotism rates (bottom-20% share of the
// advanced groups) in the metadata.
CohortReport career_advancement_analysis(const DatasetBundle& bundle,
                                         const std::vector<KinshipPair>& pairs,
                                         const std::map<std::string, RankedScore>& ranked,
                                         const std::map<std::string, ScoreCard>& scorecards);

// Assembles the table for one dimension:
//   Overall     children / seniority-matched controls / all non-children
//   PerUda      children vs controls per UDA, small UDAs pooled into "Other"
//   PerArea     children vs controls per geographic area
//   Advancement career_advancement_analysis
//   Parents     pair parents vs non-parents in the same rank cohorts
//   Pairs       children vs their linked parents, both sides ranked
CohortReport build_report(const DatasetBundle& bundle, const std::vector<KinshipPair>& pairs,
                          const std::map<std::string, RankedScore>& ranked,
                          const std::map<std::string, ScoreCard>& scorecards,
                          ReportDimension dimension);

}  // namespace kinmetrics
