#include "kinmetrics/pipeline.hpp"

namespace kinmetrics {

AnalysisResult run_analysis(const DatasetBundle& bundle) {
    AnalysisResult out;
    out.baseline = compute_baselines(bundle.publications);
    out.scorecards = score_all(bundle, out.baseline, &out.scoring_stats);
    out.eligible_sds_codes = eligible_sds(bundle, out.scorecards);
    out.ranked = rank_all(bundle, out.scorecards);
    out.children_candidates = candidate_children(bundle);
    out.parent_candidates = candidate_parents(bundle);
    out.links = detect_links(out.children_candidates, out.parent_candidates, bundle);
    out.pairs = resolve_pairs(out.links, bundle);
    out.dual_roles = dual_role_count(out.links, out.children_candidates, out.parent_candidates);
    return out;
}

CohortReport analysis_report(const DatasetBundle& bundle, const AnalysisResult& analysis,
                             ReportDimension dimension) {
    CohortReport report =
        build_report(bundle, analysis.pairs, analysis.ranked, analysis.scorecards, dimension);
    report.metadata.emplace_back("skipped_publications",
                                 std::to_string(analysis.scoring_stats.skipped_publications));
    report.metadata.emplace_back(
        "weight_renormalized_publications",
        std::to_string(analysis.scoring_stats.renormalized_publications));
    report.metadata.emplace_back("dual_role_researchers", std::to_string(analysis.dual_roles));
    report.metadata.emplace_back("eligible_researchers", std::to_string(analysis.ranked.size()));
    report.metadata.emplace_back("resolved_pairs", std::to_string(analysis.pairs.size()));
    return report;
}

}  // namespace kinmetrics
