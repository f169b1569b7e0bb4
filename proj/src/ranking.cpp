#include "kinmetrics/ranking.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "kinmetrics/csv.hpp"

namespace kinmetrics {

std::set<std::string> eligible_sds(const DatasetBundle& bundle,
                                   const std::map<std::string, ScoreCard>& scorecards) {
    std::map<std::string, std::pair<int, int>> counts;  // sds -> (publishing, total)
    for (const Researcher& r : bundle.researchers) {
        auto it = scorecards.find(r.researcher_id);
        if (it == scorecards.end()) continue;
        auto& [publishing, total] = counts[r.sds_code];
        ++total;
        if (it->second.has_publications) ++publishing;
    }
    std::set<std::string> eligible;
    for (const auto& [sds, pair] : counts) {
        const auto& [publishing, total] = pair;
        if (static_cast<double>(publishing) >=
            bundle.config.sds_publishing_share_threshold * total)
            eligible.insert(sds);
    }
    return eligible;
}

std::set<std::string> eligible_researchers(const DatasetBundle& bundle,
                                           const std::map<std::string, ScoreCard>& scorecards,
                                           const std::set<std::string>& eligible_sds_codes) {
    std::set<std::string> out;
    for (const Researcher& r : bundle.researchers) {
        auto it = scorecards.find(r.researcher_id);
        if (it == scorecards.end()) continue;
        if (it->second.t_years < bundle.config.min_faculty_years) continue;
        if (eligible_sds_codes.count(r.sds_code) == 0) continue;
        out.insert(r.researcher_id);
    }
    return out;
}

std::map<std::string, double> percentile_ranks(
    const std::vector<std::pair<std::string, double>>& cohort_scores) {
    const size_t n = cohort_scores.size();
    if (n == 0) throw std::invalid_argument("percentile_ranks: empty cohort");
    std::map<std::string, double> out;
    if (n == 1) {
        out[cohort_scores.front().first] = 50.0;
        return out;
    }
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return cohort_scores[a].second < cohort_scores[b].second;
    });
    // Midranks: ties share the average of their 1-based rank positions, so
    // percentile = 100 * (midrank - 1) / (n - 1).
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n &&
               cohort_scores[order[j + 1]].second == cohort_scores[order[i]].second)
            ++j;
        double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        double percentile = 100.0 * (midrank - 1.0) / static_cast<double>(n - 1);
        for (size_t k = i; k <= j; ++k) out[cohort_scores[order[k]].first] = percentile;
        i = j + 1;
    }
    return out;
}

TierFlags classify_tiers(double percentile, const ObservationConfig& config) {
    TierFlags flags;
    flags.above_median = percentile > 50.0;
    flags.top20 = percentile >= 100.0 * (1.0 - config.top_tier_fraction);
    flags.top10 = percentile >= 100.0 * (1.0 - config.top_decile_fraction);
    flags.absolute_top = percentile >= 100.0 * (1.0 - config.absolute_top_fraction);
    flags.bottom20 = percentile < 100.0 * config.bottom_tier_fraction;
    flags.bottom10 = percentile < 100.0 * config.bottom_decile_fraction;
    return flags;
}

std::map<std::string, RankedScore> rank_all(const DatasetBundle& bundle,
                                            const std::map<std::string, ScoreCard>& scorecards) {
    std::set<std::string> sds = eligible_sds(bundle, scorecards);
    std::set<std::string> eligible = eligible_researchers(bundle, scorecards, sds);

    struct CohortKey {
        std::string sds;
        Rank rank;
        auto operator<=>(const CohortKey&) const = default;
    };
    std::map<CohortKey, std::vector<std::pair<std::string, double>>> cohorts;
    std::unordered_map<std::string, const Researcher*> by_id;
    for (const Researcher& r : bundle.researchers) by_id.emplace(r.researcher_id, &r);

    for (const std::string& id : eligible) {
        const Researcher& r = *by_id.at(id);
        Rank rank = rank_at_or_first(r, bundle.config.window_end);
        cohorts[CohortKey{r.sds_code, rank}].emplace_back(id, scorecards.at(id).productivity);
    }

    std::map<std::string, RankedScore> out;
    for (const auto& [key, scores] : cohorts) {
        auto percentiles = percentile_ranks(scores);
        for (const auto& [id, p] : scores) {
            RankedScore rs;
            rs.researcher_id = id;
            rs.sds_code = key.sds;
            rs.rank = key.rank;
            rs.productivity = p;
            rs.percentile = percentiles.at(id);
            rs.tiers = classify_tiers(rs.percentile, bundle.config);
            out.emplace(id, std::move(rs));
        }
    }
    return out;
}

void write_rankings(const std::map<std::string, RankedScore>& rankings,
                    const std::filesystem::path& path) {
    std::string out =
        "researcher_id,sds_code,rank,P,percentile,above_median,top20,top10,absolute_top,"
        "bottom20,bottom10\n";
    auto flag = [](bool b) { return b ? "1" : "0"; };
    for (const auto& [id, rs] : rankings) {
        out += csv_join({csv_quote(id), csv_quote(rs.sds_code), rank_token(rs.rank),
                         format_double(rs.productivity), format_double(rs.percentile),
                         flag(rs.tiers.above_median), flag(rs.tiers.top20), flag(rs.tiers.top10),
                         flag(rs.tiers.absolute_top), flag(rs.tiers.bottom20),
                         flag(rs.tiers.bottom10)});
    }
    write_text_file(path.string(), out);
}

}  // namespace kinmetrics
