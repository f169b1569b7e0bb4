#include "kinmetrics/cohort.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "kinmetrics/csv.hpp"

namespace kinmetrics {

const char* report_dimension_token(ReportDimension d) {
    switch (d) {
        case ReportDimension::Overall: return "overall";
        case ReportDimension::PerUda: return "per_uda";
        case ReportDimension::PerArea: return "per_area";
        case ReportDimension::Advancement: return "advancement";
        case ReportDimension::Parents: return "parents";
        case ReportDimension::Pairs: return "pairs";
    }
    return "?";
}

std::optional<ReportDimension> parse_report_dimension(std::string_view token) {
    if (token == "overall") return ReportDimension::Overall;
    if (token == "per_uda" || token == "uda") return ReportDimension::PerUda;
    if (token == "per_area" || token == "area") return ReportDimension::PerArea;
    if (token == "advancement") return ReportDimension::Advancement;
    if (token == "parents") return ReportDimension::Parents;
    if (token == "pairs") return ReportDimension::Pairs;
    return std::nullopt;
}

namespace {

// Continued fraction for the incomplete beta, modified Lentz iteration.
double betacf(double a, double b, double x) {
    constexpr double eps = 1e-15;
    constexpr double tiny = 1e-300;
    constexpr int max_iter = 500;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("regularized_incomplete_beta: a, b must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                      b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

namespace {

struct SampleMoments {
    size_t n;
    double mean;
    double variance;  // unbiased
};

SampleMoments moments(std::span<const double> xs) {
    SampleMoments m{xs.size(), 0.0, 0.0};
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(m.n);
    for (double x : xs) m.variance += (x - m.mean) * (x - m.mean);
    if (m.n > 1) m.variance /= static_cast<double>(m.n - 1);
    return m;
}

}  // namespace

TTestResult students_t_test(std::span<const double> sample_a, std::span<const double> sample_b,
                            bool welch) {
    if (sample_a.size() < 2 || sample_b.size() < 2)
        throw std::invalid_argument("students_t_test: both samples need at least two elements");
    SampleMoments a = moments(sample_a);
    SampleMoments b = moments(sample_b);
    double na = static_cast<double>(a.n), nb = static_cast<double>(b.n);

    TTestResult result;
    double diff = a.mean - b.mean;
    double se;
    if (welch) {
        double va = a.variance / na, vb = b.variance / nb;
        se = std::sqrt(va + vb);
        if (se > 0.0)
            result.degrees_of_freedom =
                (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
        else
            result.degrees_of_freedom = na + nb - 2.0;
    } else {
        result.degrees_of_freedom = na + nb - 2.0;
        double pooled = ((na - 1.0) * a.variance + (nb - 1.0) * b.variance) /
                        result.degrees_of_freedom;
        se = std::sqrt(pooled * (1.0 / na + 1.0 / nb));
    }

    if (se == 0.0) {
        if (diff == 0.0) {
            // Both samples constant and equal: 0/0.
            result.t_statistic = 0.0;
            result.p_two_tailed = 1.0;
            result.degenerate = true;
            return result;
        }
        result.t_statistic = diff > 0 ? std::numeric_limits<double>::infinity()
                                      : -std::numeric_limits<double>::infinity();
        result.p_two_tailed = 0.0;
        return result;
    }

    result.t_statistic = diff / se;
    double df = result.degrees_of_freedom;
    double x = df / (df + result.t_statistic * result.t_statistic);
    result.p_two_tailed = regularized_incomplete_beta(df / 2.0, 0.5, x);
    result.p_two_tailed = std::clamp(result.p_two_tailed, 0.0, 1.0);
    return result;
}

std::set<std::string> seniority_matched_controls(const std::set<std::string>& children,
                                                 const DatasetBundle& bundle) {
    std::set<std::string> out;
    for (const Researcher& r : bundle.researchers) {
        if (children.count(r.researcher_id)) continue;
        if (cohort_entry_year(r, bundle.config)) out.insert(r.researcher_id);
    }
    return out;
}

GroupStats group_stats(const std::string& label, const std::vector<std::string>& ids,
                       const std::map<std::string, RankedScore>& ranked,
                       const std::map<std::string, ScoreCard>& scorecards) {
    GroupStats g;
    g.label = label;
    g.n_observations = static_cast<int>(ids.size());
    if (ids.empty()) return g;
    double sum_percentile = 0.0;
    int no_pubs = 0, no_cites = 0, above_median = 0, top20 = 0, top10 = 0, absolute_top = 0,
        bottom10 = 0, bottom20 = 0;
    for (const std::string& id : ids) {
        const RankedScore& rs = ranked.at(id);
        const ScoreCard& card = scorecards.at(id);
        sum_percentile += rs.percentile;
        if (!card.has_publications) ++no_pubs;
        if (!card.has_citations) ++no_cites;
        if (rs.tiers.above_median) ++above_median;
        if (rs.tiers.top20) ++top20;
        if (rs.tiers.top10) ++top10;
        if (rs.tiers.absolute_top) ++absolute_top;
        if (rs.tiers.bottom10) ++bottom10;
        if (rs.tiers.bottom20) ++bottom20;
    }
    double n = static_cast<double>(ids.size());
    g.avg_percentile = sum_percentile / n;
    g.pct_no_publications = 100.0 * no_pubs / n;
    g.pct_no_citations = 100.0 * no_cites / n;
    g.pct_above_median = 100.0 * above_median / n;
    g.pct_top20 = 100.0 * top20 / n;
    g.pct_top10 = 100.0 * top10 / n;
    g.pct_absolute_top = 100.0 * absolute_top / n;
    g.pct_bottom10 = 100.0 * bottom10 / n;
    g.pct_bottom20 = 100.0 * bottom20 / n;
    return g;
}

namespace {

std::vector<double> group_percentiles(const std::vector<std::string>& ids,
                                      const std::map<std::string, RankedScore>& ranked) {
    std::vector<double> out;
    out.reserve(ids.size());
    for (const std::string& id : ids) out.push_back(ranked.at(id).percentile);
    return out;
}

// Adds the test when both groups are large enough for it.
void maybe_add_test(CohortReport& report, const std::string& label_a,
                    const std::vector<std::string>& ids_a, const std::string& label_b,
                    const std::vector<std::string>& ids_b,
                    const std::map<std::string, RankedScore>& ranked, bool welch) {
    if (ids_a.size() < 2 || ids_b.size() < 2) return;
    TTestResult t = students_t_test(group_percentiles(ids_a, ranked),
                                    group_percentiles(ids_b, ranked), welch);
    report.tests.push_back(ReportTest{label_a, label_b, t});
}

std::vector<std::string> ranked_only(const std::set<std::string>& ids,
                                     const std::map<std::string, RankedScore>& ranked) {
    std::vector<std::string> out;
    for (const std::string& id : ids)
        if (ranked.count(id)) out.push_back(id);
    return out;
}

std::set<std::string> pair_children(const std::vector<KinshipPair>& pairs) {
    std::set<std::string> out;
    for (const KinshipPair& p : pairs) out.insert(p.child_id);
    return out;
}

std::vector<std::pair<std::string, std::string>> config_echo(const ObservationConfig& config) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream lines(render_config_text(config));
    std::string line;
    while (std::getline(lines, line)) {
        size_t eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        std::string value = line.substr(eq + 3);
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        out.emplace_back("config." + line.substr(0, eq), value);
    }
    out.emplace_back("config.national_surname_exclusions",
                     std::to_string(config.national_surname_exclusions.size()));
    size_t regional = 0;
    for (const auto& [_, s] : config.regional_surname_exclusions) regional += s.size();
    out.emplace_back("config.regional_surname_exclusions", std::to_string(regional));
    out.emplace_back("t_test_input", "percentile_ranks");
    out.emplace_back("t_test_variant", config.use_welch ? "welch" : "pooled");
    return out;
}

std::string format_pct(std::optional<double> v) {
    return v ? format_double(*v) : std::string("null");
}

struct AdvancementSplit {
    std::vector<std::string> advanced;
    std::vector<std::string> not_advanced;
};

AdvancementSplit split_by_advancement(const std::vector<std::string>& ids,
                                      const DatasetBundle& bundle,
                                      const std::unordered_map<std::string, const Researcher*>& by_id) {
    AdvancementSplit split;
    const int horizon = bundle.config.advancement_horizon_or_default();
    for (const std::string& id : ids) {
        const Researcher& r = *by_id.at(id);
        auto entry = cohort_entry_year(r, bundle.config);
        bool advanced = false;
        if (entry) {
            Rank at_entry = rank_at_or_first(r, *entry);
            for (const RankEvent& e : r.rank_events) {
                if (e.year > *entry && e.year <= horizon && e.rank > at_entry) {
                    advanced = true;
                    break;
                }
            }
        }
        (advanced ? split.advanced : split.not_advanced).push_back(id);
    }
    return split;
}

}  // namespace

CohortReport career_advancement_analysis(const DatasetBundle& bundle,
                                         const std::vector<KinshipPair>& pairs,
                                         const std::map<std::string, RankedScore>& ranked,
                                         const std::map<std::string, ScoreCard>& scorecards) {
    std::unordered_map<std::string, const Researcher*> by_id;
    for (const Researcher& r : bundle.researchers) by_id.emplace(r.researcher_id, &r);

    std::set<std::string> children_all = pair_children(pairs);
    std::vector<std::string> children = ranked_only(children_all, ranked);
    std::vector<std::string> controls =
        ranked_only(seniority_matched_controls(children_all, bundle), ranked);

    AdvancementSplit child_split = split_by_advancement(children, bundle, by_id);
    AdvancementSplit control_split = split_by_advancement(controls, bundle, by_id);

    CohortReport report;
    report.dimension = report_dimension_token(ReportDimension::Advancement);
    GroupStats child_not =
        group_stats("children_not_advanced", child_split.not_advanced, ranked, scorecards);
    GroupStats child_adv = group_stats("children_advanced", child_split.advanced, ranked, scorecards);
    GroupStats control_not =
        group_stats("non_children_not_advanced", control_split.not_advanced, ranked, scorecards);
    GroupStats control_adv =
        group_stats("non_children_advanced", control_split.advanced, ranked, scorecards);
    report.groups = {child_not, child_adv, control_not, control_adv};

    bool welch = bundle.config.use_welch;
    maybe_add_test(report, "children_advanced", child_split.advanced, "non_children_not_advanced",
                   control_split.not_advanced, ranked, welch);
    maybe_add_test(report, "children_not_advanced", child_split.not_advanced,
                   "non_children_advanced", control_split.advanced, ranked, welch);

    report.metadata = config_echo(bundle.config);
    report.metadata.emplace_back("potential_nepotism_rate_children",
                                 format_pct(child_adv.pct_bottom20));
    report.metadata.emplace_back("potential_nepotism_rate_non_children",
                                 format_pct(control_adv.pct_bottom20));
    return report;
}

CohortReport build_report(const DatasetBundle& bundle, const std::vector<KinshipPair>& pairs,
                          const std::map<std::string, RankedScore>& ranked,
                          const std::map<std::string, ScoreCard>& scorecards,
                          ReportDimension dimension) {
    if (dimension == ReportDimension::Advancement)
        return career_advancement_analysis(bundle, pairs, ranked, scorecards);

    std::unordered_map<std::string, const Researcher*> by_id;
    for (const Researcher& r : bundle.researchers) by_id.emplace(r.researcher_id, &r);

    std::set<std::string> children_all = pair_children(pairs);
    std::vector<std::string> children = ranked_only(children_all, ranked);
    std::set<std::string> controls_all = seniority_matched_controls(children_all, bundle);
    std::vector<std::string> controls = ranked_only(controls_all, ranked);
    const bool welch = bundle.config.use_welch;

    CohortReport report;
    report.dimension = report_dimension_token(dimension);
    report.metadata = config_echo(bundle.config);

    switch (dimension) {
        case ReportDimension::Overall: {
            std::vector<std::string> all_non_children;
            for (const auto& [id, _] : ranked)
                if (children_all.count(id) == 0) all_non_children.push_back(id);
            report.groups.push_back(group_stats("children", children, ranked, scorecards));
            report.groups.push_back(
                group_stats("non_children_same_seniority", controls, ranked, scorecards));
            report.groups.push_back(
                group_stats("all_non_children", all_non_children, ranked, scorecards));
            maybe_add_test(report, "children", children, "non_children_same_seniority", controls,
                           ranked, welch);
            maybe_add_test(report, "children", children, "all_non_children", all_non_children,
                           ranked, welch);
            break;
        }
        case ReportDimension::PerUda: {
            std::map<std::string, std::vector<std::string>> children_by_uda, controls_by_uda;
            for (const std::string& id : children)
                children_by_uda[bundle.taxonomy.uda_of(by_id.at(id)->sds_code)].push_back(id);
            for (const std::string& id : controls)
                controls_by_uda[bundle.taxonomy.uda_of(by_id.at(id)->sds_code)].push_back(id);
            std::vector<std::string> other_children, other_controls;
            std::set<std::string> udas;
            for (const auto& [uda, _] : children_by_uda) udas.insert(uda);
            for (const auto& [uda, _] : controls_by_uda) udas.insert(uda);
            for (const std::string& uda : udas) {
                auto& uda_children = children_by_uda[uda];
                auto& uda_controls = controls_by_uda[uda];
                if (static_cast<int>(uda_children.size()) < bundle.config.min_uda_children) {
                    other_children.insert(other_children.end(), uda_children.begin(),
                                          uda_children.end());
                    other_controls.insert(other_controls.end(), uda_controls.begin(),
                                          uda_controls.end());
                    continue;
                }
                report.groups.push_back(
                    group_stats(uda + "/children", uda_children, ranked, scorecards));
                report.groups.push_back(
                    group_stats(uda + "/non_children", uda_controls, ranked, scorecards));
                maybe_add_test(report, uda + "/children", uda_children, uda + "/non_children",
                               uda_controls, ranked, welch);
            }
            if (!other_children.empty() || !other_controls.empty()) {
                report.groups.push_back(
                    group_stats("Other/children", other_children, ranked, scorecards));
                report.groups.push_back(
                    group_stats("Other/non_children", other_controls, ranked, scorecards));
                maybe_add_test(report, "Other/children", other_children, "Other/non_children",
                               other_controls, ranked, welch);
            }
            report.groups.push_back(group_stats("Total/children", children, ranked, scorecards));
            report.groups.push_back(
                group_stats("Total/non_children", controls, ranked, scorecards));
            maybe_add_test(report, "Total/children", children, "Total/non_children", controls,
                           ranked, welch);
            break;
        }
        case ReportDimension::PerArea: {
            std::map<Area, std::vector<std::string>> children_by_area, controls_by_area;
            for (const std::string& id : children)
                children_by_area[bundle.config.region_area_map.at(by_id.at(id)->region)]
                    .push_back(id);
            for (const std::string& id : controls)
                controls_by_area[bundle.config.region_area_map.at(by_id.at(id)->region)]
                    .push_back(id);
            for (Area area : {Area::North, Area::Centre, Area::South}) {
                auto c_it = children_by_area.find(area);
                auto n_it = controls_by_area.find(area);
                if (c_it == children_by_area.end() && n_it == controls_by_area.end()) continue;
                std::vector<std::string> area_children =
                    c_it == children_by_area.end() ? std::vector<std::string>{} : c_it->second;
                std::vector<std::string> area_controls =
                    n_it == controls_by_area.end() ? std::vector<std::string>{} : n_it->second;
                std::string prefix = area_token(area);
                report.groups.push_back(
                    group_stats(prefix + "/children", area_children, ranked, scorecards));
                report.groups.push_back(
                    group_stats(prefix + "/non_children", area_controls, ranked, scorecards));
                maybe_add_test(report, prefix + "/children", area_children,
                               prefix + "/non_children", area_controls, ranked, welch);
            }
            break;
        }
        case ReportDimension::Parents: {
            std::set<std::string> parents_all;
            for (const KinshipPair& p : pairs)
                parents_all.insert(p.parent_ids.begin(), p.parent_ids.end());
            std::vector<std::string> parents = ranked_only(parents_all, ranked);
            std::set<std::pair<std::string, Rank>> parent_cohorts;
            for (const std::string& id : parents) {
                const RankedScore& rs = ranked.at(id);
                parent_cohorts.emplace(rs.sds_code, rs.rank);
            }
            std::vector<std::string> non_parents;
            for (const auto& [id, rs] : ranked) {
                if (parents_all.count(id)) continue;
                if (parent_cohorts.count({rs.sds_code, rs.rank})) non_parents.push_back(id);
            }
            report.groups.push_back(group_stats("parents", parents, ranked, scorecards));
            report.groups.push_back(group_stats("non_parents", non_parents, ranked, scorecards));
            maybe_add_test(report, "parents", parents, "non_parents", non_parents, ranked, welch);
            break;
        }
        case ReportDimension::Pairs: {
            // One comparison row per pair with both sides ranked. A pair with
            // several ranked parents is represented by its most senior one
            // (earliest Full year, then id); a parent serving several children
            // is counted once per pair.
            auto full_year = [&](const std::string& id) {
                const Researcher& r = *by_id.at(id);
                for (const RankEvent& e : r.rank_events)
                    if (e.rank == Rank::Full) return e.year;
                return std::numeric_limits<int>::max();
            };
            std::vector<std::string> side_children, side_parents;
            for (const KinshipPair& p : pairs) {
                if (ranked.count(p.child_id) == 0) continue;
                std::string best;
                for (const std::string& parent_id : p.parent_ids) {
                    if (ranked.count(parent_id) == 0) continue;
                    if (best.empty() || std::make_pair(full_year(parent_id), parent_id) <
                                            std::make_pair(full_year(best), best))
                        best = parent_id;
                }
                if (best.empty()) continue;
                side_children.push_back(p.child_id);
                side_parents.push_back(best);
            }
            report.groups.push_back(group_stats("children", side_children, ranked, scorecards));
            report.groups.push_back(group_stats("parents", side_parents, ranked, scorecards));
            maybe_add_test(report, "children", side_children, "parents", side_parents, ranked,
                           welch);
            report.metadata.emplace_back("ranked_pairs", std::to_string(side_children.size()));
            break;
        }
        case ReportDimension::Advancement:
            break;  // handled above
    }
    return report;
}

}  // namespace kinmetrics
