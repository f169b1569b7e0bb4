#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kinmetrics/csv.hpp"
#include "kinmetrics/pipeline.hpp"
#include "test_helpers.hpp"

using namespace kinmetrics;

namespace {

struct FixtureAnalysis {
    DatasetBundle bundle;
    AnalysisResult analysis;
    FixtureAnalysis()
        : bundle(load_bundle({kmtest::ok_fixture(), std::nullopt})),
          analysis(run_analysis(bundle)) {}
};

const FixtureAnalysis& fixture() {
    static FixtureAnalysis f;
    return f;
}

std::optional<GroupStats> find_group(const CohortReport& report, const std::string& label) {
    for (const GroupStats& g : report.groups)
        if (g.label == label) return g;
    return std::nullopt;
}

}  // namespace

TEST_CASE("seniority-matched controls share the entry criterion, minus the children") {
    const auto& f = fixture();
    std::set<std::string> children = {"R01", "R03"};
    auto controls = seniority_matched_controls(children, f.bundle);
    // entry events in 2001-2003 and not a child: R05, R07, R09, R11
    CHECK(controls == std::set<std::string>{"R05", "R07", "R09", "R11"});
    // researchers hired earlier with no window event stay out
    CHECK(controls.count("R12") == 0);
    // a child is never a control
    CHECK(controls.count("R01") == 0);
}

TEST_CASE("group stats over singletons and small groups") {
    const auto& f = fixture();
    GroupStats one = group_stats("solo", {"R07"}, f.analysis.ranked, f.analysis.scorecards);
    CHECK(one.n_observations == 1);
    CHECK(*one.avg_percentile == 100.0);
    CHECK(*one.pct_no_publications == 0.0);

    GroupStats two = group_stats("two", {"R01", "R12"}, f.analysis.ranked, f.analysis.scorecards);
    CHECK(two.n_observations == 2);
    CHECK(*two.avg_percentile == 25.0);        // {50, 0}
    CHECK(*two.pct_no_publications == 50.0);   // R12 unpublished

    GroupStats empty = group_stats("none", {}, f.analysis.ranked, f.analysis.scorecards);
    CHECK(empty.n_observations == 0);
    CHECK(!empty.avg_percentile.has_value());
    CHECK(!empty.pct_top20.has_value());
}

TEST_CASE("group stats match a brute-force recomputation") {
    const auto& f = fixture();
    std::vector<std::string> group = {"R02", "R04", "R05", "R06", "R07", "R08", "R09", "R11"};
    GroupStats stats = group_stats("g", group, f.analysis.ranked, f.analysis.scorecards);

    double sum = 0;
    int no_pub = 0, top20 = 0, above = 0, bottom20 = 0;
    for (const std::string& id : group) {
        const RankedScore& rs = f.analysis.ranked.at(id);
        sum += rs.percentile;
        if (!f.analysis.scorecards.at(id).has_publications) ++no_pub;
        if (rs.percentile >= 80.0) ++top20;
        if (rs.percentile > 50.0) ++above;
        if (rs.percentile < 20.0) ++bottom20;
    }
    double n = double(group.size());
    CHECK(*stats.avg_percentile == doctest::Approx(sum / n).epsilon(1e-12));
    CHECK(*stats.pct_no_publications == doctest::Approx(100.0 * no_pub / n).epsilon(1e-12));
    CHECK(*stats.pct_top20 == doctest::Approx(100.0 * top20 / n).epsilon(1e-12));
    CHECK(*stats.pct_above_median == doctest::Approx(100.0 * above / n).epsilon(1e-12));
    CHECK(*stats.pct_bottom20 == doctest::Approx(100.0 * bottom20 / n).epsilon(1e-12));
}

TEST_CASE("overall report has the three groups and two tests") {
    const auto& f = fixture();
    CohortReport report = analysis_report(f.bundle, f.analysis, ReportDimension::Overall);
    REQUIRE(report.groups.size() == 3);
    CHECK(report.groups[0].label == "children");
    CHECK(report.groups[1].label == "non_children_same_seniority");
    CHECK(report.groups[2].label == "all_non_children");
    REQUIRE(report.tests.size() == 2);

    CHECK(report.groups[0].n_observations == 2);
    CHECK(*report.groups[0].avg_percentile == 50.0);
    CHECK(report.groups[1].n_observations == 4);
    CHECK(*report.groups[1].avg_percentile == 62.5);
    CHECK(report.groups[2].n_observations == 10);
    CHECK(*report.groups[2].avg_percentile == 50.0);
    CHECK(*report.groups[2].pct_no_publications == 10.0);

    // children {50,50} vs controls {50,100,50,50}: pooled t = -2/3 on 4 df
    CHECK(report.tests[0].result.t_statistic == doctest::Approx(-2.0 / 3).epsilon(1e-12));
    CHECK(report.tests[0].result.degrees_of_freedom == 4.0);

    // metadata carries the config echo and the pipeline counters
    auto has_meta = [&](const std::string& key, const std::string& value) {
        return std::any_of(report.metadata.begin(), report.metadata.end(),
                           [&](const auto& kv) { return kv.first == key && kv.second == value; });
    };
    CHECK(has_meta("config.window_start", "2004"));
    CHECK(has_meta("skipped_publications", "4"));
    CHECK(has_meta("resolved_pairs", "2"));
}

TEST_CASE("per-UDA report pools small disciplines and totals") {
    const auto& f = fixture();
    CohortReport report = analysis_report(f.bundle, f.analysis, ReportDimension::PerUda);
    // min_uda_children = 1 in the fixture config: BIO and MATH keep their rows
    CHECK(find_group(report, "BIO/children").has_value());
    CHECK(find_group(report, "MATH/children").has_value());
    CHECK(find_group(report, "Total/children").has_value());
    CHECK(find_group(report, "Total/non_children").has_value());
    CHECK(find_group(report, "BIO/children")->n_observations == 1);
    // controls with no children in their UDA fall into Other
    auto other = find_group(report, "Other/non_children");
    REQUIRE(other.has_value());
    CHECK(other->n_observations == 3);  // R05 (PHYS), R07 (MED), R09 (INDENG)
    CHECK(find_group(report, "Total/children")->n_observations == 2);
}

TEST_CASE("per-area report covers exactly the areas present") {
    const auto& f = fixture();
    CohortReport report = analysis_report(f.bundle, f.analysis, ReportDimension::PerArea);
    CHECK(find_group(report, "North/children").has_value());
    CHECK(find_group(report, "North/non_children")->n_observations == 3);  // R05 R09 R11
    CHECK(find_group(report, "Centre/children")->n_observations == 1);     // R03
    CHECK(find_group(report, "South/children")->n_observations == 1);      // R01
    CHECK(find_group(report, "South/non_children")->n_observations == 1);  // R07
    // labels follow the North / Centre / South order, children first
    REQUIRE(report.groups.size() == 6);
    CHECK(report.groups[0].label == "North/children");
    CHECK(report.groups[5].label == "South/non_children");
}

TEST_CASE("advancement analysis splits the cohorts consistently") {
    const auto& f = fixture();
    CohortReport report = analysis_report(f.bundle, f.analysis, ReportDimension::Advancement);
    REQUIRE(report.groups.size() == 4);
    auto child_not = find_group(report, "children_not_advanced");
    auto child_adv = find_group(report, "children_advanced");
    auto nc_not = find_group(report, "non_children_not_advanced");
    auto nc_adv = find_group(report, "non_children_advanced");
    // partition consistency
    CHECK(child_not->n_observations + child_adv->n_observations == 2);
    CHECK(nc_not->n_observations + nc_adv->n_observations == 4);
    // R03 advanced (associate 2007), R11 advanced (full 2006)
    CHECK(child_adv->n_observations == 1);
    CHECK(nc_adv->n_observations == 1);
    // the bottom-tier shares exist in this table
    CHECK(child_adv->pct_bottom20.has_value());
    CHECK(child_adv->pct_bottom10.has_value());
    auto has_meta = [&](const std::string& key) {
        return std::any_of(report.metadata.begin(), report.metadata.end(),
                           [&](const auto& kv) { return kv.first == key; });
    };
    CHECK(has_meta("potential_nepotism_rate_children"));
    CHECK(has_meta("potential_nepotism_rate_non_children"));
}

TEST_CASE("bottom-20 advanced children count as potential nepotism") {
    // synthetic ranked map: 10 advanced children, exactly one in the bottom 20%
    std::map<std::string, RankedScore> ranked;
    std::map<std::string, ScoreCard> cards;
    ObservationConfig config = kmtest::basic_config();
    std::vector<std::string> ids;
    for (int i = 0; i < 10; ++i) {
        std::string id = "A" + std::to_string(i);
        RankedScore rs;
        rs.researcher_id = id;
        rs.percentile = i == 0 ? 15.0 : 85.0;  // one in the bottom tier
        rs.tiers = classify_tiers(rs.percentile, config);
        ranked[id] = rs;
        ScoreCard card;
        card.researcher_id = id;
        card.has_publications = true;
        card.has_citations = true;
        cards[id] = card;
        ids.push_back(id);
    }
    GroupStats advanced = group_stats("children_advanced", ids, ranked, cards);
    CHECK(*advanced.pct_bottom20 == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("parents report compares pair parents against cohort peers") {
    const auto& f = fixture();
    CohortReport report = analysis_report(f.bundle, f.analysis, ReportDimension::Parents);
    auto parents = find_group(report, "parents");
    auto non_parents = find_group(report, "non_parents");
    REQUIRE(parents.has_value());
    REQUIRE(non_parents.has_value());
    CHECK(parents->n_observations == 2);       // R02, R04
    CHECK(non_parents->n_observations == 2);   // R06 (MAT/03 full), R08 (MED/04 full)
    CHECK(*parents->avg_percentile == 50.0);   // {100, 0}
    CHECK(*non_parents->avg_percentile == 50.0);
    REQUIRE(report.tests.size() == 1);
    CHECK(report.tests[0].result.t_statistic == doctest::Approx(0.0));
}

TEST_CASE("pairs report compares children with their linked parents") {
    const auto& f = fixture();
    CohortReport report = analysis_report(f.bundle, f.analysis, ReportDimension::Pairs);
    auto children = find_group(report, "children");
    auto parents = find_group(report, "parents");
    REQUIRE(children.has_value());
    REQUIRE(parents.has_value());
    CHECK(children->n_observations == 2);
    CHECK(parents->n_observations == 2);
    CHECK(*children->avg_percentile == 50.0);  // {50, 50}
    CHECK(*parents->avg_percentile == 50.0);   // {100, 0}
    REQUIRE(report.tests.size() == 1);
}

TEST_CASE("pairs report drops pairs whose members are unranked") {
    const auto& f = fixture();
    // forge a ranked map without R02: the VERDI pair loses its only parent
    auto ranked = f.analysis.ranked;
    ranked.erase("R02");
    CohortReport report =
        build_report(f.bundle, f.analysis.pairs, ranked, f.analysis.scorecards,
                     ReportDimension::Pairs);
    CHECK(find_group(report, "children")->n_observations == 1);
    CHECK(find_group(report, "parents")->n_observations == 1);
}

TEST_CASE("a shorter advancement horizon hides later promotions") {
    const auto& f = fixture();
    DatasetBundle bundle = f.bundle;
    bundle.config.advancement_horizon = 2006;  // R03 promoted 2007, R11 promoted 2006
    AnalysisResult analysis = run_analysis(bundle);
    CohortReport report = analysis_report(bundle, analysis, ReportDimension::Advancement);
    CHECK(find_group(report, "children_advanced")->n_observations == 0);
    CHECK(find_group(report, "children_not_advanced")->n_observations == 2);
    CHECK(find_group(report, "non_children_advanced")->n_observations == 1);
}

TEST_CASE("the welch flag changes the reported degrees of freedom") {
    const auto& f = fixture();
    DatasetBundle bundle = f.bundle;
    bundle.config.use_welch = true;
    CohortReport welch = build_report(bundle, f.analysis.pairs, f.analysis.ranked,
                                      f.analysis.scorecards, ReportDimension::Overall);
    CohortReport pooled = analysis_report(f.bundle, f.analysis, ReportDimension::Overall);
    REQUIRE(welch.tests.size() == 2);
    // pooled df is integral (4); Welch df is data-driven and differs here
    CHECK(pooled.tests[0].result.degrees_of_freedom == 4.0);
    CHECK(welch.tests[0].result.degrees_of_freedom != 4.0);
}

TEST_CASE("reports are deterministic byte for byte") {
    const auto& f = fixture();
    auto dir = kmtest::fresh_temp_dir("det_report");
    for (ReportDimension d : {ReportDimension::Overall, ReportDimension::Advancement}) {
        CohortReport report = analysis_report(f.bundle, f.analysis, d);
        write_report(report, dir / "a.csv", ReportFormat::Csv);
        write_report(report, dir / "b.csv", ReportFormat::Csv);
        CHECK(read_text_file((dir / "a.csv").string()) ==
              read_text_file((dir / "b.csv").string()));
    }
    AnalysisResult again = run_analysis(f.bundle);
    CohortReport r1 = analysis_report(f.bundle, f.analysis, ReportDimension::Overall);
    CohortReport r2 = analysis_report(f.bundle, again, ReportDimension::Overall);
    CHECK(r1 == r2);
}
