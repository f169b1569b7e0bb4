#include <doctest.h>

#include <cmath>
#include <random>

#include "kinmetrics/scoring.hpp"
#include "test_helpers.hpp"

using namespace kinmetrics;
using kmtest::make_pub;
using kmtest::make_researcher;

namespace {

Publication pub_with_authors(int s, const std::string& first_univ,
                             const std::string& last_univ) {
    return make_pub("PW", 2005, 10, {"C"}, s, 0, "", "", first_univ, last_univ);
}

std::vector<double> all_weights(const Publication& p, bool life) {
    std::vector<double> w;
    for (size_t pos = 1; pos <= p.authorships.size(); ++pos)
        w.push_back(author_weight(p, int(pos), life));
    return w;
}

}  // namespace

TEST_CASE("intramural positional weights: 40/40 plus shared 20") {
    Publication p = pub_with_authors(5, "U1", "U1");
    CHECK(author_weight(p, 1, true) == doctest::Approx(0.40).epsilon(1e-12));
    CHECK(author_weight(p, 5, true) == doctest::Approx(0.40).epsilon(1e-12));
    CHECK(author_weight(p, 3, true) == doctest::Approx(0.20 / 3).epsilon(1e-12));
}

TEST_CASE("extramural positional weights for six authors") {
    Publication p = pub_with_authors(6, "U1", "U2");
    std::vector<double> expected = {0.30, 0.15, 0.05, 0.05, 0.15, 0.30};
    std::vector<double> got = all_weights(p, true);
    REQUIRE(got.size() == expected.size());
    for (size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("two authors split fractionally in every field") {
    Publication p = pub_with_authors(2, "U1", "U1");
    CHECK(author_weight(p, 1, true) == 0.5);
    CHECK(author_weight(p, 1, false) == 0.5);
}

TEST_CASE("three-author intramural publication needs no renormalization") {
    Publication p = pub_with_authors(3, "U1", "U1");
    std::vector<double> got = all_weights(p, true);
    CHECK(got[0] == doctest::Approx(0.40).epsilon(1e-12));
    CHECK(got[1] == doctest::Approx(0.20).epsilon(1e-12));
    CHECK(got[2] == doctest::Approx(0.40).epsilon(1e-12));
    CHECK(!weight_renormalization_applies(p, true));
}

TEST_CASE("three- and four-author extramural publications renormalize") {
    Publication p3 = pub_with_authors(3, "U1", "U2");
    std::vector<double> got3 = all_weights(p3, true);
    // raw (0.30, 0.15+0.15, 0.30) scaled by 1/0.9
    for (double w : got3) CHECK(w == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(weight_renormalization_applies(p3, true));

    Publication p4 = pub_with_authors(4, "U1", "U2");
    std::vector<double> got4 = all_weights(p4, true);
    CHECK(got4[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(got4[1] == doctest::Approx(1.0 / 6).epsilon(1e-12));
    CHECK(got4[2] == doctest::Approx(1.0 / 6).epsilon(1e-12));
    CHECK(got4[3] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(weight_renormalization_applies(p4, true));
}

TEST_CASE("non-life fields use fractional counting at any size") {
    Publication p = pub_with_authors(7, "U1", "U2");
    for (int pos = 1; pos <= 7; ++pos)
        CHECK(author_weight(p, pos, false) == doctest::Approx(1.0 / 7).epsilon(1e-12));
}

TEST_CASE("single author takes full credit") {
    Publication p = pub_with_authors(1, "U1", "U1");
    CHECK(author_weight(p, 1, true) == 1.0);
    CHECK(author_weight(p, 1, false) == 1.0);
}

TEST_CASE("invalid positions throw") {
    Publication p = pub_with_authors(3, "U1", "U1");
    CHECK_THROWS_AS(author_weight(p, 0, true), std::invalid_argument);
    CHECK_THROWS_AS(author_weight(p, 4, true), std::invalid_argument);
}

TEST_CASE("weights sum to one for every size and variant") {
    for (int s = 1; s <= 15; ++s) {
        for (bool life : {false, true}) {
            for (bool intramural : {false, true}) {
                Publication p = pub_with_authors(s, "U1", intramural ? "U1" : "U2");
                double sum = 0.0;
                for (int pos = 1; pos <= s; ++pos) sum += author_weight(p, pos, life);
                CHECK(std::abs(sum - 1.0) < 1e-9);
            }
        }
    }
}

namespace {

struct ScoringFixture {
    ObservationConfig config = kmtest::basic_config();
    std::vector<Publication> corpus;
    CitationBaseline baseline;

    ScoringFixture() {
        // medians: (2004, CA) over {2} -> 2 ; (2005, CB) over {4} -> 4
        corpus = {
            make_pub("B1", 2004, 2, {"CA"}, 1),
            make_pub("B2", 2005, 4, {"CB"}, 1),
        };
        baseline = compute_baselines(corpus);
    }
};

}  // namespace

TEST_CASE("zero publications yield P = 0") {
    ScoringFixture f;
    Researcher r = make_researcher("R1", "A", "U1", "NORD", "SDS-M", 1999,
                                   {{1999, Rank::Assistant}});
    ScoreCard card = productivity(r, {}, f.baseline, f.config, false);
    CHECK(card.productivity == 0.0);
    CHECK(card.t_years == 5);
    CHECK(!card.has_publications);
    CHECK(!card.has_citations);
}

TEST_CASE("unit ratio with unit weight gives P = 1/t") {
    ScoringFixture f;
    Researcher r = make_researcher("R1", "A", "U1", "NORD", "SDS-M", 1999,
                                   {{1999, Rank::Assistant}});
    Publication p = make_pub("P1", 2004, 2, {"CA"}, 1, 1, "R1", "U1");
    ScoreCard card = productivity(r, {&p}, f.baseline, f.config, false);
    CHECK(card.productivity == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(card.n_publications == 1);
    CHECK(card.n_cited_publications == 1);
}

TEST_CASE("impacts 2.0 and 1.5 with weights 0.5 and 0.4 at t = 4 give P = 0.4") {
    ScoringFixture f;
    f.corpus.push_back(make_pub("B3", 2005, 2, {"CA"}, 1));  // (2005, CA) median 2
    f.baseline = compute_baselines(f.corpus);
    // hire 2005 -> faculty 2005..2008 -> t = 4
    Researcher r = make_researcher("R1", "A", "U1", "NORD", "SDS-B", 2005,
                                   {{2005, Rank::Assistant}});
    // impact 4/2 = 2.0, two authors -> weight 0.5
    Publication p1 = make_pub("PA", 2005, 4, {"CA"}, 2, 1, "R1", "U1");
    // impact 6/4 = 1.5, life-science 5 authors intramural, first position -> 0.40
    Publication p2 = make_pub("PB", 2005, 6, {"CB"}, 5, 1, "R1", "U1", "U1", "U1");
    ScoreCard card = productivity(r, {&p1, &p2}, f.baseline, f.config, true);
    // P = (1/4) * (2.0*0.5 + 1.5*0.4) = 0.4
    CHECK(card.productivity == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("publications outside the window are ignored") {
    ScoringFixture f;
    Researcher r = make_researcher("R1", "A", "U1", "NORD", "SDS-M", 1999,
                                   {{1999, Rank::Assistant}});
    Publication outside = make_pub("P1", 2003, 9, {"CA"}, 1, 1, "R1", "U1");
    ScoreCard card = productivity(r, {&outside}, f.baseline, f.config, false);
    CHECK(card.productivity == 0.0);
    CHECK(card.n_publications == 0);
}

TEST_CASE("undefined-impact publications are skipped and counted") {
    ScoringFixture f;
    Researcher r = make_researcher("R1", "A", "U1", "NORD", "SDS-M", 1999,
                                   {{1999, Rank::Assistant}});
    Publication orphan = make_pub("P1", 2004, 3, {"NOCELL"}, 1, 1, "R1", "U1");
    Publication good = make_pub("P2", 2004, 2, {"CA"}, 1, 1, "R1", "U1");
    ScoreCard card = productivity(r, {&orphan, &good}, f.baseline, f.config, false);
    CHECK(card.n_skipped_undefined == 1);
    CHECK(card.n_publications == 2);
    CHECK(card.productivity == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("zero faculty years is a structural error") {
    ScoringFixture f;
    Researcher r = make_researcher("R1", "A", "U1", "NORD", "SDS-M", 2009,
                                   {{2009, Rank::Assistant}});
    CHECK_THROWS_AS(productivity(r, {}, f.baseline, f.config, false), std::invalid_argument);
}

TEST_CASE("P is additive over publication partitions and monotone under removal") {
    std::mt19937 rng(7);
    ObservationConfig config = kmtest::basic_config();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Publication> corpus;
        std::vector<Publication> own;
        for (int i = 0; i < 12; ++i) {
            int year = 2004 + int(rng() % 5);
            int citations = int(rng() % 10);
            corpus.push_back(make_pub("BG" + std::to_string(i), year, 1 + int(rng() % 8), {"CA"}, 1));
            int s = 1 + int(rng() % 6);
            int pos = 1 + int(rng() % s);
            own.push_back(make_pub("PO" + std::to_string(i), year, citations, {"CA"}, s, pos, "R1",
                                   "U1", rng() % 2 ? "U1" : "U5", "U1"));
        }
        for (const Publication& p : own) corpus.push_back(p);
        CitationBaseline baseline = compute_baselines(corpus);
        Researcher r = make_researcher("R1", "A", "U1", "NORD", "SDS-B", 1999,
                                       {{1999, Rank::Assistant}});
        bool life = trial % 2 == 0;

        std::vector<const Publication*> everything;
        for (const Publication& p : own) everything.push_back(&p);
        ScoreCard whole = productivity(r, everything, baseline, config, life);

        // partition into two halves; the (1/t)-scaled sums must add up
        std::vector<const Publication*> first(everything.begin(), everything.begin() + 6);
        std::vector<const Publication*> second(everything.begin() + 6, everything.end());
        ScoreCard a = productivity(r, first, baseline, config, life);
        ScoreCard b = productivity(r, second, baseline, config, life);
        CHECK(std::abs((a.productivity + b.productivity) - whole.productivity) < 1e-9);

        // dropping one publication never increases P
        std::vector<const Publication*> less(everything.begin(), everything.end() - 1);
        ScoreCard reduced = productivity(r, less, baseline, config, life);
        CHECK(reduced.productivity <= whole.productivity + 1e-12);
    }
}

TEST_CASE("score_all on the fixture matches hand-derived values") {
    DatasetBundle bundle = load_bundle({kmtest::ok_fixture(), std::nullopt});
    CitationBaseline baseline = compute_baselines(bundle.publications);
    ScoringStats stats;
    auto cards = score_all(bundle, baseline, &stats);
    REQUIRE(cards.size() == 12);

    // R02: P = (20/17.5)*0.4 + 12/11 + 18/11, over t = 5
    CHECK(cards.at("R02").productivity ==
          doctest::Approx((16.0 / 35 + 30.0 / 11) / 5).epsilon(1e-12));
    // R04: P08 impact 1 with weight 1; P09 skipped (cell has no cited pubs)
    CHECK(cards.at("R04").productivity == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(cards.at("R04").n_skipped_undefined == 1);
    // R12 never published
    CHECK(cards.at("R12").productivity == 0.0);
    CHECK(!cards.at("R12").has_publications);
    // fixture-wide counters: P09, P11, P19, P26 skipped; P17 renormalized
    CHECK(stats.skipped_publications == 4);
    CHECK(stats.renormalized_publications == 1);
}
