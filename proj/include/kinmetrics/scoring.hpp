#pragma once
// Author weights (fractional or life-science positional) and the yearly
// productivity index P.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "kinmetrics/baseline.hpp"
#include "kinmetrics/ingest.hpp"
#include "kinmetrics/model.hpp"

namespace kinmetrics {

struct ScoreCard {
    std::string researcher_id;
    double productivity = 0.0;  // P
    int t_years = 0;
    int n_publications = 0;        // in-window publications authored
    int n_cited_publications = 0;  // of those, citations >= 1
    int n_skipped_undefined = 0;   // in-window publications with undefined impact
    bool has_publications = false;
    bool has_citations = false;
    bool operator==(const ScoreCard&) const = default;
};

// Credit share of the author at `position` (1-based, s = authorship count).
//
// Outside the life sciences, or with at most two authors, credit is
// fractional: 1/s. In the life sciences with s > 2 the byline position
// carries the weight. When first and last authors share a university:
// 0.40 each for first and last, 0.20 split among the middle authors.
// Otherwise: 0.30 for first and last, 0.15 for second and penultimate,
// 0.10 split among the rest. For s = 3 and s = 4 coinciding roles
// accumulate and the weights are renormalized to sum to 1.
//
// Throws std::invalid_argument for a position outside 1..s.
double author_weight(const Publication& pub, int position, bool life_science);

// True when the s=3/s=4 renormalization applies to this publication under
// the positional variant (raw role weights do not already sum to 1).
bool weight_renormalization_applies(const Publication& pub, bool life_science);

// P = (1/t) * sum over in-window publications of impact * weight, skipping
// publications whose impact is undefined. `authored` may be any superset of
// the researcher's publications; rows not naming the researcher are ignored.
// Throws std::invalid_argument when the researcher has zero faculty years in
// the window (callers pre-filter).
ScoreCard productivity(const Researcher& researcher,
                       const std::vector<const Publication*>& authored,
                       const CitationBaseline& baseline, const ObservationConfig& config,
                       bool life_science);

struct ScoringStats {
    int skipped_publications = 0;       // distinct in-window pubs with undefined impact
    int renormalized_publications = 0;  // distinct pubs where s=3/4 renormalization applied
};

// Scores every researcher with at least one faculty year in the window.
std::map<std::string, ScoreCard> score_all(const DatasetBundle& bundle,
                                           const CitationBaseline& baseline,
                                           ScoringStats* stats = nullptr);

// Dump: researcher_id,P,t_years,n_publications,n_cited_publications.
void write_scores(const std::map<std::string, ScoreCard>& scores,
                  const std::filesystem::path& path);

}  // namespace kinmetrics
