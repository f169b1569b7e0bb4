#include "kinmetrics/scoring.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "kinmetrics/csv.hpp"

namespace kinmetrics {

namespace {

// Raw positional weights for the life-science variant, before any
// renormalization. s >= 3.
std::vector<double> positional_weights(const Publication& pub) {
    const int s = static_cast<int>(pub.authorships.size());
    std::vector<double> w(static_cast<size_t>(s), 0.0);
    const bool intramural =
        pub.authorships.front().university_id == pub.authorships.back().university_id;
    if (intramural) {
        w[0] += 0.40;
        w[static_cast<size_t>(s) - 1] += 0.40;
        for (int i = 1; i < s - 1; ++i) w[static_cast<size_t>(i)] += 0.20 / (s - 2);
    } else {
        w[0] += 0.30;
        w[static_cast<size_t>(s) - 1] += 0.30;
        w[1] += 0.15;                         // second; coincides with penultimate at s=3
        w[static_cast<size_t>(s) - 2] += 0.15;
        if (s > 4) {
            for (int i = 2; i < s - 2; ++i) w[static_cast<size_t>(i)] += 0.10 / (s - 4);
        }
    }
    return w;
}

bool uses_positional(const Publication& pub, bool life_science) {
    return life_science && pub.authorships.size() > 2;
}

}  // namespace

double author_weight(const Publication& pub, int position, bool life_science) {
    const int s = static_cast<int>(pub.authorships.size());
    if (position < 1 || position > s)
        throw std::invalid_argument("author_weight: position " + std::to_string(position) +
                                    " outside 1.." + std::to_string(s) + " for " + pub.pub_id);
    if (!uses_positional(pub, life_science)) return 1.0 / s;
    std::vector<double> w = positional_weights(pub);
    double sum = 0.0;
    for (double v : w) sum += v;
    return w[static_cast<size_t>(position) - 1] / sum;
}

bool weight_renormalization_applies(const Publication& pub, bool life_science) {
    if (!uses_positional(pub, life_science)) return false;
    std::vector<double> w = positional_weights(pub);
    double sum = 0.0;
    for (double v : w) sum += v;
    return std::abs(sum - 1.0) > 1e-12;
}

ScoreCard productivity(const Researcher& researcher,
                       const std::vector<const Publication*>& authored,
                       const CitationBaseline& baseline, const ObservationConfig& config,
                       bool life_science) {
    ScoreCard card;
    card.researcher_id = researcher.researcher_id;
    card.t_years = faculty_years(researcher, config.window_start, config.window_end);
    if (card.t_years == 0)
        throw std::invalid_argument("productivity: researcher " + researcher.researcher_id +
                                    " has zero faculty years in the window");
    double sum = 0.0;
    for (const Publication* pub : authored) {
        if (pub->year < config.window_start || pub->year > config.window_end) continue;
        bool authored_here = false;
        double weight_sum = 0.0;
        for (const Authorship& a : pub->authorships) {
            if (a.author_ref != researcher.researcher_id) continue;
            authored_here = true;
            weight_sum += author_weight(*pub, a.position, life_science);
        }
        if (!authored_here) continue;
        ++card.n_publications;
        if (pub->citations >= 1) ++card.n_cited_publications;
        auto impact = normalized_impact(*pub, baseline);
        if (!impact) {
            ++card.n_skipped_undefined;
            continue;
        }
        sum += *impact * weight_sum;
    }
    card.productivity = sum / card.t_years;
    card.has_publications = card.n_publications > 0;
    card.has_citations = card.n_cited_publications > 0;
    return card;
}

std::map<std::string, ScoreCard> score_all(const DatasetBundle& bundle,
                                           const CitationBaseline& baseline, ScoringStats* stats) {
    std::unordered_map<std::string, std::vector<const Publication*>> by_author;
    for (const Publication& p : bundle.publications) {
        for (const Authorship& a : p.authorships) {
            if (!a.is_external()) by_author[a.author_ref].push_back(&p);
        }
    }
    if (stats) {
        *stats = ScoringStats{};
        for (const Publication& p : bundle.publications) {
            if (p.year < bundle.config.window_start || p.year > bundle.config.window_end) continue;
            if (!normalized_impact(p, baseline)) ++stats->skipped_publications;
            // Counted when some roster author in a life-science field hits
            // the s=3/4 renormalization on this publication.
            for (const Authorship& a : p.authorships) {
                if (a.is_external()) continue;
                auto it = std::lower_bound(
                    bundle.researchers.begin(), bundle.researchers.end(), a.author_ref,
                    [](const Researcher& r, const std::string& id) { return r.researcher_id < id; });
                if (it == bundle.researchers.end() || it->researcher_id != a.author_ref) continue;
                if (weight_renormalization_applies(p, bundle.taxonomy.is_life_science(it->sds_code))) {
                    ++stats->renormalized_publications;
                    break;
                }
            }
        }
    }
    std::map<std::string, ScoreCard> cards;
    static const std::vector<const Publication*> kNone;
    for (const Researcher& r : bundle.researchers) {
        if (faculty_years(r, bundle.config.window_start, bundle.config.window_end) == 0) continue;
        auto it = by_author.find(r.researcher_id);
        const auto& pubs = it == by_author.end() ? kNone : it->second;
        bool life = bundle.taxonomy.is_life_science(r.sds_code);
        cards.emplace(r.researcher_id, productivity(r, pubs, baseline, bundle.config, life));
    }
    return cards;
}

void write_scores(const std::map<std::string, ScoreCard>& scores,
                  const std::filesystem::path& path) {
    std::string out = "researcher_id,P,t_years,n_publications,n_cited_publications\n";
    for (const auto& [id, card] : scores) {
        out += csv_join({csv_quote(id), format_double(card.productivity),
                         std::to_string(card.t_years), std::to_string(card.n_publications),
                         std::to_string(card.n_cited_publications)});
    }
    write_text_file(path.string(), out);
}

}  // namespace kinmetrics
