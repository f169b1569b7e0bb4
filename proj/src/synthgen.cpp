#include "kinmetrics/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "kinmetrics/csv.hpp"
#include "kinmetrics/kinship.hpp"

namespace kinmetrics {

std::optional<ChildPerformance> parse_child_performance(std::string_view token) {
    if (token == "matched") return ChildPerformance::Matched;
    if (token == "depressed") return ChildPerformance::Depressed;
    if (token == "boosted") return ChildPerformance::Boosted;
    return std::nullopt;
}

std::optional<CitationModel> parse_citation_model(std::string_view token) {
    if (token == "lognormal") return CitationModel::Lognormal;
    if (token == "negbin") return CitationModel::NegativeBinomial;
    return std::nullopt;
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic stream; never touches std::<distribution> so sequences are
// identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {
        // decorrelate trivially related seeds
        splitmix64(state_);
    }

    uint64_t next_u64() { return splitmix64(state_); }

    double next_double() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    int uniform_int(int lo, int hi) {  // inclusive
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    bool bernoulli(double p) { return next_double() < p; }

    double normal(double mu, double sigma) {
        double u1 = 1.0 - next_double();  // (0, 1]
        double u2 = next_double();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mu + sigma * z;
    }

    int poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        double limit = std::exp(-lambda);
        int k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= next_double();
        } while (p > limit);
        return k - 1;
    }

    double gamma(double shape) {  // scale 1, Marsaglia-Tsang
        if (shape < 1.0) {
            double u = next_double();
            while (u <= 0.0) u = next_double();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal(0.0, 1.0);
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            double u = next_double();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    // index into a cumulative weight table
    size_t weighted_pick(const std::vector<double>& cumulative) {
        double u = next_double() * cumulative.back();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        size_t idx = static_cast<size_t>(it - cumulative.begin());
        return std::min(idx, cumulative.size() - 1);
    }

private:
    uint64_t state_;
};

uint64_t derive_seed(uint64_t seed, uint64_t stream_tag, uint64_t index) {
    uint64_t s = seed;
    splitmix64(s);
    s ^= 0x5851F42D4C957F2DULL * (stream_tag + 1);
    splitmix64(s);
    s ^= 0x14057B7EF767814FULL * (index + 1);
    return s;
}

// Stream tags, one per entity class.
enum : uint64_t { kStreamRoster = 1, kStreamPublications = 2, kStreamPlanting = 3 };

const char* kUdaCodes[9] = {"MATH", "PHYS", "CHEM", "EARTH", "BIO",
                            "MED",  "AGR",  "CIVENG", "INDENG"};
bool uda_is_life(const std::string& uda) { return uda == "BIO" || uda == "MED" || uda == "AGR"; }

const char* kSyllables[] = {
    "BA", "BE", "BI", "BO", "BU", "CA", "CE", "CI", "CO", "CU", "DA", "DE", "DI",
    "DO", "DU", "FA", "FE", "FI", "FO", "FU", "GA", "GE", "GI", "GO", "GU", "LA",
    "LE", "LI", "LO", "LU", "MA", "ME", "MI", "MO", "MU", "NA", "NE", "NI", "NO",
    "NU", "PA", "PE", "PI", "PO", "PU", "RA", "RE", "RI", "RO", "RU", "SA", "SE",
    "SI", "SO", "SU", "TA", "TE", "TI", "TO", "TU", "VA", "VE", "VI", "VO", "VU"};
constexpr size_t kNumSyllables = sizeof(kSyllables) / sizeof(kSyllables[0]);

std::string synthetic_surname(size_t i) {
    // Bijective scramble over the 3-syllable space keeps names unique and
    // varied (104729 is prime to 65^3).
    size_t space = kNumSyllables * kNumSyllables * kNumSyllables;
    size_t j = (i * 104729) % space;
    std::string s;
    s += kSyllables[j / (kNumSyllables * kNumSyllables) % kNumSyllables];
    s += kSyllables[j / kNumSyllables % kNumSyllables];
    s += kSyllables[j % kNumSyllables];
    return s;
}

std::string padded_id(char prefix, unsigned value, int width) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%c%0*u", prefix, width, value);
    return buf;
}

const char* kGivenNames[] = {"ANNA", "BRUNO", "CARLA", "DARIO", "ELENA", "FABIO",
                             "GIULIA", "IVO", "LAURA", "MARCO", "NORA", "PAOLO"};

struct RegionDef {
    const char* name;
    Area area;
};
const RegionDef kRegions[] = {
    {"REGION-N1", Area::North},  {"REGION-N2", Area::North},  {"REGION-C1", Area::Centre},
    {"REGION-C2", Area::Centre}, {"REGION-S1", Area::South},  {"REGION-S2", Area::South},
};
constexpr size_t kNumRegions = sizeof(kRegions) / sizeof(kRegions[0]);

int citations_draw(const SynthConfig& config, Rng& rng, double boost) {
    if (config.citation_model == CitationModel::Lognormal) {
        double v = std::exp(rng.normal(config.lognormal_mu + std::log(boost),
                                       config.lognormal_sigma));
        return static_cast<int>(std::floor(v));
    }
    // gamma-Poisson mixture
    double scale = boost * (1.0 - config.negbin_p) / config.negbin_p;
    double lambda = rng.gamma(config.negbin_r) * scale;
    return rng.poisson(std::min(lambda, 200.0));
}

}  // namespace

SynthResult generate(const SynthConfig& config) {
    if (config.n_universities < 1 || config.n_sds < 1 || config.researchers_per_sds < 1)
        throw std::invalid_argument("generate: entity counts must be positive");
    if (config.surname_pool_size < 0)
        throw std::invalid_argument("generate: surname_pool_size must be >= 0");
    if (config.planted_pairs < 0 ||
        config.planted_pairs > config.n_sds * config.researchers_per_sds)
        throw std::invalid_argument("generate: planted_pairs exceeds researcher count");

    SynthResult result;
    DatasetBundle& bundle = result.bundle;

    bundle.config.window_start = config.window_start;
    bundle.config.window_end = config.window_end;
    bundle.config.entry_window_start = config.entry_window_start;
    bundle.config.entry_window_end = config.entry_window_end;
    bundle.config.national_surname_exclusions = config.national_exclusions;
    for (const RegionDef& rd : kRegions) bundle.config.region_area_map[rd.name] = rd.area;

    for (int i = 0; i < config.n_sds; ++i) {
        std::string uda = kUdaCodes[i % 9];
        bundle.taxonomy.entries.emplace(padded_id('S', static_cast<unsigned>(i + 1), 3) + "-" + uda,
                                        TaxonomyEntry{uda, uda_is_life(uda)});
    }
    std::vector<std::string> sds_codes;
    for (const auto& [sds, _] : bundle.taxonomy.entries) sds_codes.push_back(sds);
    std::sort(sds_codes.begin(), sds_codes.end());

    std::vector<std::string> universities;
    std::vector<std::string> university_region;
    for (int u = 0; u < config.n_universities; ++u) {
        universities.push_back(padded_id('U', static_cast<unsigned>(u + 1), 3));
        university_region.push_back(kRegions[static_cast<size_t>(u) % kNumRegions].name);
    }

    // Surname pool and cumulative weights.
    std::vector<std::string> pool_names;
    std::vector<double> pool_cumulative;
    bool unique_surnames = false;
    if (!config.surname_pool.empty()) {
        double acc = 0.0;
        for (const auto& [name, weight] : config.surname_pool) {
            if (weight <= 0.0) throw std::invalid_argument("generate: surname weight must be > 0");
            pool_names.push_back(normalize_surname(name));
            acc += weight;
            pool_cumulative.push_back(acc);
        }
    } else if (config.surname_pool_size == 0) {
        unique_surnames = true;
    } else {
        double acc = 0.0;
        for (int i = 0; i < config.surname_pool_size; ++i) {
            pool_names.push_back(synthetic_surname(static_cast<size_t>(i)));
            acc += 1.0 / std::pow(static_cast<double>(i + 1), config.zipf_exponent);
            pool_cumulative.push_back(acc);
        }
    }

    const int n_researchers = config.n_sds * config.researchers_per_sds;
    struct Draft {
        bool entrant = false;
        bool incumbent_full = false;
        int entry_year = 0;
    };
    std::vector<Draft> drafts(static_cast<size_t>(n_researchers));

    Rng roster_rng(derive_seed(config.seed, kStreamRoster, 0));
    unsigned researcher_counter = 0;
    for (const std::string& sds : sds_codes) {
        for (int k = 0; k < config.researchers_per_sds; ++k) {
            Researcher r;
            unsigned index = researcher_counter++;
            r.researcher_id = padded_id('R', index + 1, 5);
            size_t univ = static_cast<size_t>(roster_rng.uniform_int(0, config.n_universities - 1));
            r.university_id = universities[univ];
            r.region = university_region[univ];
            r.sds_code = sds;
            if (unique_surnames) {
                r.surname = "UNIQ" + std::to_string(index + 1);
            } else {
                r.surname = pool_names[roster_rng.weighted_pick(pool_cumulative)];
            }
            r.full_name = r.surname + " " + kGivenNames[roster_rng.uniform_int(0, 11)];

            Draft& draft = drafts[index];
            if (roster_rng.bernoulli(0.30)) {
                // Entrant: a qualifying assistant/associate event in the
                // entry window.
                draft.entrant = true;
                int entry = roster_rng.uniform_int(config.entry_window_start,
                                                   config.entry_window_end);
                draft.entry_year = entry;
                bool associate = roster_rng.bernoulli(0.30);
                if (associate && roster_rng.bernoulli(0.40)) {
                    // promoted to associate after an earlier assistant hire
                    r.hire_year = entry - roster_rng.uniform_int(2, 6);
                    r.rank_events.push_back(RankEvent{r.hire_year, Rank::Assistant});
                    r.rank_events.push_back(RankEvent{entry, Rank::Associate});
                } else {
                    r.hire_year = entry;
                    r.rank_events.push_back(
                        RankEvent{entry, associate ? Rank::Associate : Rank::Assistant});
                }
                // post-entry advancement for some
                if (roster_rng.bernoulli(0.25) && entry + 1 <= config.window_end) {
                    int promo = roster_rng.uniform_int(entry + 1, config.window_end);
                    Rank next = r.rank_events.back().rank == Rank::Assistant ? Rank::Associate
                                                                             : Rank::Full;
                    r.rank_events.push_back(RankEvent{promo, next});
                }
            } else {
                // Incumbent: whole history before the entry window.
                const int latest = config.entry_window_start - 2;
                r.hire_year = latest - roster_rng.uniform_int(2, 25);
                double roll = roster_rng.next_double();
                if (roll < 0.30) {
                    draft.incumbent_full = true;
                    r.rank_events.push_back(RankEvent{r.hire_year, Rank::Associate});
                    int full = r.hire_year + 1 +
                               roster_rng.uniform_int(0, std::max(0, latest - r.hire_year - 1));
                    r.rank_events.push_back(RankEvent{full, Rank::Full});
                } else if (roll < 0.65) {
                    r.rank_events.push_back(RankEvent{r.hire_year, Rank::Associate});
                } else {
                    r.rank_events.push_back(RankEvent{r.hire_year, Rank::Assistant});
                }
                if (roster_rng.bernoulli(0.08)) {
                    r.leave_year = roster_rng.uniform_int(config.window_start, config.window_end);
                }
            }
            bundle.researchers.push_back(std::move(r));
        }
    }

    // Plant pairs: children among entrants, parents among long-time Fulls.
    std::vector<size_t> entrant_idx, full_idx;
    for (size_t i = 0; i < drafts.size(); ++i) {
        if (drafts[i].entrant) entrant_idx.push_back(i);
        if (drafts[i].incumbent_full) full_idx.push_back(i);
    }
    if (config.planted_pairs > 0 &&
        (static_cast<int>(entrant_idx.size()) < config.planted_pairs ||
         static_cast<int>(full_idx.size()) < config.planted_pairs))
        throw std::invalid_argument("generate: not enough hosts for planted_pairs (" +
                                    std::to_string(entrant_idx.size()) + " entrants, " +
                                    std::to_string(full_idx.size()) + " full professors)");
    Rng plant_rng(derive_seed(config.seed, kStreamPlanting, 0));
    // Spread children across the entrant list deterministically.
    for (int pair = 0; pair < config.planted_pairs; ++pair) {
        size_t child_i =
            entrant_idx[static_cast<size_t>(pair) * entrant_idx.size() /
                        static_cast<size_t>(config.planted_pairs)];
        size_t parent_i = full_idx[static_cast<size_t>(pair) * full_idx.size() /
                                   static_cast<size_t>(config.planted_pairs)];
        Researcher& child = bundle.researchers[child_i];
        Researcher& parent = bundle.researchers[parent_i];
        char surname_buf[16];
        std::snprintf(surname_buf, sizeof(surname_buf), "KIN%03d", pair);
        std::string surname = surname_buf;  // KIN000, KIN001, ...
        child.surname = surname;
        child.full_name = surname + " " + kGivenNames[plant_rng.uniform_int(0, 11)];
        parent.surname = surname;
        parent.full_name = surname + " " + kGivenNames[plant_rng.uniform_int(0, 11)];
        parent.university_id = child.university_id;
        parent.region = child.region;
        result.ground_truth.push_back(GroundTruthPair{child.researcher_id, parent.researcher_id});
    }

    // Publications, one derived stream per researcher.
    double boost = 1.0;
    switch (config.child_performance) {
        case ChildPerformance::Matched: boost = 1.0; break;
        case ChildPerformance::Depressed: boost = 0.30; break;
        case ChildPerformance::Boosted: boost = 3.0; break;
    }
    std::set<std::string> planted_children;
    for (const GroundTruthPair& gt : result.ground_truth) planted_children.insert(gt.child_id);

    unsigned pub_counter = 0;
    for (size_t i = 0; i < bundle.researchers.size(); ++i) {
        const Researcher& r = bundle.researchers[i];
        Rng rng(derive_seed(config.seed, kStreamPublications, i));
        double perf = planted_children.count(r.researcher_id) ? boost : 1.0;
        int n_pubs = rng.poisson(config.mean_publications * std::sqrt(perf));
        const std::string& uda = bundle.taxonomy.uda_of(r.sds_code);
        for (int p = 0; p < n_pubs; ++p) {
            Publication pub;
            pub.pub_id = padded_id('P', ++pub_counter, 6);
            if (rng.bernoulli(0.90)) {
                pub.year = rng.uniform_int(config.window_start, config.window_end);
            } else {
                pub.year = rng.uniform_int(config.window_start - 2, config.window_start - 1);
            }
            pub.citations = citations_draw(config, rng, perf);
            pub.categories.push_back("C-" + uda + "-" + std::to_string(rng.uniform_int(1, 3)));
            if (rng.bernoulli(0.15)) {
                std::string other = kUdaCodes[rng.uniform_int(0, 8)];
                std::string cat = "C-" + other + "-" + std::to_string(rng.uniform_int(1, 3));
                if (cat != pub.categories.front()) pub.categories.push_back(cat);
            }
            int s = std::min(1 + rng.poisson(2.0), 12);
            int own_pos = rng.uniform_int(1, s);
            for (int pos = 1; pos <= s; ++pos) {
                Authorship a;
                a.position = pos;
                if (pos == own_pos) {
                    a.author_ref = r.researcher_id;
                    a.university_id = r.university_id;
                } else {
                    a.author_ref = "EXT:" + r.researcher_id + "-" + std::to_string(pos);
                    if (rng.bernoulli(0.55)) {
                        a.university_id = r.university_id;
                    } else {
                        a.university_id = universities[static_cast<size_t>(
                            rng.uniform_int(0, config.n_universities - 1))];
                    }
                }
                pub.authorships.push_back(std::move(a));
            }
            bundle.publications.push_back(std::move(pub));
        }
    }

    ValidationReport violations =
        validate_dataset(bundle.researchers, bundle.publications, bundle.taxonomy, bundle.config);
    if (!violations.empty())
        throw std::logic_error("generate: produced an invalid bundle: " + violations.front().code);
    return result;
}

PowerSummary detection_power(const SynthConfig& config, int replications) {
    if (replications < 1) throw std::invalid_argument("detection_power: replications must be >= 1");
    PowerSummary summary;
    summary.replications = replications;
    for (int rep = 0; rep < replications; ++rep) {
        SynthConfig rep_config = config;
        rep_config.seed = derive_seed(config.seed, 0xD7, static_cast<uint64_t>(rep));
        SynthResult synth = generate(rep_config);
        auto children = candidate_children(synth.bundle);
        auto parents = candidate_parents(synth.bundle);
        auto links = detect_links(children, parents, synth.bundle);
        auto pairs = resolve_pairs(links, synth.bundle);

        int recovered = 0;
        for (const GroundTruthPair& gt : synth.ground_truth) {
            for (const KinshipPair& pair : pairs) {
                if (pair.child_id == gt.child_id && pair.parent_ids.count(gt.parent_id)) {
                    ++recovered;
                    break;
                }
            }
        }
        int false_pairs = 0;
        for (const KinshipPair& pair : pairs) {
            bool planted = false;
            for (const GroundTruthPair& gt : synth.ground_truth) {
                if (pair.child_id == gt.child_id && pair.parent_ids.count(gt.parent_id)) {
                    planted = true;
                    break;
                }
            }
            if (!planted) ++false_pairs;
        }
        double recall = synth.ground_truth.empty()
                            ? 1.0
                            : static_cast<double>(recovered) /
                                  static_cast<double>(synth.ground_truth.size());
        double fp_rate = pairs.empty() ? 0.0
                                       : static_cast<double>(false_pairs) /
                                             static_cast<double>(pairs.size());
        summary.recalls.push_back(recall);
        summary.false_positive_rates.push_back(fp_rate);
        summary.mean_recall += recall;
        summary.mean_false_positive_rate += fp_rate;
    }
    summary.mean_recall /= replications;
    summary.mean_false_positive_rate /= replications;
    return summary;
}

SynthConfig parse_synth_config_text(const std::string& text, const std::string& source_name) {
    SynthConfig config;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& message) -> ParseError {
        return ParseError(source_name + ":" + std::to_string(line_no) + ": " + message);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw fail("expected key = value");
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            if (a == std::string::npos) return std::string();
            return s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        const std::string ctx = source_name + ":" + std::to_string(line_no) + ": " + key;
        if (key == "seed") config.seed = static_cast<uint64_t>(std::stoull(value));
        else if (key == "n_universities") config.n_universities = parse_int_field(value, ctx);
        else if (key == "n_sds") config.n_sds = parse_int_field(value, ctx);
        else if (key == "researchers_per_sds")
            config.researchers_per_sds = parse_int_field(value, ctx);
        else if (key == "surname_pool_size") config.surname_pool_size = parse_int_field(value, ctx);
        else if (key == "zipf_exponent") config.zipf_exponent = parse_double_field(value, ctx);
        else if (key == "citation_model") {
            auto model = parse_citation_model(value);
            if (!model) throw fail("unknown citation_model '" + value + "'");
            config.citation_model = *model;
        } else if (key == "lognormal_mu") config.lognormal_mu = parse_double_field(value, ctx);
        else if (key == "lognormal_sigma") config.lognormal_sigma = parse_double_field(value, ctx);
        else if (key == "negbin_r") config.negbin_r = parse_double_field(value, ctx);
        else if (key == "negbin_p") config.negbin_p = parse_double_field(value, ctx);
        else if (key == "mean_publications")
            config.mean_publications = parse_double_field(value, ctx);
        else if (key == "planted_pairs") config.planted_pairs = parse_int_field(value, ctx);
        else if (key == "child_performance") {
            auto perf = parse_child_performance(value);
            if (!perf) throw fail("unknown child_performance '" + value + "'");
            config.child_performance = *perf;
        } else if (key == "window_start") config.window_start = parse_int_field(value, ctx);
        else if (key == "window_end") config.window_end = parse_int_field(value, ctx);
        else if (key == "entry_window_start")
            config.entry_window_start = parse_int_field(value, ctx);
        else if (key == "entry_window_end") config.entry_window_end = parse_int_field(value, ctx);
        else throw fail("unknown key '" + key + "'");
    }
    return config;
}

std::string render_synth_config_text(const SynthConfig& c) {
    std::ostringstream out;
    out << "seed = " << c.seed << "\n";
    out << "n_universities = " << c.n_universities << "\n";
    out << "n_sds = " << c.n_sds << "\n";
    out << "researchers_per_sds = " << c.researchers_per_sds << "\n";
    out << "surname_pool_size = " << c.surname_pool_size << "\n";
    out << "zipf_exponent = " << format_double(c.zipf_exponent) << "\n";
    out << "citation_model = "
        << (c.citation_model == CitationModel::Lognormal ? "lognormal" : "negbin") << "\n";
    out << "lognormal_mu = " << format_double(c.lognormal_mu) << "\n";
    out << "lognormal_sigma = " << format_double(c.lognormal_sigma) << "\n";
    out << "negbin_r = " << format_double(c.negbin_r) << "\n";
    out << "negbin_p = " << format_double(c.negbin_p) << "\n";
    out << "mean_publications = " << format_double(c.mean_publications) << "\n";
    out << "planted_pairs = " << c.planted_pairs << "\n";
    const char* perf = "matched";
    if (c.child_performance == ChildPerformance::Depressed) perf = "depressed";
    if (c.child_performance == ChildPerformance::Boosted) perf = "boosted";
    out << "child_performance = " << perf << "\n";
    out << "window_start = " << c.window_start << "\n";
    out << "window_end = " << c.window_end << "\n";
    out << "entry_window_start = " << c.entry_window_start << "\n";
    out << "entry_window_end = " << c.entry_window_end << "\n";
    return out.str();
}

void write_ground_truth(const std::vector<GroundTruthPair>& truth,
                        const std::filesystem::path& path) {
    std::string out = "child_id,parent_id\n";
    for (const GroundTruthPair& gt : truth)
        out += csv_join({csv_quote(gt.child_id), csv_quote(gt.parent_id)});
    write_text_file(path.string(), out);
}

std::vector<GroundTruthPair> read_ground_truth(const std::filesystem::path& path) {
    CsvReader reader(read_text_file(path.string()), path.filename().string());
    auto header = reader.next();
    if (!header || *header != std::vector<std::string>{"child_id", "parent_id"})
        throw ParseError(path.filename().string() + ": bad header");
    std::vector<GroundTruthPair> truth;
    while (auto row = reader.next()) {
        if (row->size() != 2)
            throw ParseError(path.filename().string() + ": expected 2 columns");
        truth.push_back(GroundTruthPair{(*row)[0], (*row)[1]});
    }
    return truth;
}

}  // namespace kinmetrics
