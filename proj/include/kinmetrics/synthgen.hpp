#pragma once
// Reproducible synthetic academia datasets: configurable surname skew,
// citation skew, and planted child-parent pairs with ground truth. Fixed
// seed means byte-identical output; every entity class draws from its own
// derived stream, so enlarging one class does not perturb the others.

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kinmetrics/ingest.hpp"

namespace kinmetrics {

enum class ChildPerformance { Matched, Depressed, Boosted };
enum class CitationModel { Lognormal, NegativeBinomial };

std::optional<ChildPerformance> parse_child_performance(std::string_view token);
std::optional<CitationModel> parse_citation_model(std::string_view token);

struct SynthConfig {
    uint64_t seed = 42;
    int n_universities = 6;
    int n_sds = 8;
    int researchers_per_sds = 25;

    // Explicit pool of (surname, relative frequency). When empty, a
    // Zipf-weighted syllabic pool of surname_pool_size names is used;
    // surname_pool_size = 0 gives every researcher a unique surname.
    std::vector<std::pair<std::string, double>> surname_pool;
    int surname_pool_size = 150;
    double zipf_exponent = 1.2;

    CitationModel citation_model = CitationModel::Lognormal;
    double lognormal_mu = 0.6;
    double lognormal_sigma = 1.1;
    double negbin_r = 1.5;
    double negbin_p = 0.35;
    double mean_publications = 4.0;

    int planted_pairs = 5;
    ChildPerformance child_performance = ChildPerformance::Matched;

    int window_start = 2004;
    int window_end = 2008;
    int entry_window_start = 2001;
    int entry_window_end = 2003;

    // Copied into the generated ObservationConfig.
    std::set<std::string> national_exclusions;
};

struct GroundTruthPair {
    std::string child_id;
    std::string parent_id;
    bool operator==(const GroundTruthPair&) const = default;
    auto operator<=>(const GroundTruthPair&) const = default;
};

struct SynthResult {
    DatasetBundle bundle;
    std::vector<GroundTruthPair> ground_truth;
};

// Planted pairs share a fresh rare surname ("KIN<nnn>") and a university,
// the parent is Full well before the entry window, and the child enters in
// the window. Throws std::invalid_argument when the config cannot host the
// requested number of planted pairs. The bundle always passes
// validate_dataset.
SynthResult generate(const SynthConfig& config);

struct PowerSummary {
    int replications = 0;
    double mean_recall = 0.0;
    double mean_false_positive_rate = 0.0;
    std::vector<double> recalls;            // per replication
    std::vector<double> false_positive_rates;
};

// Runs the full detection chain on `replications` datasets with per-
// replication derived seeds. Recall: share of planted (child, parent) pairs
// recovered by detect_links + resolve_pairs. False-positive rate: share of
// resolved pairs that are not planted (0 when nothing is detected).
PowerSummary detection_power(const SynthConfig& config, int replications);

// ground_truth.csv: child_id,parent_id.
void write_ground_truth(const std::vector<GroundTruthPair>& truth,
                        const std::filesystem::path& path);
std::vector<GroundTruthPair> read_ground_truth(const std::filesystem::path& path);

// Flat key = value file with the scalar SynthConfig fields, same syntax as
// config.toml. Unknown keys are rejected.
SynthConfig parse_synth_config_text(const std::string& text, const std::string& source_name);
std::string render_synth_config_text(const SynthConfig& config);

}  // namespace kinmetrics
