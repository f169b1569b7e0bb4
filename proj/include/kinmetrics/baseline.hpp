#pragma once
// Citation baselines: per (year, subject category) medians over cited-only
// publications, and the normalized impact of a publication against them.

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "kinmetrics/model.hpp"

namespace kinmetrics {

struct CellKey {
    int year = 0;
    std::string category;
    auto operator<=>(const CellKey&) const = default;
};

struct CitationBaseline {
    // Median of citation counts over publications with citations >= 1 in the
    // cell. Every stored median is >= 1.
    std::map<CellKey, double> medians;
    std::map<CellKey, int> n_cited;  // cited-publication count behind each median
    // Cells that exist in the corpus but have no cited publication.
    std::set<CellKey> empty_cells;

    std::optional<double> median_of(int year, const std::string& category) const {
        auto it = medians.find(CellKey{year, category});
        if (it == medians.end()) return std::nullopt;
        return it->second;
    }
    bool operator==(const CitationBaseline&) const = default;
};

// One vote per (publication, category) pair: a publication carrying two
// categories contributes its citation count to both cells. Even-cardinality
// cells take the midpoint of the two central values.
CitationBaseline compute_baselines(std::span<const Publication> publications);

// citations / cell median, averaged with equal weights over the publication's
// categories that have a defined median. nullopt when every category cell is
// empty or absent; callers skip such publications.
std::optional<double> normalized_impact(const Publication& pub, const CitationBaseline& baseline);

// Weight hook for callers with per-category weights. Weights are renormalized
// over the categories that have a defined median.
std::optional<double> normalized_impact(const Publication& pub, const CitationBaseline& baseline,
                                        const std::function<double(const std::string&)>& category_weight);

// Audit dump: year,category,median,n_cited.
void write_baselines(const CitationBaseline& baseline, const std::filesystem::path& path);

}  // namespace kinmetrics
