#include "kinmetrics/baseline.hpp"

#include <algorithm>

#include "kinmetrics/csv.hpp"

namespace kinmetrics {

CitationBaseline compute_baselines(std::span<const Publication> publications) {
    std::map<CellKey, std::vector<int>> cited;
    std::map<CellKey, bool> seen;
    for (const Publication& p : publications) {
        for (const std::string& cat : p.categories) {
            CellKey key{p.year, cat};
            seen[key] = true;
            if (p.citations >= 1) cited[key].push_back(p.citations);
        }
    }
    CitationBaseline baseline;
    for (auto& [key, counts] : cited) {
        std::sort(counts.begin(), counts.end());
        size_t n = counts.size();
        double median = (n % 2 == 1) ? counts[n / 2]
                                     : (counts[n / 2 - 1] + counts[n / 2]) / 2.0;
        baseline.medians.emplace(key, median);
        baseline.n_cited.emplace(key, static_cast<int>(n));
    }
    for (const auto& [key, _] : seen) {
        if (baseline.medians.count(key) == 0) baseline.empty_cells.insert(key);
    }
    return baseline;
}

std::optional<double> normalized_impact(const Publication& pub, const CitationBaseline& baseline) {
    return normalized_impact(pub, baseline, [](const std::string&) { return 1.0; });
}

std::optional<double> normalized_impact(
    const Publication& pub, const CitationBaseline& baseline,
    const std::function<double(const std::string&)>& category_weight) {
    double weighted_sum = 0.0;
    double weight_total = 0.0;
    for (const std::string& cat : pub.categories) {
        auto median = baseline.median_of(pub.year, cat);
        if (!median) continue;
        double w = category_weight(cat);
        weighted_sum += w * (static_cast<double>(pub.citations) / *median);
        weight_total += w;
    }
    if (weight_total <= 0.0) return std::nullopt;
    return weighted_sum / weight_total;
}

void write_baselines(const CitationBaseline& baseline, const std::filesystem::path& path) {
    std::string out = "year,category,median,n_cited\n";
    for (const auto& [key, median] : baseline.medians) {
        out += csv_join({std::to_string(key.year), csv_quote(key.category), format_double(median),
                         std::to_string(baseline.n_cited.at(key))});
    }
    write_text_file(path.string(), out);
}

}  // namespace kinmetrics
