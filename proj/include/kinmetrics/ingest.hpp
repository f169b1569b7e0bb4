#pragma once
// On-disk schemas for the dataset bundle: the canonical CSV files, the flat
// key=value configuration, and the comparison-report formats. Loading always
// validates; a bundle handed out by load_bundle has zero violations.
//
// File set (all CSV with a header row, UTF-8, LF on write):
//   roster.csv             researcher_id,full_name,surname,university_id,region,sds_code,hire_year,leave_year
//   rank_events.csv        researcher_id,year,rank            rank in {ASSISTANT,ASSOCIATE,FULL}
//   publications.csv       pub_id,year,citations,categories   categories ';'-separated
//   authorships.csv        pub_id,position,author_ref,university_id
//   taxonomy.csv           sds_code,uda_code,life_science     life_science in {0,1}
//   surnames_national.txt  one surname per line
//   surnames_regional.csv  region,surname
//   region_area.csv        region,area                        area in {North,Centre,South}
//   config.toml            flat key = value

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kinmetrics/csv.hpp"
#include "kinmetrics/model.hpp"

namespace kinmetrics {

struct CohortReport;  // cohort.hpp

struct ValidationError : std::runtime_error {
    explicit ValidationError(ValidationReport r);
    ValidationReport report;
};

struct DatasetBundle {
    std::vector<Researcher> researchers;    // sorted by researcher_id
    std::vector<Publication> publications;  // sorted by pub_id
    FieldTaxonomy taxonomy;
    ObservationConfig config;
    bool operator==(const DatasetBundle&) const = default;
};

struct BundlePaths {
    std::filesystem::path dir;
    std::optional<std::filesystem::path> config_file;  // default: dir/config.toml

    std::filesystem::path roster() const { return dir / "roster.csv"; }
    std::filesystem::path rank_events() const { return dir / "rank_events.csv"; }
    std::filesystem::path publications() const { return dir / "publications.csv"; }
    std::filesystem::path authorships() const { return dir / "authorships.csv"; }
    std::filesystem::path taxonomy() const { return dir / "taxonomy.csv"; }
    std::filesystem::path surnames_national() const { return dir / "surnames_national.txt"; }
    std::filesystem::path surnames_regional() const { return dir / "surnames_regional.csv"; }
    std::filesystem::path region_area() const { return dir / "region_area.csv"; }
    std::filesystem::path config() const {
        return config_file ? *config_file : dir / "config.toml";
    }
};

// Parses all files, normalizes surnames, sorts records into canonical order
// (researchers by id, publications by id, rank events and authorships by
// year/position) and validates. Throws ParseError on malformed input (the
// message names file and line), ValidationError when validate_dataset finds
// violations, std::runtime_error on missing files.
DatasetBundle load_bundle(const BundlePaths& paths);

// Writes the full file set into `dir` (created if absent). A bundle written
// here loads back field-for-field identical.
void write_bundle(const DatasetBundle& bundle, const std::filesystem::path& dir);

ObservationConfig parse_config_text(const std::string& text, const std::string& source_name);
std::string render_config_text(const ObservationConfig& config);

enum class ReportFormat { Csv, Json };

std::optional<ReportFormat> parse_report_format(std::string_view token);

// Report serialization. Both formats round-trip losslessly through
// read_report. CSV lays out one row per group with one column per statistic;
// JSON keys groups by their label.
void write_report(const CohortReport& report, const std::filesystem::path& path,
                  ReportFormat format);
CohortReport read_report(const std::filesystem::path& path, ReportFormat format);

}  // namespace kinmetrics
