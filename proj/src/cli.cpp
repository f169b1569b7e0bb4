#include "kinmetrics/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <exception>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kinmetrics/baseline.hpp"
#include "kinmetrics/cohort.hpp"
#include "kinmetrics/csv.hpp"
#include "kinmetrics/ingest.hpp"
#include "kinmetrics/kinship.hpp"
#include "kinmetrics/pipeline.hpp"
#include "kinmetrics/ranking.hpp"
#include "kinmetrics/scoring.hpp"
#include "kinmetrics/synthgen.hpp"
#include "kinmetrics/version.hpp"

namespace fs = std::filesystem;

namespace kinmetrics {

namespace {

void log_info(const CliInvocation& inv, const std::string& message) {
    if (inv.verbosity >= 0) std::cerr << "kinmetrics: " << message << "\n";
}

void log_verbose(const CliInvocation& inv, const std::string& message) {
    if (inv.verbosity >= 1) std::cerr << "kinmetrics: " << message << "\n";
}

std::string iso_timestamp(std::chrono::system_clock::time_point tp) {
    std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct RunRecorder {
    std::chrono::system_clock::time_point started = std::chrono::system_clock::now();
    nlohmann::ordered_json config_echo = nlohmann::ordered_json::object();
    int skipped_publications = 0;
    std::vector<std::string> warnings;

    void echo_flat_config(const std::string& rendered) {
        std::istringstream in(rendered);
        std::string line;
        while (std::getline(in, line)) {
            size_t eq = line.find(" = ");
            if (eq == std::string::npos) continue;
            std::string value = line.substr(eq + 3);
            if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
                value = value.substr(1, value.size() - 2);
            config_echo[line.substr(0, eq)] = value;
        }
    }

    void write(const fs::path& out_dir) const {
        nlohmann::ordered_json j;
        j["version"] = kVersion;
        j["config_echo"] = config_echo;
        j["timestamps"] = {{"started", iso_timestamp(started)},
                           {"finished", iso_timestamp(std::chrono::system_clock::now())}};
        j["skipped_publications"] = skipped_publications;
        j["warnings"] = warnings;
        write_text_file((out_dir / "metadata.json").string(), j.dump(2) + "\n");
    }
};

DatasetBundle load_input(const CliInvocation& inv) {
    BundlePaths paths{inv.input_dir, inv.config_path};
    return load_bundle(paths);
}

fs::path require_out(const CliInvocation& inv) {
    if (inv.output_dir.empty())
        throw std::invalid_argument("--out is required for this subcommand");
    fs::create_directories(inv.output_dir);
    return inv.output_dir;
}

ReportFormat format_of(const CliInvocation& inv) {
    auto format = parse_report_format(inv.format);
    if (!format) throw std::invalid_argument("unknown format '" + inv.format + "'");
    return *format;
}

std::string table_file(const char* stem, ReportFormat format) {
    return std::string(stem) + (format == ReportFormat::Csv ? ".csv" : ".json");
}

void collect_warnings(const AnalysisResult& analysis, RunRecorder& recorder) {
    recorder.skipped_publications = analysis.scoring_stats.skipped_publications;
    if (analysis.scoring_stats.skipped_publications > 0)
        recorder.warnings.push_back(
            std::to_string(analysis.scoring_stats.skipped_publications) +
            " publication(s) skipped: no defined citation baseline in any category");
    if (analysis.scoring_stats.renormalized_publications > 0)
        recorder.warnings.push_back(
            std::to_string(analysis.scoring_stats.renormalized_publications) +
            " publication(s) used renormalized positional weights (3 or 4 authors)");
    if (analysis.dual_roles > 0)
        recorder.warnings.push_back(std::to_string(analysis.dual_roles) +
                                    " linked researcher(s) qualified as both child and parent");
}

SynthConfig synth_config_for(const CliInvocation& inv) {
    SynthConfig config;
    if (inv.config_path)
        config = parse_synth_config_text(read_text_file(inv.config_path->string()),
                                         inv.config_path->filename().string());
    if (inv.seed) config.seed = *inv.seed;
    return config;
}

int run_validate(const CliInvocation& inv) {
    try {
        DatasetBundle bundle = load_input(inv);
        std::cout << "0 violations\n";
        if (!inv.output_dir.empty()) {
            fs::create_directories(inv.output_dir);
            RunRecorder recorder;
            recorder.echo_flat_config(render_config_text(bundle.config));
            recorder.write(inv.output_dir);
        }
        return 0;
    } catch (const ValidationError& e) {
        std::cout << e.report.size() << " violations\n";
        for (const Violation& v : e.report) std::cout << v.code << ": " << v.detail << "\n";
        return 1;
    }
}

int run_score(const CliInvocation& inv) {
    DatasetBundle bundle = load_input(inv);
    fs::path out = require_out(inv);
    RunRecorder recorder;
    recorder.echo_flat_config(render_config_text(bundle.config));
    CitationBaseline baseline = compute_baselines(bundle.publications);
    ScoringStats stats;
    auto scores = score_all(bundle, baseline, &stats);
    recorder.skipped_publications = stats.skipped_publications;
    write_baselines(baseline, out / "baselines.csv");
    write_scores(scores, out / "scores.csv");
    recorder.write(out);
    log_info(inv, "scored " + std::to_string(scores.size()) + " researchers");
    return 0;
}

int run_rank(const CliInvocation& inv) {
    DatasetBundle bundle = load_input(inv);
    fs::path out = require_out(inv);
    RunRecorder recorder;
    recorder.echo_flat_config(render_config_text(bundle.config));
    CitationBaseline baseline = compute_baselines(bundle.publications);
    ScoringStats stats;
    auto scores = score_all(bundle, baseline, &stats);
    recorder.skipped_publications = stats.skipped_publications;
    auto ranked = rank_all(bundle, scores);
    write_rankings(ranked, out / "rankings.csv");
    recorder.write(out);
    log_info(inv, "ranked " + std::to_string(ranked.size()) + " eligible researchers");
    return 0;
}

int run_detect(const CliInvocation& inv) {
    DatasetBundle bundle = load_input(inv);
    fs::path out = require_out(inv);
    RunRecorder recorder;
    recorder.echo_flat_config(render_config_text(bundle.config));
    auto children = candidate_children(bundle);
    auto parents = candidate_parents(bundle);
    auto links = detect_links(children, parents, bundle);
    auto pairs = resolve_pairs(links, bundle);
    write_pairs(pairs, out / "pairs.csv");
    if (int duals = dual_role_count(links, children, parents); duals > 0)
        recorder.warnings.push_back(std::to_string(duals) +
                                    " linked researcher(s) qualified as both child and parent");
    recorder.write(out);
    log_info(inv, "detected " + std::to_string(links.size()) + " links, resolved " +
                      std::to_string(pairs.size()) + " pairs");
    return 0;
}

int run_compare(const CliInvocation& inv) {
    auto dimension = parse_report_dimension(inv.dimension);
    if (!dimension) throw std::invalid_argument("unknown dimension '" + inv.dimension + "'");
    DatasetBundle bundle = load_input(inv);
    fs::path out = require_out(inv);
    ReportFormat format = format_of(inv);
    RunRecorder recorder;
    recorder.echo_flat_config(render_config_text(bundle.config));
    AnalysisResult analysis = run_analysis(bundle);
    collect_warnings(analysis, recorder);
    CohortReport report = analysis_report(bundle, analysis, *dimension);
    std::string stem = std::string("comparison_") + report_dimension_token(*dimension);
    write_report(report, out / table_file(stem.c_str(), format), format);
    recorder.write(out);
    return 0;
}

int run_report(const CliInvocation& inv) {
    DatasetBundle bundle = load_input(inv);
    fs::path out = require_out(inv);
    ReportFormat format = format_of(inv);
    RunRecorder recorder;
    recorder.echo_flat_config(render_config_text(bundle.config));
    AnalysisResult analysis = run_analysis(bundle);
    collect_warnings(analysis, recorder);

    const std::pair<const char*, ReportDimension> tables[] = {
        {"table1", ReportDimension::Overall},   {"table2", ReportDimension::PerUda},
        {"table3", ReportDimension::PerArea},   {"table4", ReportDimension::Advancement},
        {"table5", ReportDimension::Parents},   {"table6", ReportDimension::Pairs},
    };
    for (const auto& [stem, dimension] : tables) {
        CohortReport report = analysis_report(bundle, analysis, dimension);
        write_report(report, out / table_file(stem, format), format);
        log_verbose(inv, std::string("wrote ") + table_file(stem, format));
    }
    write_pairs(analysis.pairs, out / "pairs.csv");
    recorder.write(out);
    log_info(inv, "report complete: " + std::to_string(analysis.pairs.size()) + " pairs, " +
                      std::to_string(analysis.ranked.size()) + " ranked researchers");
    return 0;
}

int run_synth(const CliInvocation& inv) {
    SynthConfig config = synth_config_for(inv);
    fs::path out = require_out(inv);
    RunRecorder recorder;
    recorder.echo_flat_config(render_synth_config_text(config));
    SynthResult synth = generate(config);
    write_bundle(synth.bundle, out);
    write_ground_truth(synth.ground_truth, out / "ground_truth.csv");
    recorder.write(out);
    log_info(inv, "generated " + std::to_string(synth.bundle.researchers.size()) +
                      " researchers, " + std::to_string(synth.bundle.publications.size()) +
                      " publications, " + std::to_string(synth.ground_truth.size()) +
                      " planted pairs");
    return 0;
}

int run_power(const CliInvocation& inv) {
    SynthConfig config = synth_config_for(inv);
    fs::path out = require_out(inv);
    ReportFormat format = format_of(inv);
    RunRecorder recorder;
    recorder.echo_flat_config(render_synth_config_text(config));
    recorder.config_echo["replications"] = std::to_string(inv.replications);
    PowerSummary summary = detection_power(config, inv.replications);
    if (format == ReportFormat::Csv) {
        std::string text = "replication,recall,false_positive_rate\n";
        for (int i = 0; i < summary.replications; ++i) {
            text += csv_join({std::to_string(i), format_double(summary.recalls[size_t(i)]),
                              format_double(summary.false_positive_rates[size_t(i)])});
        }
        text += csv_join({"mean", format_double(summary.mean_recall),
                          format_double(summary.mean_false_positive_rate)});
        write_text_file((out / "power.csv").string(), text);
    } else {
        nlohmann::ordered_json j;
        j["replications"] = summary.replications;
        j["mean_recall"] = summary.mean_recall;
        j["mean_false_positive_rate"] = summary.mean_false_positive_rate;
        j["recalls"] = summary.recalls;
        j["false_positive_rates"] = summary.false_positive_rates;
        write_text_file((out / "power.json").string(), j.dump(2) + "\n");
    }
    recorder.write(out);
    log_info(inv, "mean recall " + format_double(summary.mean_recall) + ", mean FP rate " +
                      format_double(summary.mean_false_positive_rate));
    return 0;
}

}  // namespace

int run(const CliInvocation& inv) {
    try {
        if (inv.subcommand == "validate") return run_validate(inv);
        if (inv.subcommand == "score") return run_score(inv);
        if (inv.subcommand == "rank") return run_rank(inv);
        if (inv.subcommand == "detect") return run_detect(inv);
        if (inv.subcommand == "compare") return run_compare(inv);
        if (inv.subcommand == "report") return run_report(inv);
        if (inv.subcommand == "synth") return run_synth(inv);
        if (inv.subcommand == "power") return run_power(inv);
        std::cerr << "kinmetrics: unknown subcommand '" << inv.subcommand << "'\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "kinmetrics: " << e.what() << "\n";
        for (const Violation& v : e.report) std::cerr << "  " << v.code << ": " << v.detail << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "kinmetrics: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "kinmetrics: " << e.what() << "\n";
        return 1;
    }
}

int run_main(int argc, const char* const* argv) {
    CLI::App app{"Research productivity ranking and intra-university kinship screening"};
    app.require_subcommand(1);

    CliInvocation inv;
    std::string seed_text;

    auto add_common = [&](CLI::App* cmd, bool needs_in, bool needs_out) {
        if (needs_in) cmd->add_option("--in", inv.input_dir, "input dataset directory")->required();
        auto* out = cmd->add_option("--out", inv.output_dir, "output directory");
        if (needs_out) out->required();
        cmd->add_option("--config", inv.config_path, "configuration file override");
        cmd->add_option("--format", inv.format, "output format: csv or json");
        cmd->add_option("--seed", seed_text, "seed override");
        cmd->add_flag_callback("--quiet", [&] { inv.verbosity = -1; }, "suppress progress logs");
        cmd->add_flag_callback("--verbose", [&] { inv.verbosity = 1; }, "extra progress logs");
    };

    add_common(app.add_subcommand("validate", "check a dataset, print violations"), true, false);
    add_common(app.add_subcommand("score", "write productivity scores and citation baselines"),
               true, true);
    add_common(app.add_subcommand("rank", "write percentile rankings"), true, true);
    add_common(app.add_subcommand("detect", "write resolved kinship pairs"), true, true);
    auto* compare = app.add_subcommand("compare", "write one comparison table");
    add_common(compare, true, true);
    compare->add_option("--dimension", inv.dimension,
                        "overall | per_uda | per_area | advancement | parents | pairs");
    add_common(app.add_subcommand("report", "run the full chain, write all tables"), true, true);
    add_common(app.add_subcommand("synth", "generate a synthetic dataset"), false, true);
    auto* power = app.add_subcommand("power", "detection power study over replications");
    add_common(power, false, true);
    power->add_option("--replications", inv.replications, "number of generated datasets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!seed_text.empty()) {
        try {
            size_t consumed = 0;
            inv.seed = std::stoull(seed_text, &consumed);
            if (consumed != seed_text.size()) throw std::invalid_argument(seed_text);
        } catch (const std::exception&) {
            std::cerr << "kinmetrics: --seed must be a non-negative integer\n";
            return 2;
        }
    }
    inv.subcommand = app.get_subcommands().front()->get_name();
    return run(inv);
}

}  // namespace kinmetrics
