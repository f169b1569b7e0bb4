#include "kinmetrics/ingest.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "kinmetrics/cohort.hpp"
#include "kinmetrics/csv.hpp"

namespace fs = std::filesystem;

namespace kinmetrics {

namespace {

std::string loc(const CsvReader& reader) {
    return reader.source() + ":" + std::to_string(reader.record_line());
}

void expect_header(CsvReader& reader, const std::vector<std::string>& expected) {
    auto row = reader.next();
    if (!row || *row != expected) {
        std::string want;
        for (size_t i = 0; i < expected.size(); ++i) {
            if (i) want.push_back(',');
            want += expected[i];
        }
        throw ParseError(reader.source() + ":1: expected header '" + want + "'");
    }
}

void expect_columns(const CsvReader& reader, const std::vector<std::string>& row, size_t n) {
    if (row.size() != n)
        throw ParseError(loc(reader) + ": expected " + std::to_string(n) + " columns, got " +
                         std::to_string(row.size()));
}

CsvReader open_csv(const fs::path& path) {
    return CsvReader(read_text_file(path.string()), path.filename().string());
}

std::vector<std::string> split_semicolons(std::string_view s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t end = s.find(';', start);
        if (end == std::string_view::npos) end = s.size();
        if (end > start) out.emplace_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string join_semicolons(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(';');
        out += parts[i];
    }
    return out;
}

struct ConfigValue {
    std::string raw;
    int line = 0;
};

}  // namespace

ValidationError::ValidationError(ValidationReport r)
    : std::runtime_error("dataset failed validation with " + std::to_string(r.size()) +
                         " violation(s)"),
      report(std::move(r)) {}

ObservationConfig parse_config_text(const std::string& text, const std::string& source_name) {
    std::map<std::string, ConfigValue> values;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": expected key = value");
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
        if (key.empty())
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": empty key");
        if (!values.emplace(key, ConfigValue{value, line_no}).second)
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": duplicate key '" +
                             key + "'");
    }

    ObservationConfig config;
    auto take = [&](const std::string& key) -> std::optional<ConfigValue> {
        auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        ConfigValue v = it->second;
        values.erase(it);
        return v;
    };
    auto ctx = [&](const std::string& key, const ConfigValue& v) {
        return source_name + ":" + std::to_string(v.line) + ": " + key;
    };
    auto take_int = [&](const std::string& key, int& out) {
        if (auto v = take(key)) out = parse_int_field(v->raw, ctx(key, *v));
    };
    auto take_double = [&](const std::string& key, double& out) {
        if (auto v = take(key)) out = parse_double_field(v->raw, ctx(key, *v));
    };
    auto take_bool = [&](const std::string& key, bool& out) {
        if (auto v = take(key)) {
            if (v->raw == "true") out = true;
            else if (v->raw == "false") out = false;
            else throw ParseError(ctx(key, *v) + ": expected true or false");
        }
    };

    take_int("window_start", config.window_start);
    take_int("window_end", config.window_end);
    take_int("entry_window_start", config.entry_window_start);
    take_int("entry_window_end", config.entry_window_end);
    if (auto v = take("census_date")) config.census_date = v->raw;
    take_int("min_faculty_years", config.min_faculty_years);
    take_double("sds_publishing_share_threshold", config.sds_publishing_share_threshold);
    take_double("top_tier_fraction", config.top_tier_fraction);
    take_double("top_decile_fraction", config.top_decile_fraction);
    take_double("absolute_top_fraction", config.absolute_top_fraction);
    take_double("bottom_tier_fraction", config.bottom_tier_fraction);
    take_double("bottom_decile_fraction", config.bottom_decile_fraction);
    if (auto v = take("advancement_horizon"))
        config.advancement_horizon = parse_int_field(v->raw, ctx("advancement_horizon", *v));
    take_int("min_uda_children", config.min_uda_children);
    take_bool("use_welch", config.use_welch);

    if (!values.empty())
        throw ParseError(source_name + ":" + std::to_string(values.begin()->second.line) +
                         ": unknown key '" + values.begin()->first + "'");

    if (config.window_start > config.window_end)
        throw ParseError(source_name + ": window_start > window_end");
    if (config.entry_window_start > config.entry_window_end)
        throw ParseError(source_name + ": entry_window_start > entry_window_end");
    for (auto [name, f] : std::initializer_list<std::pair<const char*, double>>{
             {"sds_publishing_share_threshold", config.sds_publishing_share_threshold},
             {"top_tier_fraction", config.top_tier_fraction},
             {"top_decile_fraction", config.top_decile_fraction},
             {"absolute_top_fraction", config.absolute_top_fraction},
             {"bottom_tier_fraction", config.bottom_tier_fraction},
             {"bottom_decile_fraction", config.bottom_decile_fraction}}) {
        if (!(f > 0.0 && f < 1.0))
            throw ParseError(source_name + ": " + name + " must lie in (0,1)");
    }
    if (config.absolute_top_fraction > config.top_decile_fraction ||
        config.top_decile_fraction > config.top_tier_fraction)
        throw ParseError(source_name + ": top tier fractions must be nested");
    if (config.bottom_decile_fraction > config.bottom_tier_fraction)
        throw ParseError(source_name + ": bottom tier fractions must be nested");
    if (config.min_faculty_years < 1)
        throw ParseError(source_name + ": min_faculty_years must be >= 1");
    return config;
}

std::string render_config_text(const ObservationConfig& c) {
    std::ostringstream out;
    out << "window_start = " << c.window_start << "\n";
    out << "window_end = " << c.window_end << "\n";
    out << "entry_window_start = " << c.entry_window_start << "\n";
    out << "entry_window_end = " << c.entry_window_end << "\n";
    out << "census_date = \"" << c.census_date << "\"\n";
    out << "min_faculty_years = " << c.min_faculty_years << "\n";
    out << "sds_publishing_share_threshold = " << format_double(c.sds_publishing_share_threshold)
        << "\n";
    out << "top_tier_fraction = " << format_double(c.top_tier_fraction) << "\n";
    out << "top_decile_fraction = " << format_double(c.top_decile_fraction) << "\n";
    out << "absolute_top_fraction = " << format_double(c.absolute_top_fraction) << "\n";
    out << "bottom_tier_fraction = " << format_double(c.bottom_tier_fraction) << "\n";
    out << "bottom_decile_fraction = " << format_double(c.bottom_decile_fraction) << "\n";
    if (c.advancement_horizon) out << "advancement_horizon = " << *c.advancement_horizon << "\n";
    out << "min_uda_children = " << c.min_uda_children << "\n";
    out << "use_welch = " << (c.use_welch ? "true" : "false") << "\n";
    return out.str();
}

DatasetBundle load_bundle(const BundlePaths& paths) {
    DatasetBundle bundle;
    bundle.config = parse_config_text(read_text_file(paths.config().string()),
                                      paths.config().filename().string());

    {
        CsvReader reader = open_csv(paths.region_area());
        expect_header(reader, {"region", "area"});
        while (auto row = reader.next()) {
            expect_columns(reader, *row, 2);
            auto area = parse_area_token((*row)[1]);
            if (!area)
                throw ParseError(loc(reader) + ": unknown area '" + (*row)[1] + "'");
            bundle.config.region_area_map[(*row)[0]] = *area;
        }
    }
    {
        std::string text = read_text_file(paths.surnames_national().string());
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::string surname = normalize_surname(line);
            if (!surname.empty()) bundle.config.national_surname_exclusions.insert(surname);
        }
    }
    {
        CsvReader reader = open_csv(paths.surnames_regional());
        expect_header(reader, {"region", "surname"});
        while (auto row = reader.next()) {
            expect_columns(reader, *row, 2);
            std::string surname = normalize_surname((*row)[1]);
            if (surname.empty())
                throw ParseError(loc(reader) + ": empty surname");
            bundle.config.regional_surname_exclusions[(*row)[0]].insert(surname);
        }
    }
    {
        CsvReader reader = open_csv(paths.taxonomy());
        expect_header(reader, {"sds_code", "uda_code", "life_science"});
        while (auto row = reader.next()) {
            expect_columns(reader, *row, 3);
            const std::string& flag = (*row)[2];
            if (flag != "0" && flag != "1")
                throw ParseError(loc(reader) + ": life_science must be 0 or 1");
            if (!bundle.taxonomy.entries
                     .emplace((*row)[0], TaxonomyEntry{(*row)[1], flag == "1"})
                     .second)
                throw ParseError(loc(reader) + ": duplicate sds_code '" + (*row)[0] + "'");
        }
    }

    std::unordered_map<std::string, size_t> researcher_pos;
    {
        CsvReader reader = open_csv(paths.roster());
        expect_header(reader, {"researcher_id", "full_name", "surname", "university_id", "region",
                               "sds_code", "hire_year", "leave_year"});
        while (auto row = reader.next()) {
            expect_columns(reader, *row, 8);
            Researcher r;
            r.researcher_id = (*row)[0];
            r.full_name = (*row)[1];
            r.surname = normalize_surname((*row)[2]);
            r.university_id = (*row)[3];
            r.region = (*row)[4];
            r.sds_code = (*row)[5];
            r.hire_year = parse_int_field((*row)[6], loc(reader) + ": hire_year");
            if (!(*row)[7].empty())
                r.leave_year = parse_int_field((*row)[7], loc(reader) + ": leave_year");
            researcher_pos.emplace(r.researcher_id, bundle.researchers.size());
            bundle.researchers.push_back(std::move(r));
        }
    }
    {
        CsvReader reader = open_csv(paths.rank_events());
        expect_header(reader, {"researcher_id", "year", "rank"});
        while (auto row = reader.next()) {
            expect_columns(reader, *row, 3);
            auto it = researcher_pos.find((*row)[0]);
            if (it == researcher_pos.end())
                throw ParseError(loc(reader) + ": rank event for unknown researcher '" + (*row)[0] +
                                 "'");
            auto rank = parse_rank_token((*row)[2]);
            if (!rank)
                throw ParseError(loc(reader) + ": unknown rank token '" + (*row)[2] + "'");
            int year = parse_int_field((*row)[1], loc(reader) + ": year");
            bundle.researchers[it->second].rank_events.push_back(RankEvent{year, *rank});
        }
    }
    for (Researcher& r : bundle.researchers) {
        std::sort(r.rank_events.begin(), r.rank_events.end(),
                  [](const RankEvent& a, const RankEvent& b) { return a.year < b.year; });
    }

    std::unordered_map<std::string, size_t> pub_pos;
    {
        CsvReader reader = open_csv(paths.publications());
        expect_header(reader, {"pub_id", "year", "citations", "categories"});
        while (auto row = reader.next()) {
            expect_columns(reader, *row, 4);
            Publication p;
            p.pub_id = (*row)[0];
            p.year = parse_int_field((*row)[1], loc(reader) + ": year");
            p.citations = parse_int_field((*row)[2], loc(reader) + ": citations");
            if (p.citations < 0)
                throw ParseError(loc(reader) + ": citations must be >= 0");
            p.categories = split_semicolons((*row)[3]);
            pub_pos.emplace(p.pub_id, bundle.publications.size());
            bundle.publications.push_back(std::move(p));
        }
    }
    {
        CsvReader reader = open_csv(paths.authorships());
        expect_header(reader, {"pub_id", "position", "author_ref", "university_id"});
        while (auto row = reader.next()) {
            expect_columns(reader, *row, 4);
            auto it = pub_pos.find((*row)[0]);
            if (it == pub_pos.end())
                throw ParseError(loc(reader) + ": authorship for unknown publication '" +
                                 (*row)[0] + "'");
            Authorship a;
            a.position = parse_int_field((*row)[1], loc(reader) + ": position");
            a.author_ref = (*row)[2];
            a.university_id = (*row)[3];
            bundle.publications[it->second].authorships.push_back(std::move(a));
        }
    }
    for (Publication& p : bundle.publications) {
        std::sort(p.authorships.begin(), p.authorships.end(),
                  [](const Authorship& a, const Authorship& b) { return a.position < b.position; });
    }

    std::sort(bundle.researchers.begin(), bundle.researchers.end(),
              [](const Researcher& a, const Researcher& b) {
                  return a.researcher_id < b.researcher_id;
              });
    std::sort(bundle.publications.begin(), bundle.publications.end(),
              [](const Publication& a, const Publication& b) { return a.pub_id < b.pub_id; });

    ValidationReport violations =
        validate_dataset(bundle.researchers, bundle.publications, bundle.taxonomy, bundle.config);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return bundle;
}

void write_bundle(const DatasetBundle& bundle, const fs::path& dir) {
    fs::create_directories(dir);
    BundlePaths paths{dir, std::nullopt};

    std::string out = "researcher_id,full_name,surname,university_id,region,sds_code,hire_year,leave_year\n";
    for (const Researcher& r : bundle.researchers) {
        out += csv_join({csv_quote(r.researcher_id), csv_quote(r.full_name), csv_quote(r.surname),
                         csv_quote(r.university_id), csv_quote(r.region), csv_quote(r.sds_code),
                         std::to_string(r.hire_year),
                         r.leave_year ? std::to_string(*r.leave_year) : std::string()});
    }
    write_text_file(paths.roster().string(), out);

    out = "researcher_id,year,rank\n";
    for (const Researcher& r : bundle.researchers)
        for (const RankEvent& e : r.rank_events)
            out += csv_join({csv_quote(r.researcher_id), std::to_string(e.year), rank_token(e.rank)});
    write_text_file(paths.rank_events().string(), out);

    out = "pub_id,year,citations,categories\n";
    for (const Publication& p : bundle.publications)
        out += csv_join({csv_quote(p.pub_id), std::to_string(p.year), std::to_string(p.citations),
                         csv_quote(join_semicolons(p.categories))});
    write_text_file(paths.publications().string(), out);

    out = "pub_id,position,author_ref,university_id\n";
    for (const Publication& p : bundle.publications)
        for (const Authorship& a : p.authorships)
            out += csv_join({csv_quote(p.pub_id), std::to_string(a.position),
                             csv_quote(a.author_ref), csv_quote(a.university_id)});
    write_text_file(paths.authorships().string(), out);

    out = "sds_code,uda_code,life_science\n";
    for (const auto& [sds, entry] : bundle.taxonomy.entries)
        out += csv_join({csv_quote(sds), csv_quote(entry.uda_code), entry.life_science ? "1" : "0"});
    write_text_file(paths.taxonomy().string(), out);

    out.clear();
    for (const std::string& s : bundle.config.national_surname_exclusions) out += s + "\n";
    write_text_file(paths.surnames_national().string(), out);

    out = "region,surname\n";
    for (const auto& [region, surnames] : bundle.config.regional_surname_exclusions)
        for (const std::string& s : surnames)
            out += csv_join({csv_quote(region), csv_quote(s)});
    write_text_file(paths.surnames_regional().string(), out);

    out = "region,area\n";
    for (const auto& [region, area] : bundle.config.region_area_map)
        out += csv_join({csv_quote(region), area_token(area)});
    write_text_file(paths.region_area().string(), out);

    write_text_file(paths.config().string(), render_config_text(bundle.config));
}

std::optional<ReportFormat> parse_report_format(std::string_view token) {
    if (token == "csv") return ReportFormat::Csv;
    if (token == "json") return ReportFormat::Json;
    return std::nullopt;
}

namespace {

const std::vector<std::string> kGroupHeader = {
    "group",       "observations",     "avg_percentile_rank", "pct_no_publications",
    "pct_no_citations", "pct_above_median", "pct_top20",       "pct_top10",
    "pct_absolute_top", "pct_bottom10",     "pct_bottom20"};

const std::vector<std::string> kTestHeader = {"group_a", "group_b", "t_statistic",
                                              "degrees_of_freedom", "p_two_tailed", "degenerate"};

std::string opt_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::optional<double> parse_opt_field(const std::string& s, const std::string& context) {
    if (s.empty()) return std::nullopt;
    return parse_double_field(s, context);
}

std::string report_to_csv(const CohortReport& report) {
    std::string out;
    out += csv_join({"#report", csv_quote(report.dimension)});
    out += csv_join({"#groups"});
    out += csv_join(kGroupHeader);
    for (const GroupStats& g : report.groups) {
        out += csv_join({csv_quote(g.label), std::to_string(g.n_observations),
                         opt_field(g.avg_percentile), opt_field(g.pct_no_publications),
                         opt_field(g.pct_no_citations), opt_field(g.pct_above_median),
                         opt_field(g.pct_top20), opt_field(g.pct_top10),
                         opt_field(g.pct_absolute_top), opt_field(g.pct_bottom10),
                         opt_field(g.pct_bottom20)});
    }
    out += csv_join({"#tests"});
    out += csv_join(kTestHeader);
    for (const ReportTest& t : report.tests) {
        out += csv_join({csv_quote(t.group_a), csv_quote(t.group_b),
                         format_double(t.result.t_statistic),
                         format_double(t.result.degrees_of_freedom),
                         format_double(t.result.p_two_tailed), t.result.degenerate ? "1" : "0"});
    }
    out += csv_join({"#metadata"});
    out += csv_join({"key", "value"});
    for (const auto& [k, v] : report.metadata) out += csv_join({csv_quote(k), csv_quote(v)});
    return out;
}

CohortReport report_from_csv(const std::string& text, const std::string& source) {
    CsvReader reader(text, source);
    CohortReport report;
    auto row = reader.next();
    if (!row || row->size() != 2 || (*row)[0] != "#report")
        throw ParseError(source + ": missing #report record");
    report.dimension = (*row)[1];
    row = reader.next();
    if (!row || *row != std::vector<std::string>{"#groups"})
        throw ParseError(source + ": missing #groups section");
    expect_header(reader, kGroupHeader);
    while ((row = reader.next())) {
        if (row->size() == 1 && (*row)[0] == "#tests") break;
        expect_columns(reader, *row, kGroupHeader.size());
        GroupStats g;
        g.label = (*row)[0];
        g.n_observations = parse_int_field((*row)[1], loc(reader) + ": observations");
        g.avg_percentile = parse_opt_field((*row)[2], loc(reader));
        g.pct_no_publications = parse_opt_field((*row)[3], loc(reader));
        g.pct_no_citations = parse_opt_field((*row)[4], loc(reader));
        g.pct_above_median = parse_opt_field((*row)[5], loc(reader));
        g.pct_top20 = parse_opt_field((*row)[6], loc(reader));
        g.pct_top10 = parse_opt_field((*row)[7], loc(reader));
        g.pct_absolute_top = parse_opt_field((*row)[8], loc(reader));
        g.pct_bottom10 = parse_opt_field((*row)[9], loc(reader));
        g.pct_bottom20 = parse_opt_field((*row)[10], loc(reader));
        report.groups.push_back(std::move(g));
    }
    if (!row) throw ParseError(source + ": missing #tests section");
    expect_header(reader, kTestHeader);
    while ((row = reader.next())) {
        if (row->size() == 1 && (*row)[0] == "#metadata") break;
        expect_columns(reader, *row, kTestHeader.size());
        ReportTest t;
        t.group_a = (*row)[0];
        t.group_b = (*row)[1];
        t.result.t_statistic = parse_double_field((*row)[2], loc(reader) + ": t");
        t.result.degrees_of_freedom = parse_double_field((*row)[3], loc(reader) + ": df");
        t.result.p_two_tailed = parse_double_field((*row)[4], loc(reader) + ": p");
        t.result.degenerate = (*row)[5] == "1";
        report.tests.push_back(std::move(t));
    }
    if (!row) throw ParseError(source + ": missing #metadata section");
    expect_header(reader, {"key", "value"});
    while ((row = reader.next())) {
        expect_columns(reader, *row, 2);
        report.metadata.emplace_back((*row)[0], (*row)[1]);
    }
    return report;
}

nlohmann::ordered_json stats_to_json(const GroupStats& g) {
    nlohmann::ordered_json j;
    j["observations"] = g.n_observations;
    auto set = [&](const char* key, const std::optional<double>& v) {
        if (v) j[key] = *v; else j[key] = nullptr;
    };
    set("avg_percentile_rank", g.avg_percentile);
    set("pct_no_publications", g.pct_no_publications);
    set("pct_no_citations", g.pct_no_citations);
    set("pct_above_median", g.pct_above_median);
    set("pct_top20", g.pct_top20);
    set("pct_top10", g.pct_top10);
    set("pct_absolute_top", g.pct_absolute_top);
    set("pct_bottom10", g.pct_bottom10);
    set("pct_bottom20", g.pct_bottom20);
    return j;
}

std::string report_to_json(const CohortReport& report) {
    nlohmann::ordered_json j;
    j["dimension"] = report.dimension;
    nlohmann::ordered_json groups = nlohmann::ordered_json::object();
    for (const GroupStats& g : report.groups) groups[g.label] = stats_to_json(g);
    j["groups"] = std::move(groups);
    nlohmann::ordered_json tests = nlohmann::ordered_json::array();
    for (const ReportTest& t : report.tests) {
        nlohmann::ordered_json jt;
        jt["group_a"] = t.group_a;
        jt["group_b"] = t.group_b;
        jt["t_statistic"] = t.result.t_statistic;
        jt["degrees_of_freedom"] = t.result.degrees_of_freedom;
        jt["p_two_tailed"] = t.result.p_two_tailed;
        jt["degenerate"] = t.result.degenerate;
        tests.push_back(std::move(jt));
    }
    j["tests"] = std::move(tests);
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
    return j.dump(2) + "\n";
}

CohortReport report_from_json(const std::string& text, const std::string& source) {
    CohortReport report;
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source + ": " + e.what());
    }
    report.dimension = j.at("dimension").get<std::string>();
    for (const auto& [label, jg] : j.at("groups").items()) {
        GroupStats g;
        g.label = label;
        g.n_observations = jg.at("observations").get<int>();
        auto get = [&](const char* key) -> std::optional<double> {
            const auto& v = jg.at(key);
            if (v.is_null()) return std::nullopt;
            return v.get<double>();
        };
        g.avg_percentile = get("avg_percentile_rank");
        g.pct_no_publications = get("pct_no_publications");
        g.pct_no_citations = get("pct_no_citations");
        g.pct_above_median = get("pct_above_median");
        g.pct_top20 = get("pct_top20");
        g.pct_top10 = get("pct_top10");
        g.pct_absolute_top = get("pct_absolute_top");
        g.pct_bottom10 = get("pct_bottom10");
        g.pct_bottom20 = get("pct_bottom20");
        report.groups.push_back(std::move(g));
    }
    for (const auto& jt : j.at("tests")) {
        ReportTest t;
        t.group_a = jt.at("group_a").get<std::string>();
        t.group_b = jt.at("group_b").get<std::string>();
        t.result.t_statistic = jt.at("t_statistic").get<double>();
        t.result.degrees_of_freedom = jt.at("degrees_of_freedom").get<double>();
        t.result.p_two_tailed = jt.at("p_two_tailed").get<double>();
        t.result.degenerate = jt.at("degenerate").get<bool>();
        report.tests.push_back(std::move(t));
    }
    for (const auto& [k, v] : j.at("metadata").items())
        report.metadata.emplace_back(k, v.get<std::string>());
    return report;
}

}  // namespace

void write_report(const CohortReport& report, const fs::path& path, ReportFormat format) {
    write_text_file(path.string(), format == ReportFormat::Csv ? report_to_csv(report)
                                                               : report_to_json(report));
}

CohortReport read_report(const fs::path& path, ReportFormat format) {
    std::string text = read_text_file(path.string());
    return format == ReportFormat::Csv ? report_from_csv(text, path.filename().string())
                                       : report_from_json(text, path.filename().string());
}

}  // namespace kinmetrics
