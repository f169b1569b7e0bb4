#pragma once
// Core domain types shared by every other module. All types are plain value
// types, immutable by convention after construction, and safe to share across
// threads. The only computation here is invariant validation.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kinmetrics {

enum class Rank { Assistant = 0, Associate = 1, Full = 2 };

const char* rank_token(Rank r);                       // "ASSISTANT" / "ASSOCIATE" / "FULL"
std::optional<Rank> parse_rank_token(std::string_view token);

struct RankEvent {
    int year = 0;
    Rank rank = Rank::Assistant;
    auto operator<=>(const RankEvent&) const = default;
};

struct Researcher {
    std::string researcher_id;
    std::string full_name;
    std::string surname;        // normalized: uppercase, diacritics folded
    std::string university_id;
    std::string region;
    std::string sds_code;
    std::vector<RankEvent> rank_events;  // sorted ascending by year
    int hire_year = 0;
    std::optional<int> leave_year;
    bool operator==(const Researcher&) const = default;
};

struct TaxonomyEntry {
    std::string uda_code;
    bool life_science = false;
    bool operator==(const TaxonomyEntry&) const = default;
};

struct FieldTaxonomy {
    std::map<std::string, TaxonomyEntry> entries;  // sds_code -> entry

    bool contains(const std::string& sds) const { return entries.count(sds) > 0; }
    const std::string& uda_of(const std::string& sds) const { return entries.at(sds).uda_code; }
    bool is_life_science(const std::string& sds) const {
        auto it = entries.find(sds);
        return it != entries.end() && it->second.life_science;
    }
    bool operator==(const FieldTaxonomy&) const = default;
};

inline constexpr std::string_view kExternalAuthorPrefix = "EXT:";

struct Authorship {
    int position = 0;            // 1-based byline position
    std::string author_ref;      // researcher_id or "EXT:<token>"
    std::string university_id;
    bool is_external() const { return author_ref.rfind(kExternalAuthorPrefix, 0) == 0; }
    bool operator==(const Authorship&) const = default;
};

struct Publication {
    std::string pub_id;
    int year = 0;
    int citations = 0;                     // snapshot at census date
    std::vector<std::string> categories;   // subject-category codes, non-empty
    std::vector<Authorship> authorships;   // positions exactly 1..s
    bool operator==(const Publication&) const = default;
};

enum class Area { North, Centre, South };

const char* area_token(Area a);
std::optional<Area> parse_area_token(std::string_view token);

struct ObservationConfig {
    int window_start = 2004;
    int window_end = 2008;
    int entry_window_start = 2001;
    int entry_window_end = 2003;
    std::string census_date = "2009-06-30";   // metadata only
    int min_faculty_years = 3;
    double sds_publishing_share_threshold = 0.5;
    double top_tier_fraction = 0.20;
    double top_decile_fraction = 0.10;
    double absolute_top_fraction = 0.01;
    double bottom_tier_fraction = 0.20;
    double bottom_decile_fraction = 0.10;
    std::optional<int> advancement_horizon;   // defaults to window_end
    int min_uda_children = 10;                // "Other" bucket threshold in the per-UDA table
    bool use_welch = false;
    std::set<std::string> national_surname_exclusions;
    std::map<std::string, std::set<std::string>> regional_surname_exclusions;
    std::map<std::string, Area> region_area_map;

    int advancement_horizon_or_default() const {
        return advancement_horizon.value_or(window_end);
    }
    bool operator==(const ObservationConfig&) const = default;
};

struct Violation {
    std::string code;    // stable machine-readable tag, e.g. "dangling_researcher_ref"
    std::string detail;
    bool operator==(const Violation&) const = default;
    auto operator<=>(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

// Uppercases ASCII, folds common Latin diacritics to ASCII, collapses runs of
// whitespace to a single space and trims. Idempotent. Applied once at
// ingestion so every later surname comparison is plain string equality.
std::string normalize_surname(std::string_view raw);

// Number of years y in [window_start, window_end] with hire_year <= y and
// (no leave_year or leave_year >= y).
int faculty_years(const Researcher& r, int window_start, int window_end);

// Rank held in `year`: the rank of the latest event with event.year <= year.
// nullopt when every event is later than `year`.
std::optional<Rank> rank_at(const Researcher& r, int year);

// Like rank_at, but falls back to the earliest recorded rank when the history
// starts after `year`. rank_events must be non-empty.
Rank rank_at_or_first(const Researcher& r, int year);

// Structural checks over a full dataset. Returns all problems found; an empty
// report means downstream operations will not hit structural errors. Never
// throws; ordering of the report is deterministic for a given input order,
// and the multiset of violations does not depend on record order.
ValidationReport validate_dataset(const std::vector<Researcher>& researchers,
                                  const std::vector<Publication>& publications,
                                  const FieldTaxonomy& taxonomy,
                                  const ObservationConfig& config);

}  // namespace kinmetrics
