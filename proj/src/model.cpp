#include "kinmetrics/model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace kinmetrics {

const char* rank_token(Rank r) {
    switch (r) {
        case Rank::Assistant: return "ASSISTANT";
        case Rank::Associate: return "ASSOCIATE";
        case Rank::Full: return "FULL";
    }
    return "?";
}

std::optional<Rank> parse_rank_token(std::string_view token) {
    if (token == "ASSISTANT") return Rank::Assistant;
    if (token == "ASSOCIATE") return Rank::Associate;
    if (token == "FULL") return Rank::Full;
    return std::nullopt;
}

const char* area_token(Area a) {
    switch (a) {
        case Area::North: return "North";
        case Area::Centre: return "Centre";
        case Area::South: return "South";
    }
    return "?";
}

std::optional<Area> parse_area_token(std::string_view token) {
    if (token == "North") return Area::North;
    if (token == "Centre") return Area::Centre;
    if (token == "South") return Area::South;
    return std::nullopt;
}

namespace {

// Fold one Unicode codepoint to its ASCII base letter(s), or empty when the
// codepoint has no mapping here (caller keeps it verbatim). Covers the
// Latin-1 Supplement and the Latin Extended-A letters that occur in European
// surnames.
const char* fold_codepoint(uint32_t cp) {
    // Lowercase Latin-1 letters share the table with their uppercase forms.
    if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) cp -= 0x20;
    switch (cp) {
        case 0xC0: case 0xC1: case 0xC2: case 0xC3: case 0xC4: case 0xC5: return "A";
        case 0xC6: return "AE";
        case 0xC7: return "C";
        case 0xC8: case 0xC9: case 0xCA: case 0xCB: return "E";
        case 0xCC: case 0xCD: case 0xCE: case 0xCF: return "I";
        case 0xD0: return "D";
        case 0xD1: return "N";
        case 0xD2: case 0xD3: case 0xD4: case 0xD5: case 0xD6: case 0xD8: return "O";
        case 0xD9: case 0xDA: case 0xDB: case 0xDC: return "U";
        case 0xDD: return "Y";
        case 0xDF: return "SS";
        // Latin Extended-A, upper/lower pairs.
        case 0x100: case 0x101: case 0x102: case 0x103: case 0x104: case 0x105: return "A";
        case 0x106: case 0x107: case 0x108: case 0x109: case 0x10C: case 0x10D: return "C";
        case 0x10E: case 0x10F: case 0x110: case 0x111: return "D";
        case 0x112: case 0x113: case 0x116: case 0x117: case 0x118: case 0x119:
        case 0x11A: case 0x11B: return "E";
        case 0x11E: case 0x11F: case 0x120: case 0x121: return "G";
        case 0x128: case 0x129: case 0x12A: case 0x12B: case 0x130: case 0x131: return "I";
        case 0x141: case 0x142: return "L";
        case 0x143: case 0x144: case 0x147: case 0x148: return "N";
        case 0x14C: case 0x14D: case 0x150: case 0x151: return "O";
        case 0x152: case 0x153: return "OE";
        case 0x154: case 0x155: case 0x158: case 0x159: return "R";
        case 0x15A: case 0x15B: case 0x15E: case 0x15F: case 0x160: case 0x161: return "S";
        case 0x162: case 0x163: case 0x164: case 0x165: return "T";
        case 0x168: case 0x169: case 0x16A: case 0x16B: case 0x16E: case 0x16F:
        case 0x170: case 0x171: return "U";
        case 0x179: case 0x17A: case 0x17B: case 0x17C: case 0x17D: case 0x17E: return "Z";
        default: return "";
    }
}

}  // namespace

std::string normalize_surname(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    auto push = [&](char c) {
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    };
    size_t i = 0;
    while (i < raw.size()) {
        unsigned char b = static_cast<unsigned char>(raw[i]);
        uint32_t cp = 0;
        size_t len = 1;
        if (b < 0x80) {
            cp = b;
        } else if ((b & 0xE0) == 0xC0 && i + 1 < raw.size()) {
            cp = (uint32_t(b & 0x1F) << 6) | (raw[i + 1] & 0x3F);
            len = 2;
        } else if ((b & 0xF0) == 0xE0 && i + 2 < raw.size()) {
            cp = (uint32_t(b & 0x0F) << 12) | (uint32_t(raw[i + 1] & 0x3F) << 6) |
                 (raw[i + 2] & 0x3F);
            len = 3;
        } else if ((b & 0xF8) == 0xF0 && i + 3 < raw.size()) {
            cp = (uint32_t(b & 0x07) << 18) | (uint32_t(raw[i + 1] & 0x3F) << 12) |
                 (uint32_t(raw[i + 2] & 0x3F) << 6) | (raw[i + 3] & 0x3F);
            len = 4;
        } else {
            cp = b;  // invalid byte, pass through
        }
        if (cp < 0x80) {
            char c = static_cast<char>(cp);
            if (std::isspace(static_cast<unsigned char>(c))) {
                pending_space = true;
            } else {
                push(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            }
        } else {
            const char* folded = fold_codepoint(cp);
            if (*folded) {
                for (const char* p = folded; *p; ++p) push(*p);
            } else {
                // Unmapped codepoint: keep original bytes.
                if (pending_space && !out.empty()) out.push_back(' ');
                pending_space = false;
                out.append(raw.substr(i, len));
            }
        }
        i += len;
    }
    return out;
}

int faculty_years(const Researcher& r, int window_start, int window_end) {
    int count = 0;
    for (int y = window_start; y <= window_end; ++y) {
        if (r.hire_year <= y && (!r.leave_year || *r.leave_year >= y)) ++count;
    }
    return count;
}

std::optional<Rank> rank_at(const Researcher& r, int year) {
    std::optional<Rank> held;
    for (const RankEvent& e : r.rank_events) {
        if (e.year > year) break;
        held = e.rank;
    }
    return held;
}

Rank rank_at_or_first(const Researcher& r, int year) {
    if (auto held = rank_at(r, year)) return *held;
    return r.rank_events.front().rank;
}

ValidationReport validate_dataset(const std::vector<Researcher>& researchers,
                                  const std::vector<Publication>& publications,
                                  const FieldTaxonomy& taxonomy,
                                  const ObservationConfig& config) {
    ValidationReport report;
    auto add = [&](std::string code, std::string detail) {
        report.push_back(Violation{std::move(code), std::move(detail)});
    };

    std::unordered_set<std::string> researcher_ids;
    for (const Researcher& r : researchers) {
        if (!researcher_ids.insert(r.researcher_id).second)
            add("duplicate_researcher_id", r.researcher_id);
        if (!taxonomy.contains(r.sds_code))
            add("unknown_sds", r.researcher_id + ": " + r.sds_code);
        if (config.region_area_map.count(r.region) == 0)
            add("region_unmapped", r.researcher_id + ": " + r.region);
        if (r.rank_events.empty()) {
            add("empty_rank_events", r.researcher_id);
        } else {
            for (size_t i = 1; i < r.rank_events.size(); ++i) {
                if (r.rank_events[i].year <= r.rank_events[i - 1].year) {
                    add("rank_years_not_increasing", r.researcher_id);
                    break;
                }
            }
            for (size_t i = 1; i < r.rank_events.size(); ++i) {
                if (r.rank_events[i].rank < r.rank_events[i - 1].rank) {
                    add("rank_order_decreasing", r.researcher_id);
                    break;
                }
            }
            if (r.hire_year > r.rank_events.front().year)
                add("hire_after_first_rank_event", r.researcher_id);
        }
        if (r.leave_year && *r.leave_year < r.hire_year)
            add("leave_before_hire", r.researcher_id);
    }

    std::unordered_set<std::string> pub_ids;
    for (const Publication& p : publications) {
        if (!pub_ids.insert(p.pub_id).second)
            add("duplicate_pub_id", p.pub_id);
        if (p.citations < 0)
            add("negative_citations", p.pub_id);
        if (p.categories.empty())
            add("empty_categories", p.pub_id);
        // Positions must be exactly 1..s.
        std::vector<int> positions;
        positions.reserve(p.authorships.size());
        for (const Authorship& a : p.authorships) positions.push_back(a.position);
        std::sort(positions.begin(), positions.end());
        for (size_t i = 0; i < positions.size(); ++i) {
            if (positions[i] != static_cast<int>(i) + 1) {
                add("position_gap", p.pub_id);
                break;
            }
        }
        for (const Authorship& a : p.authorships) {
            if (!a.is_external() && researcher_ids.count(a.author_ref) == 0)
                add("dangling_researcher_ref", p.pub_id + ": " + a.author_ref);
        }
    }

    return report;
}

}  // namespace kinmetrics
