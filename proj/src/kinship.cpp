#include "kinmetrics/kinship.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "kinmetrics/csv.hpp"

namespace kinmetrics {

const char* link_cardinality_token(LinkCardinality c) {
    switch (c) {
        case LinkCardinality::OneToOne: return "one_to_one";
        case LinkCardinality::OneChildManyParents: return "one_child_many_parents";
        case LinkCardinality::ManyChildrenOneParent: return "many_children_one_parent";
        case LinkCardinality::ManyChildrenManyParents: return "many_children_many_parents";
    }
    return "?";
}

namespace {

bool qualifying_child_event(const RankEvent& e, const ObservationConfig& config) {
    return (e.rank == Rank::Assistant || e.rank == Rank::Associate) &&
           e.year >= config.entry_window_start && e.year <= config.entry_window_end;
}

// Year of the first event with rank Full; nullopt when never Full.
std::optional<int> full_since(const Researcher& r) {
    for (const RankEvent& e : r.rank_events)
        if (e.rank == Rank::Full) return e.year;
    return std::nullopt;
}

LinkCardinality classify_cardinality(size_t n_children, size_t n_parents) {
    if (n_children == 1)
        return n_parents == 1 ? LinkCardinality::OneToOne : LinkCardinality::OneChildManyParents;
    return n_parents == 1 ? LinkCardinality::ManyChildrenOneParent
                          : LinkCardinality::ManyChildrenManyParents;
}

// Region of a university: the region recorded for its first researcher in id
// order. Rosters keep one region per university; this makes mixed records
// deterministic instead of ambiguous.
std::map<std::string, std::string> university_regions(const DatasetBundle& bundle) {
    std::map<std::string, std::string> out;
    for (const Researcher& r : bundle.researchers) out.emplace(r.university_id, r.region);
    return out;
}

}  // namespace

std::set<std::string> candidate_children(const DatasetBundle& bundle) {
    std::set<std::string> out;
    for (const Researcher& r : bundle.researchers) {
        for (const RankEvent& e : r.rank_events) {
            if (qualifying_child_event(e, bundle.config)) {
                out.insert(r.researcher_id);
                break;
            }
        }
    }
    return out;
}

std::set<std::string> candidate_parents(const DatasetBundle& bundle) {
    std::set<std::string> out;
    const int first = bundle.config.entry_window_start - 1;
    const int last = bundle.config.entry_window_end;
    for (const Researcher& r : bundle.researchers) {
        for (int y = first; y <= last; ++y) {
            if (rank_at(r, y) == Rank::Full) {
                out.insert(r.researcher_id);
                break;
            }
        }
    }
    return out;
}

std::optional<int> cohort_entry_year(const Researcher& r, const ObservationConfig& config) {
    std::optional<int> year;
    for (const RankEvent& e : r.rank_events) {
        if (qualifying_child_event(e, config) && (!year || e.year < *year)) year = e.year;
    }
    return year;
}

std::vector<KinshipLink> detect_links(const std::set<std::string>& children,
                                      const std::set<std::string>& parents,
                                      const DatasetBundle& bundle) {
    auto regions = university_regions(bundle);
    // (university, surname) -> member sets
    std::map<std::pair<std::string, std::string>, KinshipLink> groups;
    for (const Researcher& r : bundle.researchers) {
        bool is_child = children.count(r.researcher_id) > 0;
        bool is_parent = parents.count(r.researcher_id) > 0;
        if (!is_child && !is_parent) continue;
        auto key = std::make_pair(r.university_id, r.surname);
        KinshipLink& link = groups[key];
        // A researcher qualifying for both roles stays a child within the
        // group; self-pairing is impossible either way.
        if (is_child) link.children.insert(r.researcher_id);
        else link.parents.insert(r.researcher_id);
    }
    std::vector<KinshipLink> out;
    for (auto& [key, link] : groups) {
        if (link.children.empty() || link.parents.empty()) continue;
        const auto& [university, surname] = key;
        if (bundle.config.national_surname_exclusions.count(surname) > 0) continue;
        auto region_it = regions.find(university);
        if (region_it != regions.end()) {
            auto excl = bundle.config.regional_surname_exclusions.find(region_it->second);
            if (excl != bundle.config.regional_surname_exclusions.end() &&
                excl->second.count(surname) > 0)
                continue;
        }
        link.university_id = university;
        link.surname = surname;
        link.cardinality = classify_cardinality(link.children.size(), link.parents.size());
        out.push_back(std::move(link));
    }
    // groups is ordered by (university_id, surname) already.
    return out;
}

std::vector<KinshipPair> resolve_pairs(const std::vector<KinshipLink>& links,
                                       const DatasetBundle& bundle) {
    std::unordered_map<std::string, const Researcher*> by_id;
    for (const Researcher& r : bundle.researchers) by_id.emplace(r.researcher_id, &r);

    std::vector<KinshipPair> pairs;
    for (const KinshipLink& link : links) {
        for (const std::string& child_id : link.children) {
            const Researcher& child = *by_id.at(child_id);
            auto entry = cohort_entry_year(child, bundle.config);
            if (!entry) continue;
            KinshipPair pair;
            pair.child_id = child_id;
            pair.university_id = link.university_id;
            pair.surname = link.surname;
            pair.source_cardinality = link.cardinality;
            for (const std::string& parent_id : link.parents) {
                auto since = full_since(*by_id.at(parent_id));
                if (since && *since <= *entry - 1) pair.parent_ids.insert(parent_id);
            }
            if (!pair.parent_ids.empty()) pairs.push_back(std::move(pair));
        }
    }
    return pairs;
}

int dual_role_count(const std::vector<KinshipLink>& links,
                    const std::set<std::string>& children_candidates,
                    const std::set<std::string>& parent_candidates) {
    std::set<std::string> members;
    for (const KinshipLink& link : links) {
        members.insert(link.children.begin(), link.children.end());
        members.insert(link.parents.begin(), link.parents.end());
    }
    int count = 0;
    for (const std::string& id : members)
        if (children_candidates.count(id) && parent_candidates.count(id)) ++count;
    return count;
}

void write_pairs(const std::vector<KinshipPair>& pairs, const std::filesystem::path& path) {
    std::string out = "child_id,parent_ids,university_id,surname,cardinality_class\n";
    for (const KinshipPair& p : pairs) {
        std::string parent_list;
        for (const std::string& id : p.parent_ids) {
            if (!parent_list.empty()) parent_list.push_back(';');
            parent_list += id;
        }
        out += csv_join({csv_quote(p.child_id), csv_quote(parent_list), csv_quote(p.university_id),
                         csv_quote(p.surname), link_cardinality_token(p.source_cardinality)});
    }
    write_text_file(path.string(), out);
}

}  // namespace kinmetrics
