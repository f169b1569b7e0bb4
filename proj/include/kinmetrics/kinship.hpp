#pragma once
// Same-surname same-university family-link detection with exclusion lists,
// and resolution of multi-subject links into per-child pairs.

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "kinmetrics/ingest.hpp"
#include "kinmetrics/model.hpp"

namespace kinmetrics {

enum class LinkCardinality {
    OneToOne,
    OneChildManyParents,
    ManyChildrenOneParent,
    ManyChildrenManyParents,
};

const char* link_cardinality_token(LinkCardinality c);

struct KinshipLink {
    std::string university_id;
    std::string surname;
    std::set<std::string> children;  // disjoint from parents
    std::set<std::string> parents;
    LinkCardinality cardinality = LinkCardinality::OneToOne;
    bool operator==(const KinshipLink&) const = default;
};

struct KinshipPair {
    std::string child_id;
    std::set<std::string> parent_ids;  // non-empty, footnote-timing eligible
    std::string university_id;         // source link
    std::string surname;
    LinkCardinality source_cardinality = LinkCardinality::OneToOne;
    bool operator==(const KinshipPair&) const = default;
};

// Assistant or associate rank events falling in the entry window mark a
// researcher as a candidate child, whether first appointment or advancement.
std::set<std::string> candidate_children(const DatasetBundle& bundle);

// Researchers holding rank Full in any year of
// [entry_window_start - 1, entry_window_end]. Per-child timing (Full since
// the year before the child's entry) is enforced later, in resolve_pairs.
std::set<std::string> candidate_parents(const DatasetBundle& bundle);

// Year of the earliest qualifying (assistant/associate, in entry window) rank
// event; nullopt when the researcher is not a candidate child.
std::optional<int> cohort_entry_year(const Researcher& r, const ObservationConfig& config);

// Groups candidates by (university, surname); a group with at least one child
// and one parent becomes a link unless the surname is nationally excluded or
// excluded for the university's region. A researcher qualifying as both child
// and parent inside one group is kept as a child there. Output ordered by
// (university_id, surname).
std::vector<KinshipLink> detect_links(const std::set<std::string>& children,
                                      const std::set<std::string>& parents,
                                      const DatasetBundle& bundle);

// One pair per child. Each pair carries the link's parents that were Full by
// the year before that child's entry; pairs whose eligible parent set comes
// up empty are dropped.
std::vector<KinshipPair> resolve_pairs(const std::vector<KinshipLink>& links,
                                       const DatasetBundle& bundle);

// Link members that qualified for both candidate roles (kept as children by
// detect_links); reported so the overlap the heuristic resolves is visible.
int dual_role_count(const std::vector<KinshipLink>& links,
                    const std::set<std::string>& children_candidates,
                    const std::set<std::string>& parent_candidates);

// pairs.csv: child_id,parent_ids(semicolon-joined),university_id,surname,cardinality_class.
void write_pairs(const std::vector<KinshipPair>& pairs, const std::filesystem::path& path);

}  // namespace kinmetrics
