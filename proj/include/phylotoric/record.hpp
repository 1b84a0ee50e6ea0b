#ifndef PHYLOTORIC_RECORD_HPP
#define PHYLOTORIC_RECORD_HPP

#include <map>
#include <optional>
#include <string>

#include "phylotoric/rational.hpp"
#include "phylotoric/yaml.hpp"

namespace phylotoric {

// A value taken from the published catalog rather than computed here.
struct ReferenceOnlyValue {
    std::string value;
    std::string source;
};

// Per-entry invariants plus the conventions they were computed under.  The
// reference_only block holds catalog values this pipeline does not compute
// (singular locus data and the likelihood degree), always with a source.
struct InvariantRecord {
    int tree_id = -1;
    std::string model_id;
    std::string newick;
    std::string group;
    int n_leaves = 0;

    int np = 0;
    int nq = 0;
    int distinct_p_classes = 0;
    int dim_cone = 0;
    int dim_projective = 0;
    Integer degree;
    std::map<int, int> degree_profile;
    std::optional<Integer> volume_degree;

    std::string computed_by;
    std::map<std::string, std::string> conventions; // fixed key set, see to_yaml
    std::map<std::string, ReferenceOnlyValue> reference_only;

    Yaml to_yaml() const;
    static InvariantRecord from_yaml(const Yaml& y);

    friend bool operator==(const InvariantRecord& a, const InvariantRecord& b);
};

} // namespace phylotoric

#endif
