#ifndef PHYLOTORIC_PIPELINE_HPP
#define PHYLOTORIC_PIPELINE_HPP

#include "phylotoric/record.hpp"
#include "phylotoric/toric.hpp"

namespace phylotoric {

struct PipelineOptions {
    std::optional<std::uint64_t> step_budget;
    std::uint64_t expansion_limit = 1ull << 24; // monomial products per pullback
    bool compute_volume = true;
    bool use_cache = true;
};

// Everything computed for one (tree, model) pair, ready for emission.
struct PipelineResult {
    std::shared_ptr<const PhyloTree> tree;
    std::shared_ptr<const GroupBasedModel> model;
    int tree_id = 0; // catalog id; 0 when the tree is not in the catalog
    ProbabilityMap pm;
    FourierMap fm;
    FourierTransform ft;
    ExponentMatrix em;
    Ideal ideal;
    ProbabilityInvariants pinv;
    InvariantRecord record;
};

// Runs the full pipeline: parametrizations, exponent matrix, toric ideal,
// dimension and degree by both algorithms, generator profile, probability
// invariants, and the assembled record.  Results for unbudgeted runs are
// cached per (newick, model, tree_id).
PipelineResult compute_entry(const PhyloTree& tree, const GroupBasedModel& model,
                             const PipelineOptions& options = {}, int tree_id = -1);

// Catalog id of an isomorphic catalog tree, or 0.
int catalog_id_of(const PhyloTree& tree);

} // namespace phylotoric

#endif
