#include "phylotoric/pipeline.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

#include "phylotoric/version.hpp"

namespace phylotoric {

namespace {

std::map<std::string, ReferenceOnlyValue> reference_only_values(int tree_id,
                                                                const std::string& model_id) {
    // catalog values this pipeline does not compute, kept as provenance
    if (tree_id == 1 && model_id == "JC")
        return {{"MLdeg",
                 {"23", "Small Phylogenetic Trees catalog: 3-leaf claw, Jukes-Cantor"}}};
    return {};
}

InvariantRecord assemble_record(const PipelineResult& r, const Integer& degree,
                                const std::map<int, int>& profile,
                                const std::optional<Integer>& volume_degree, int dim_cone) {
    InvariantRecord rec;
    rec.tree_id = r.tree_id;
    rec.model_id = r.model->id;
    rec.newick = to_newick(*r.tree);
    rec.group = r.model->group.label();
    rec.n_leaves = r.tree->n_leaves();
    rec.np = r.em.np;
    rec.nq = r.em.nq;
    rec.distinct_p_classes = distinct_p_classes(r.pm);
    rec.dim_cone = dim_cone;
    rec.dim_projective = dim_cone - 1;
    rec.degree = degree;
    rec.degree_profile = profile;
    rec.volume_degree = volume_degree;
    rec.computed_by = std::string(kToolName) + " " + kToolVersion;
    rec.conventions = {
        {"fourier_normalization",
         "forward transform unnormalized with entries +-1; inverse carries 1/|G|^n"},
        {"state_map", r.model->state_map_description()},
        {"root_rule", "lowest-id internal vertex; outputs are root-independent"},
        {"dimension_convention", "dim_cone = rank(A); dim_projective = rank(A) - 1"},
        {"class_partition", r.model->class_partition_description()},
    };
    rec.reference_only = reference_only_values(r.tree_id, r.model->id);
    return rec;
}

} // namespace

int catalog_id_of(const PhyloTree& tree) {
    if (tree.n_leaves() < 3 || tree.n_leaves() > 5) return 0;
    for (const auto& entry : catalog(5))
        if (is_isomorphic(tree, entry.shape)) return entry.tree_id;
    return 0;
}

PipelineResult compute_entry(const PhyloTree& tree, const GroupBasedModel& model,
                             const PipelineOptions& options, int tree_id) {
    if (tree_id < 0) tree_id = catalog_id_of(tree);

    static std::mutex cache_mutex;
    static std::unordered_map<std::string, std::shared_ptr<const PipelineResult>> cache;
    std::string key;
    bool cacheable = options.use_cache && !options.step_budget;
    if (cacheable) {
        key = to_newick(tree) + "|" + model.id + "|" + std::to_string(tree_id) + "|" +
              std::to_string(options.compute_volume) + "|" +
              std::to_string(options.expansion_limit);
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }

    StepBudget budget;
    if (options.step_budget) budget.limit = *options.step_budget;
    StepBudget* bp = options.step_budget ? &budget : nullptr;

    PipelineResult r;
    r.tree_id = tree_id;
    r.pm = probability_map(tree, model);
    r.fm = fourier_map(tree, model);
    r.tree = r.pm.tree;
    r.model = r.pm.model;
    r.ft = fourier_transform(tree.n_leaves(), model.group);
    r.em = exponent_matrix(r.fm);

    r.ideal = toric_ideal(r.em, bp, column_symmetries(r.fm, r.em));
    int dim_cone = cone_dimension(r.em.A);

    auto [hilbert_dim, degree] = hilbert_dimension_degree(r.ideal);
    if (hilbert_dim != dim_cone) {
        std::ostringstream msg;
        msg << "internal cross-check failed: Hilbert dimension " << hilbert_dim
            << " differs from rank(A) = " << dim_cone;
        throw Error(msg.str());
    }
    bool zero_ideal = r.ideal.basis()->elements.empty();
    if (zero_ideal != (r.em.nq == dim_cone))
        throw Error("internal cross-check failed: zero ideal iff nq = rank(A)");

    std::map<int, int> profile = degree_profile(r.ideal, bp);

    std::optional<Integer> volume_degree;
    if (options.compute_volume) {
        volume_degree = degree_via_volume(r.em.A);
        if (*volume_degree != degree) {
            std::ostringstream msg;
            msg << "degree disagreement: Hilbert gives " << degree.get_str()
                << ", normalized volume gives " << volume_degree->get_str();
            throw Error(msg.str());
        }
    }

    r.pinv = probability_invariants(r.ideal, r.fm, r.ft, options.expansion_limit);
    r.record = assemble_record(r, degree, profile, volume_degree, dim_cone);

    if (cacheable) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto [it, inserted] = cache.emplace(key, std::make_shared<PipelineResult>(r));
        (void)inserted;
        return *it->second;
    }
    return r;
}

} // namespace phylotoric
