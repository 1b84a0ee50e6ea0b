#ifndef PHYLOTORIC_MODEL_HPP
#define PHYLOTORIC_MODEL_HPP

#include <string>
#include <vector>

#include "phylotoric/errors.hpp"

namespace phylotoric {

// Elementary abelian 2-group (Z/2)^k, k = 1 or 2.  Elements are integers
// 0..2^k-1 read as bit strings with the first coordinate most significant;
// addition is xor, so every element is its own inverse.
struct FiniteAbelianGroup {
    int k;

    int size() const { return 1 << k; }
    int add(int g, int h) const { return g ^ h; }

    bool contains(int g) const { return g >= 0 && g < size(); }

    // chi_h(g) = (-1)^<h,g> with the bitwise dot product mod 2.
    int character(int h, int g) const {
        if (!contains(h) || !contains(g)) throw DomainError("element not in group");
        return __builtin_popcount(static_cast<unsigned>(h & g)) % 2 == 0 ? 1 : -1;
    }

    std::string label() const { return k == 1 ? "Z/2" : "(Z/2)^2"; }

    std::string element_name(int g) const {
        std::string s;
        for (int j = k - 1; j >= 0; --j) s += ((g >> j) & 1) ? '1' : '0';
        return s;
    }
};

// Group-based substitution model: a parameter-class partition of the group
// on the probability side, and the dual partition (level sets of the per-
// class character sums) indexing the Fourier-side parameters.  The two
// partitions coincide for CFN, JC and K3P; K2P swaps its two mixed classes.
struct GroupBasedModel {
    std::string id; // CFN, JC, K2P, K3P
    FiniteAbelianGroup group;
    std::vector<std::string> state_names; // index = group element under the state map
    std::vector<int> class_of_element;    // element -> probability class
    int n_classes = 0;
    std::vector<int> fourier_class_of_element; // element -> Fourier class
    int n_fourier_classes = 0;

    int class_of(int g) const {
        if (!group.contains(g)) throw DomainError("element not in group");
        return class_of_element[static_cast<std::size_t>(g)];
    }
    int fourier_class_of(int g) const {
        if (!group.contains(g)) throw DomainError("element not in group");
        return fourier_class_of_element[static_cast<std::size_t>(g)];
    }

    // probability-side parameter name for (edge, class): a1, b1, ...
    std::string prob_param_name(int edge, int cls) const {
        return std::string(1, static_cast<char>('a' + cls)) + std::to_string(edge);
    }
    // Fourier-side parameter name for (edge, fourier class): f1_0, ...
    std::string fourier_param_name(int edge, int cls) const {
        return "f" + std::to_string(edge) + "_" + std::to_string(cls);
    }

    std::string state_map_description() const {
        std::string s;
        for (int g = 0; g < group.size(); ++g) {
            if (g) s += ", ";
            s += state_names[static_cast<std::size_t>(g)] + "=" + group.element_name(g);
        }
        return s;
    }

    std::string class_partition_description() const;
};

// The four built-in models with their fixed class structures.
std::vector<GroupBasedModel> builtin_models();

// Lookup by id; throws on unknown ids.
const GroupBasedModel& model_by_id(const std::string& id);

int character_value(const FiniteAbelianGroup& G, int h, int g);

// Entry (g, h) is the probability-class symbol of h - g (= h xor g).
std::vector<std::vector<std::string>> transition_matrix_symbolic(const GroupBasedModel& model,
                                                                 int edge_id);

// Builds the dual partition from an arbitrary probability partition; used by
// builtin_models and by tests with hand-made partitions.
void compute_fourier_classes(GroupBasedModel& model);

} // namespace phylotoric

#endif
