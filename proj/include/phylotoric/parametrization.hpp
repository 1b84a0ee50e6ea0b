#ifndef PHYLOTORIC_PARAMETRIZATION_HPP
#define PHYLOTORIC_PARAMETRIZATION_HPP

#include <memory>
#include <optional>

#include "phylotoric/matrix.hpp"
#include "phylotoric/model.hpp"
#include "phylotoric/polynomial.hpp"
#include "phylotoric/tree.hpp"

namespace phylotoric {

// Joint leaf distribution of the Markov process: |G|^n exact polynomials in
// the per-edge class parameters, indexed by leaf-state tuples in
// lexicographic order with leaf 1 most significant.
struct ProbabilityMap {
    std::shared_ptr<const PhyloTree> tree;
    std::shared_ptr<const GroupBasedModel> model;
    RingPtr ring;                   // a1, b1, ..., one block per edge
    std::vector<Polynomial> coords; // size |G|^n
};

// Monomial image of each Fourier coordinate; parity-violating coordinates
// carry no value (the zero marker).
struct FourierMap {
    std::shared_ptr<const PhyloTree> tree;
    std::shared_ptr<const GroupBasedModel> model;
    RingPtr ring;                                // f<e>_<c> per edge and Fourier class
    std::vector<std::optional<Monomial>> coords; // size |G|^n
};

// The |G|^n Hadamard-type transform.  Entries are +-1 and computed on the
// fly from the packed tuple indices; the inverse is the same matrix scaled
// by 1/|G|^n.
struct FourierTransform {
    int n_leaves;
    int group_size;
    std::size_t dim; // |G|^n

    int entry(std::size_t h, std::size_t g) const {
        return __builtin_popcountll(h & g) % 2 == 0 ? 1 : -1;
    }
    Rational inverse_entry(std::size_t h, std::size_t g) const {
        return Rational(entry(h, g), static_cast<long>(dim));
    }
};

// Exponent matrix of the monomial parametrization: one row per Fourier edge
// parameter, one column per distinct nonzero monomial in first-occurrence
// order.  np equals nq: the distinct monomials are linearly independent and
// the Fourier transform is an invertible change of coordinates.
struct ExponentMatrix {
    IntegerMatrix A;
    std::vector<int> coord_column; // coordinate index -> column, -1 for zero coords
    std::vector<Monomial> columns;
    RingPtr fourier_ring;
    int np = 0;
    int nq = 0;
};

ProbabilityMap probability_map(const PhyloTree& tree, const GroupBasedModel& model,
                               std::optional<int> root = std::nullopt);

FourierTransform fourier_transform(int n_leaves, const FiniteAbelianGroup& G);

FourierMap fourier_map(const PhyloTree& tree, const GroupBasedModel& model,
                       std::optional<int> root = std::nullopt);

ExponentMatrix exponent_matrix(const FourierMap& fm);

// Number of distinct coordinate polynomials of the probability map; emitted
// alongside np for comparisons with the legacy tables.
int distinct_p_classes(const ProbabilityMap& pm);

// Checks the commuting square exactly: transform the probability coordinates
// and compare with the Fourier monomials under the substitution
// f_{e,c} -> sum_g chi_{h_c}(g) m_{e, class(g)}.  Throws if the substitution
// depends on the representative h_c.
bool verify_commutes(const PhyloTree& tree, const GroupBasedModel& model);

// The substituted linear form for one Fourier parameter class, in the
// probability-parameter ring; representative independence is checked.
Polynomial fourier_param_in_prob_params(const GroupBasedModel& model, int edge,
                                        int fourier_class, const RingPtr& prob_ring);

} // namespace phylotoric

#endif
