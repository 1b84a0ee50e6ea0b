#ifndef PHYLOTORIC_GROEBNER_HPP
#define PHYLOTORIC_GROEBNER_HPP

#include <cstdint>
#include <vector>

#include "phylotoric/errors.hpp"
#include "phylotoric/ideal.hpp"

namespace phylotoric {

// Shared counter for bounding long Groebner runs.  limit 0 means unlimited.
// One step is one processed S-pair or one reduction stage.
struct StepBudget {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;

    void tick(std::uint64_t n = 1) {
        used += n;
        if (limit != 0 && used > limit) throw BudgetExceeded(limit);
    }
};

// Buchberger's algorithm with Gebauer-Moeller pair pruning and the normal
// selection strategy (lowest lcm degree, then lexicographic pair indices).
// Returns the ideal with its reduced Groebner basis cached.
Ideal buchberger(const Ideal& ideal, const MonomialOrder& order, StepBudget* budget = nullptr);

// Remainder of multivariate division by the cached reduced basis; zero iff
// f lies in the ideal.  Requires a basis cached for the given order.
Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order);

// I : (x1...xn)^inf for a binomial ideal, via the single auxiliary variable t
// with generator t*x1*...*xn - 1 and a block elimination order.
Ideal saturate_by_all_variables(const Ideal& ideal, StepBudget* budget = nullptr);

// Same saturation for homogeneous binomial ideals, one variable at a time
// through degrevlex bases with the saturating variable cheapest.  Faster at
// high variable counts; agrees with the auxiliary-variable route.
Ideal saturate_homogeneous(const Ideal& ideal, StepBudget* budget = nullptr);

// Saturation of a homogeneous binomial ideal that is carried into itself by
// the given variable permutations.  One pass per variable orbit, with the
// basis re-symmetrized after each pass; sweeps repeat until the Hilbert
// series stops moving, which certifies that the saturation is complete.
Ideal saturate_homogeneous_symmetric(const Ideal& ideal,
                                     const std::vector<std::vector<int>>& symmetry_generators,
                                     StepBudget* budget = nullptr);

// Numerator of the Hilbert series of ring/in(ideal) over (1-s)^nvars, from
// the cached degree-compatible basis.  Two homogeneous ideals with one
// containing the other are equal iff these numerators agree.
std::vector<Integer> hilbert_series_numerator(const Ideal& ideal);

// Krull dimension of ring/ideal and degree of the associated projective
// variety, read off the Hilbert series of the initial monomial ideal.
// Requires a homogeneous ideal with a degree-compatible cached basis.
std::pair<int, Integer> hilbert_dimension_degree(const Ideal& ideal);

// A minimal generating subset of the cached reduced basis (homogeneous
// ideals), chosen greedily in degree-then-index order.  Its cardinality and
// degree distribution are canonical.
std::vector<Polynomial> minimal_generators(const Ideal& ideal, StepBudget* budget = nullptr);

} // namespace phylotoric

#endif
