#ifndef PHYLOTORIC_TORIC_HPP
#define PHYLOTORIC_TORIC_HPP

#include <map>

#include "phylotoric/groebner.hpp"
#include "phylotoric/parametrization.hpp"

namespace phylotoric {

// Budget exhaustion during the toric pipeline; carries the lattice-basis
// ideal that was awaiting saturation.
class ToricBudgetExceeded : public BudgetExceeded {
public:
    ToricBudgetExceeded(std::uint64_t limit, Ideal unsaturated)
        : BudgetExceeded(limit), unsaturated_(std::move(unsaturated)) {}
    const Ideal& unsaturated() const { return unsaturated_; }

private:
    Ideal unsaturated_;
};

// I_A = <q^{u+} - q^{u-} : u in ker_Z(A)>: binomials from a kernel basis,
// saturated by all variables, returned with the reduced degrevlex basis
// cached.  The ring has one variable q1..qn per column of A.  When column
// symmetries are supplied the saturation runs per variable orbit.
Ideal toric_ideal(const IntegerMatrix& A, StepBudget* budget = nullptr,
                  const std::vector<std::vector<int>>& symmetries = {});
Ideal toric_ideal(const ExponentMatrix& em, StepBudget* budget = nullptr,
                  const std::vector<std::vector<int>>& symmetries = {});

// Column permutations carrying the toric ideal into itself, generated by
// automorphisms of the labeled tree and group automorphisms that respect the
// Fourier class partition.
std::vector<std::vector<int>> column_symmetries(const FourierMap& fm, const ExponentMatrix& em);

// rank(A) = dimension of the affine cone in Fourier coordinates.
int cone_dimension(const IntegerMatrix& A);

// Degree of the projective variety through the Hilbert series of the initial
// ideal; 1 for the zero ideal.
Integer degree_via_hilbert(const Ideal& ideal);

// Normalized volume of conv(columns of A) with respect to the affine lattice
// generated by column differences; equals the toric degree.
Integer degree_via_volume(const IntegerMatrix& A);

// Generator counts by degree of a canonical minimal generating set.
std::map<int, int> degree_profile(const Ideal& ideal, StepBudget* budget = nullptr);

struct ProbabilityInvariants {
    RingPtr p_ring;
    std::vector<Polynomial> generators;         // pulled-back toric generators
    std::vector<std::size_t> skipped;           // generator indices too large to expand
    std::vector<Polynomial> parity_linear;      // vanishing transforms of zero coordinates
    std::vector<std::size_t> column_coordinate; // q column -> coordinate used for its form
};

// Pullback of the toric generators to probability coordinates: each q column
// is replaced by the forward-transform linear form of its first coordinate.
// Generators whose expansion would exceed expansion_limit monomial products
// are listed as skipped instead of expanded.
ProbabilityInvariants probability_invariants(const Ideal& ideal, const FourierMap& fm,
                                             const FourierTransform& ft,
                                             std::uint64_t expansion_limit = (1ull << 24));

} // namespace phylotoric

#endif
