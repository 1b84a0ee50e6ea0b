#ifndef PHYLOTORIC_IDEAL_HPP
#define PHYLOTORIC_IDEAL_HPP

#include <optional>
#include <vector>

#include "phylotoric/polynomial.hpp"

namespace phylotoric {

inline bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind() == b.kind() && a.split() == b.split() && a.name() == b.name();
}

// A reduced Groebner basis: monic, auto-reduced, sorted ascending by leading
// monomial.  Unique for a given ideal and order.
struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<Polynomial> elements;
};

class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
        for (auto& g : gens) {
            check_same_ring(ring_, g.ring(), "ideal construction");
            if (!g.is_zero()) generators_.push_back(std::move(g));
        }
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }

    bool is_zero() const { return generators_.empty(); }

    bool generated_by_binomials() const {
        for (const auto& g : generators_)
            if (g.nterms() > 2) return false;
        return true;
    }

    bool homogeneous() const {
        for (const auto& g : generators_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    const std::optional<GroebnerBasis>& basis() const { return basis_; }
    bool has_basis_for(const MonomialOrder& order) const {
        return basis_ && basis_->order == order;
    }
    void set_basis(GroebnerBasis b) { basis_ = std::move(b); }

private:
    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::optional<GroebnerBasis> basis_;
};

} // namespace phylotoric

#endif
