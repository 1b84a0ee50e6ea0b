#ifndef PHYLOTORIC_ORDERING_HPP
#define PHYLOTORIC_ORDERING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "phylotoric/monomial.hpp"

namespace phylotoric {

// Total, multiplicative well-orders on monomials.  The three public kinds
// cover the pipeline; degrevlex with a permuted variable sequence is used
// internally by the saturation routine.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, BlockElimination };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
    // Variables [0, split) form the eliminated block.
    static MonomialOrder block_elimination(std::size_t split) {
        return MonomialOrder(Kind::BlockElimination, split);
    }
    // perm[j] = variable index at comparison position j.
    static MonomialOrder degrevlex_permuted(std::vector<std::size_t> perm) {
        MonomialOrder o(Kind::DegRevLex, 0);
        o.perm_ = std::move(perm);
        return o;
    }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Lex: return cmp_lex(a, b);
            case Kind::DegRevLex: return cmp_drl(a, b, 0, a.size());
            case Kind::BlockElimination: {
                int c = cmp_drl(a, b, 0, split_);
                if (c != 0) return c;
                return cmp_drl(a, b, split_, a.size());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string name() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::DegRevLex: return perm_.empty() ? "degrevlex" : "degrevlex(permuted)";
            case Kind::BlockElimination:
                return "block_elimination(" + std::to_string(split_) + ")";
        }
        return "?";
    }

private:
    MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}

    std::size_t at(const Monomial& m, std::size_t pos) const {
        return perm_.empty() ? pos : perm_[pos];
    }

    int cmp_lex(const Monomial& a, const Monomial& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int32_t d = a[at(a, i)] - b[at(b, i)];
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    // Graded, ties broken reverse-lexicographically from the last position.
    int cmp_drl(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
        std::int64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[at(a, i)];
            db += b[at(b, i)];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            std::int32_t d = a[at(a, i)] - b[at(b, i)];
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }

    Kind kind_;
    std::size_t split_;
    std::vector<std::size_t> perm_;
};

} // namespace phylotoric

#endif
