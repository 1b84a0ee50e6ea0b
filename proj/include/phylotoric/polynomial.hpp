#ifndef PHYLOTORIC_POLYNOMIAL_HPP
#define PHYLOTORIC_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "phylotoric/monomial.hpp"
#include "phylotoric/ordering.hpp"
#include "phylotoric/rational.hpp"
#include "phylotoric/ring.hpp"

namespace phylotoric {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Exact multivariate polynomial over Q.  Terms are kept sorted descending
// under plain degrevlex regardless of any order a Groebner computation uses,
// so equality and printing are canonical.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t var, std::int32_t power = 1);
    static Polynomial from_monomial(RingPtr ring, const Monomial& m,
                                    const Rational& c = Rational(1));
    // Combines duplicate monomials, drops zero coefficients, sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
    }

    std::int64_t total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;

    // Exactly two terms with coefficients +1 and -1.
    bool is_pure_difference_binomial() const;

    const Term& leading_term(const MonomialOrder& order) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational evaluate(const std::vector<Rational>& point) const;

    // Maps variable i of this ring to images[i] in the target ring; every
    // variable actually used must have an image.
    Polynomial substitute(const RingPtr& target,
                          const std::vector<std::optional<Polynomial>>& images) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_; // sorted descending, canonical degrevlex
};

// Text syntax: identifiers for variables, `^` for powers, `*` optional
// between a coefficient and a variable, terms joined by `+`/`-`.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// Arithmetic entry point used by the CLI and bindings; op is add/sub/mul.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, const std::string& op);

// Substitution by polynomials of degree <= 1; rejects unassigned variables
// by name and images of higher degree.
Polynomial substitute_linear(const Polynomial& f, const RingPtr& target,
                             const std::vector<std::optional<Polynomial>>& images);

} // namespace phylotoric

#endif
