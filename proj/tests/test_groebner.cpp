#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phylotoric/groebner.hpp"

using namespace phylotoric;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

Ideal make_ideal(const RingPtr& r, std::initializer_list<std::string> gens) {
    std::vector<Polynomial> v;
    for (const auto& g : gens) v.push_back(P(r, g));
    return Ideal(r, std::move(v));
}

std::vector<std::string> basis_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.basis()->elements) out.push_back(g.str());
    return out;
}

// every pairwise S-polynomial of a Groebner basis must reduce to zero
void check_buchberger_criterion(const Ideal& I) {
    const auto& order = I.basis()->order;
    const auto& basis = I.basis()->elements;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const Term& ti = basis[i].leading_term(order);
            const Term& tj = basis[j].leading_term(order);
            Monomial l = Monomial::lcm(ti.mono, tj.mono);
            Polynomial s = basis[i].times_monomial(l / ti.mono, Rational(1) / ti.coeff) -
                           basis[j].times_monomial(l / tj.mono, Rational(1) / tj.coeff);
            CHECK(normal_form(s, I, order).is_zero());
        }
}

} // namespace

TEST_CASE("buchberger on the worked examples") {
    auto r = Ring::make({"x", "y"});

    Ideal a = buchberger(make_ideal(r, {"x^2 - y"}), MonomialOrder::lex());
    CHECK(basis_strings(a) == std::vector<std::string>{"x^2 - y"});

    // S(xy-1, y^2-1) = x(y^2-1) - y(xy-1) = y - x, reduced basis {x - y, y^2 - 1}
    Ideal b = buchberger(make_ideal(r, {"x*y - 1", "y^2 - 1"}), MonomialOrder::lex());
    CHECK(basis_strings(b) == std::vector<std::string>{"y^2 - 1", "x - y"});
    check_buchberger_criterion(b);

    Ideal c = buchberger(make_ideal(r, {"x - y"}), MonomialOrder::degrevlex());
    CHECK(basis_strings(c) == std::vector<std::string>{"x - y"});
}

TEST_CASE("buchberger is canonical across generator presentations and engines") {
    auto r = Ring::make({"x", "y", "z"});
    // same ideal, different generating sets
    Ideal a = buchberger(make_ideal(r, {"x^2 - y*z", "x*y - z^2"}), MonomialOrder::degrevlex());
    Ideal b = buchberger(
        make_ideal(r, {"x*y - z^2", "x^2 - y*z", "x^2 - x*y - y*z + z^2"}),
        MonomialOrder::degrevlex());
    CHECK(basis_strings(a) == basis_strings(b));
    check_buchberger_criterion(a);

    // a non-binomial presentation of a binomial-generated ideal takes the
    // generic engine; results must agree with the binomial engine
    Ideal c = buchberger(make_ideal(r, {"x^2 - y*z", "x*y - z^2", "x^2 + x*y - y*z - z^2 + x^2 - y*z"}),
                         MonomialOrder::degrevlex());
    CHECK(basis_strings(a) == basis_strings(c));
}

TEST_CASE("normal form examples and ideal membership") {
    auto r = Ring::make({"x", "y"});
    Ideal I = buchberger(make_ideal(r, {"x - y"}), MonomialOrder::lex());
    CHECK(normal_form(P(r, "x - y"), I, MonomialOrder::lex()).is_zero());
    CHECK(normal_form(P(r, "x^2"), I, MonomialOrder::lex()) == P(r, "y^2"));

    Ideal J = buchberger(make_ideal(r, {"x"}), MonomialOrder::lex());
    CHECK(normal_form(P(r, "1"), J, MonomialOrder::lex()) == P(r, "1"));

    CHECK_THROWS_AS(normal_form(P(r, "x"), make_ideal(r, {"x"}), MonomialOrder::lex()),
                    DomainError);
    // basis cached for another order is rejected
    CHECK_THROWS_AS(normal_form(P(r, "x"), I, MonomialOrder::degrevlex()), DomainError);
}

TEST_CASE("normal form is linear modulo the ideal") {
    auto r = Ring::make({"x", "y", "z"});
    Ideal I = buchberger(make_ideal(r, {"x^2 - y", "y*z - x"}), MonomialOrder::degrevlex());
    auto order = MonomialOrder::degrevlex();
    std::uint64_t state = 777;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    auto random_poly = [&] {
        std::vector<Term> terms;
        for (int t = 0; t < 3; ++t) {
            Monomial m(3);
            for (int v = 0; v < 3; ++v) m[static_cast<std::size_t>(v)] = static_cast<int>(next() % 3);
            terms.push_back({std::move(m), Rational(static_cast<long>(next() % 9) - 4)});
        }
        return Polynomial::from_terms(r, std::move(terms));
    };
    for (int round = 0; round < 25; ++round) {
        Polynomial f = random_poly(), g = random_poly(), h = random_poly();
        Polynomial lhs = normal_form(f * g + h, I, order);
        Polynomial rhs =
            normal_form(normal_form(f * g, I, order) + normal_form(h, I, order), I, order);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("saturation by all variables") {
    auto r = Ring::make({"x", "y", "z"});

    Ideal a = saturate_by_all_variables(make_ideal(r, {"x*z - y*z"}));
    CHECK(basis_strings(a) == std::vector<std::string>{"x - y"});

    Ideal b = saturate_by_all_variables(make_ideal(r, {"x - y"}));
    CHECK(basis_strings(b) == std::vector<std::string>{"x - y"});

    auto r2 = Ring::make({"x", "y"});
    Ideal c = saturate_by_all_variables(make_ideal(r2, {"x^2 - x*y"}));
    CHECK(basis_strings(c) == std::vector<std::string>{"x - y"});

    CHECK_THROWS_AS(saturate_by_all_variables(make_ideal(r2, {"x^2 + x*y + y^2"})), DomainError);
}

TEST_CASE("both saturation routes agree on homogeneous binomial ideals") {
    auto r = Ring::make({"x", "y", "z", "w"});
    for (auto gens : {std::vector<std::string>{"x*z - y*z"},
                      std::vector<std::string>{"x*y - z^2", "y^2*w - z*w^2"},
                      std::vector<std::string>{"x^2*w - y*z*w"}}) {
        std::vector<Polynomial> ps;
        for (const auto& g : gens) ps.push_back(P(r, g));
        Ideal I(r, ps);
        Ideal via_t = saturate_by_all_variables(I);
        Ideal via_iteration = saturate_homogeneous(I);
        CHECK(basis_strings(via_t) == basis_strings(via_iteration));
    }
}

TEST_CASE("saturation is idempotent and never shrinks the ideal") {
    auto r = Ring::make({"x", "y", "z"});
    Ideal I = make_ideal(r, {"x^2*z - x*y*z"});
    Ideal s1 = saturate_by_all_variables(I);
    Ideal s2 = saturate_by_all_variables(s1);
    CHECK(basis_strings(s1) == basis_strings(s2));
    // I is contained in sat(I): every generator reduces to zero
    for (const auto& g : I.generators())
        CHECK(normal_form(g, s1, MonomialOrder::degrevlex()).is_zero());
}

TEST_CASE("hilbert dimension and degree") {
    auto r3 = Ring::make({"x", "y", "z"});
    Ideal zero = buchberger(Ideal(r3, {}), MonomialOrder::degrevlex());
    auto [d0, deg0] = hilbert_dimension_degree(zero);
    CHECK(d0 == 3);
    CHECK(deg0 == 1);

    auto r2 = Ring::make({"x", "y"});
    Ideal xy = buchberger(make_ideal(r2, {"x*y"}), MonomialOrder::degrevlex());
    auto [d1, deg1] = hilbert_dimension_degree(xy);
    CHECK(d1 == 1);
    CHECK(deg1 == 2);

    auto r5 = Ring::make({"x1", "x2", "x3", "x4", "x5"});
    Ideal cubic = buchberger(make_ideal(r5, {"x1*x5^2 - x2*x3*x4"}), MonomialOrder::degrevlex());
    auto [d2, deg2] = hilbert_dimension_degree(cubic);
    CHECK(d2 == 4);
    CHECK(deg2 == 3);

    // non-homogeneous input is rejected
    Ideal bad = buchberger(make_ideal(r2, {"x^2 - y"}), MonomialOrder::degrevlex());
    CHECK_THROWS_AS(hilbert_dimension_degree(bad), DomainError);
}

TEST_CASE("single homogeneous binomial of degree d gives (n-1, d)") {
    std::uint64_t state = 4242;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int round = 0; round < 20; ++round) {
        std::size_t n = 3 + next() % 3;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        auto r = Ring::make(names);
        // two distinct monomials of the same degree
        Monomial a(n), b(n);
        int d = 2 + static_cast<int>(next() % 3);
        for (int k = 0; k < d; ++k) a[next() % (n / 2)] += 1;
        for (int k = 0; k < d; ++k) b[n / 2 + next() % (n - n / 2)] += 1;
        Polynomial f = Polynomial::from_monomial(r, a) - Polynomial::from_monomial(r, b);
        Ideal I = buchberger(Ideal(r, {f}), MonomialOrder::degrevlex());
        auto [dim, deg] = hilbert_dimension_degree(I);
        CHECK(dim == static_cast<int>(n) - 1);
        CHECK(deg == d);
    }
}

TEST_CASE("minimal generators of homogeneous ideals") {
    auto r = Ring::make({"x", "y", "z"});
    // x^2 and the redundant x^2*y
    Ideal I = buchberger(make_ideal(r, {"x^2 - y^2", "x^2*z - y^2*z"}), MonomialOrder::degrevlex());
    auto gens = minimal_generators(I);
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].str() == "x^2 - y^2");

    Ideal zero = buchberger(Ideal(r, {}), MonomialOrder::degrevlex());
    CHECK(minimal_generators(zero).empty());

    // two generic quadrics stay minimal even though the basis grows
    Ideal J = buchberger(make_ideal(r, {"x^2 - y*z", "y^2 - x*z"}), MonomialOrder::degrevlex());
    auto jgens = minimal_generators(J);
    CHECK(jgens.size() == 2);
    for (const auto& g : jgens) CHECK(g.total_degree() == 2);
}

TEST_CASE("step budget aborts long runs") {
    auto r = Ring::make({"x", "y", "z"});
    StepBudget tiny{3, 0};
    CHECK_THROWS_AS(
        buchberger(make_ideal(r, {"x^2 - y*z", "x*y - z^2", "y^3 - x*z^2"}),
                   MonomialOrder::degrevlex(), &tiny),
        BudgetExceeded);
    StepBudget enough{100000, 0};
    Ideal done = buchberger(make_ideal(r, {"x^2 - y*z", "x*y - z^2", "y^3 - x*z^2"}),
                            MonomialOrder::degrevlex(), &enough);
    CHECK(done.basis());
}
