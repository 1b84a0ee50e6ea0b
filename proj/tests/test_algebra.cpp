#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phylotoric/matrix.hpp"
#include "phylotoric/polynomial.hpp"

using namespace phylotoric;

namespace {

RingPtr xy() { return Ring::make({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

// deterministic pseudo-random rationals with large numerators
Rational random_rational(std::uint64_t& state, int digits) {
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::string num;
    for (int i = 0; i < digits; ++i) num += static_cast<char>('0' + next() % 10);
    std::string den;
    for (int i = 0; i < digits / 2 + 1; ++i) den += static_cast<char>('0' + next() % 10);
    if (den.find_first_not_of('0') == std::string::npos) den = "7";
    return Rational::parse(num + "/" + den) * Rational(next() % 2 ? 1 : -1);
}

} // namespace

TEST_CASE("rational arithmetic is exact in canonical form") {
    Rational a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "3/2");
    CHECK(Rational(-4, 8).str() == "-1/2");
    CHECK(Rational(3, -6).str() == "-1/2"); // denominator kept positive
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);

    // (a+b)-b == a with 200-digit numerators
    std::uint64_t state = 0x2545f4914f6cdd1dULL;
    for (int i = 0; i < 50; ++i) {
        Rational x = random_rational(state, 200);
        Rational y = random_rational(state, 200);
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
    }
}

TEST_CASE("polynomial arithmetic examples") {
    auto r = xy();
    CHECK(poly_arith(P(r, "x + y"), P(r, "x - y"), "add") == P(r, "2x"));
    CHECK(poly_arith(P(r, "x + y"), Polynomial::zero(r), "mul").is_zero());
    CHECK(poly_arith(P(r, "x + y"), P(r, "x - y"), "mul") == P(r, "x^2 - y^2"));
    CHECK_THROWS_AS(poly_arith(P(r, "x"), P(r, "x"), "div"), DomainError);

    // ring mismatch carries the variable diff
    auto other = Ring::make({"x", "z"});
    try {
        poly_arith(P(r, "x + y"), P(other, "x + z"), "add");
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("y") != std::string::npos);
        CHECK(std::string(e.what()).find("z") != std::string::npos);
    }
}

TEST_CASE("substitute_linear examples") {
    auto r = Ring::make({"x", "y"});
    auto uv = Ring::make({"u", "v"});
    std::vector<std::optional<Polynomial>> images(2);
    images[0] = P(uv, "u + v");

    CHECK(substitute_linear(P(r, "x^2"), uv, images) == P(uv, "u^2 + 2u*v + v^2"));

    // x -> y inside the same ring collapses x - y
    std::vector<std::optional<Polynomial>> to_y(2);
    to_y[0] = P(r, "y");
    to_y[1] = P(r, "y");
    CHECK(substitute_linear(P(r, "x - y"), r, to_y).is_zero());

    images[1] = P(uv, "u - v");
    CHECK(substitute_linear(P(r, "x*y"), uv, images) == P(uv, "u^2 - v^2"));

    // unassigned variable is rejected by name
    std::vector<std::optional<Polynomial>> partial(2);
    partial[0] = P(uv, "u");
    try {
        substitute_linear(P(r, "x + y"), uv, partial);
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("'y'") != std::string::npos);
    }
    // nonlinear image is rejected
    std::vector<std::optional<Polynomial>> quad(2);
    quad[0] = P(uv, "u^2");
    quad[1] = P(uv, "v");
    CHECK_THROWS_AS(substitute_linear(P(r, "x"), uv, quad), DomainError);
}

TEST_CASE("polynomial text syntax round-trips") {
    auto r = Ring::make({"q1", "q2", "q3", "q4", "q5"});
    Polynomial p = P(r, "q1*q5^2 - q2*q3*q4");
    // canonical term order is degrevlex descending, so q2*q3*q4 leads
    CHECK(p.str() == "-q2*q3*q4 + q1*q5^2");
    CHECK(parse_polynomial(r, p.str()) == p);

    CHECK(P(r, "3/2*q1").str() == "3/2*q1");
    CHECK(P(r, "3q1").str() == "3*q1");
    CHECK(P(r, "0").is_zero());
    CHECK(P(r, "q1 - q1").is_zero());
    CHECK_THROWS_AS(P(r, "q9"), ParseError);
    CHECK_THROWS_AS(P(r, "q1 + "), ParseError);
    CHECK_THROWS_AS(P(r, ""), ParseError);

    // random polynomials survive print -> parse
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int round = 0; round < 60; ++round) {
        std::vector<Term> terms;
        for (int t = 0; t < static_cast<int>(next() % 6); ++t) {
            Monomial m(5);
            for (int v = 0; v < 5; ++v) m[static_cast<std::size_t>(v)] = static_cast<int>(next() % 4);
            long num = static_cast<long>(next() % 19) - 9;
            terms.push_back({std::move(m), Rational(num, static_cast<long>(next() % 7) + 1)});
        }
        Polynomial q = Polynomial::from_terms(r, std::move(terms));
        if (q.is_zero()) continue;
        CHECK(parse_polynomial(r, q.str()) == q);
    }
}

TEST_CASE("rank examples") {
    CHECK(matrix_rank(IntegerMatrix::identity(4)) == 4);
    CHECK(matrix_rank(IntegerMatrix(3, 5)) == 0);

    // the 6x5 exponent matrix of the Jukes-Cantor claw
    IntegerMatrix A(6, 5);
    int cols[5][6] = {{1, 0, 1, 0, 1, 0},
                      {1, 0, 0, 1, 0, 1},
                      {0, 1, 1, 0, 0, 1},
                      {0, 1, 0, 1, 1, 0},
                      {0, 1, 0, 1, 0, 1}};
    for (int c = 0; c < 5; ++c)
        for (int r2 = 0; r2 < 6; ++r2) A.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(c)) = cols[c][r2];
    CHECK(matrix_rank(A) == 4);

    SUBCASE("kernel of the same matrix is (1,-1,-1,-1,2) up to sign") {
        auto kernel = lattice_kernel(A);
        REQUIRE(kernel.size() == 1);
        std::vector<Integer> v = kernel[0];
        if (v[0] < 0)
            for (auto& x : v) x = -x;
        CHECK(v == std::vector<Integer>{1, -1, -1, -1, 2});
    }
}

TEST_CASE("lattice kernel examples and properties") {
    CHECK(lattice_kernel(IntegerMatrix::identity(3)).empty());

    IntegerMatrix A(2, 4);
    int rows[2][4] = {{1, 1, 1, 1}, {0, 1, 2, 3}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) A.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = rows[i][j];
    auto kernel = lattice_kernel(A);
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel)
        for (std::size_t i = 0; i < 2; ++i) {
            Integer dot(0);
            for (std::size_t j = 0; j < 4; ++j) dot += A.at(i, j) * v[j];
            CHECK(dot == 0);
        }
    // the hand-derived basis generates the same lattice
    auto basis = lattice_row_basis(kernel);
    std::vector<Integer> coords;
    CHECK(in_lattice_coordinates(basis, {1, -2, 1, 0}, coords));
    CHECK(in_lattice_coordinates(basis, {0, 1, -2, 1}, coords));
    CHECK_FALSE(in_lattice_coordinates(basis, {1, 0, 0, 0}, coords));

    // rank(A) + |kernel| = cols for random small matrices
    std::uint64_t state = 12345;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int round = 0; round < 40; ++round) {
        std::size_t m = 1 + next() % 4, n = 1 + next() % 5;
        IntegerMatrix M(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                M.at(i, j) = static_cast<long>(next() % 7) - 3;
        auto k = lattice_kernel(M);
        CHECK(matrix_rank(M) + k.size() == n);
        for (const auto& v : k)
            for (std::size_t i = 0; i < m; ++i) {
                Integer dot(0);
                for (std::size_t j = 0; j < n; ++j) dot += M.at(i, j) * v[j];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("determinants") {
    IntegerMatrix M(3, 3);
    int vals[3][3] = {{2, 0, 1}, {1, 1, 0}, {0, 3, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = vals[i][j];
    CHECK(determinant(M) == 5); // cofactor expansion by hand
    CHECK(determinant(IntegerMatrix::identity(5)) == 1);
    CHECK(determinant(IntegerMatrix(2, 2)) == 0);
}
