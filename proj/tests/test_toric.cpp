#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "phylotoric/toric.hpp"

using namespace phylotoric;

namespace {

IntegerMatrix from_rows(std::vector<std::vector<int>> rows) {
    IntegerMatrix A(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) A.at(i, j) = rows[i][j];
    return A;
}

IntegerMatrix jc_claw_matrix() {
    PhyloTree claw = parse_newick("(1,2,3);");
    return exponent_matrix(fourier_map(claw, model_by_id("JC"))).A;
}

std::vector<std::string> basis_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.basis()->elements) out.push_back(g.str());
    return out;
}

} // namespace

TEST_CASE("toric ideal of the JC claw is the single cubic") {
    Ideal I = toric_ideal(jc_claw_matrix());
    REQUIRE(I.basis());
    REQUIRE(I.basis()->elements.size() == 1);
    const Polynomial& g = I.basis()->elements[0];
    // q1*q5^2 - q2*q3*q4 up to the overall sign fixed by monic normalization
    Polynomial expected = parse_polynomial(I.ring(), "q2*q3*q4 - q1*q5^2");
    CHECK(g == expected);
    CHECK(cone_dimension(jc_claw_matrix()) == 4);
    CHECK(degree_via_hilbert(I) == 3);
    CHECK(degree_profile(I) == std::map<int, int>{{3, 1}});
}

TEST_CASE("toric ideal of the CFN claw is zero") {
    PhyloTree claw = parse_newick("(1,2,3);");
    ExponentMatrix em = exponent_matrix(fourier_map(claw, model_by_id("CFN")));
    CHECK(em.nq == 4);
    Ideal I = toric_ideal(em);
    CHECK(I.basis()->elements.empty());
    CHECK(cone_dimension(em.A) == 4);
    CHECK(degree_via_hilbert(I) == 1);
    CHECK(degree_profile(I).empty());
}

TEST_CASE("rational normal cubic") {
    IntegerMatrix A = from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
    Ideal I = toric_ideal(A);
    auto gens = basis_strings(I);
    REQUIRE(gens.size() == 3);
    // the three quadrics, in ascending leading-monomial order
    CHECK(std::find(gens.begin(), gens.end(), "q2^2 - q1*q3") != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), "q2*q3 - q1*q4") != gens.end());
    CHECK(std::find(gens.begin(), gens.end(), "q3^2 - q2*q4") != gens.end());
    CHECK(degree_via_hilbert(I) == 3);
    CHECK(degree_via_volume(A) == 3);
    CHECK(degree_profile(I) == std::map<int, int>{{2, 3}});
}

TEST_CASE("normalized volumes of small polytopes") {
    // unit simplex {0, e1, e2, e3} has volume 1
    IntegerMatrix simplex = from_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(degree_via_volume(simplex) == 1);

    // JC claw polytope has volume 3, matching the Hilbert degree
    CHECK(degree_via_volume(jc_claw_matrix()) == 3);

    // unit square = two unimodular triangles
    IntegerMatrix square = from_rows({{0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(degree_via_volume(square) == 2);

    // interior and duplicate points change nothing
    IntegerMatrix square_plus = from_rows({{0, 1, 0, 1, 1, 0}, {0, 0, 1, 1, 1, 0}});
    CHECK(degree_via_volume(square_plus) == 2);

    // volumes are taken in the lattice generated by the differences: the two
    // endpoints alone span 3Z, so their segment is unimodular
    IntegerMatrix segment = from_rows({{0, 3}});
    CHECK(degree_via_volume(segment) == 1);
    IntegerMatrix subdivided = from_rows({{0, 1, 2, 3}});
    CHECK(degree_via_volume(subdivided) == 3);

    // all columns equal: flagged as degenerate
    IntegerMatrix degenerate = from_rows({{2, 2}, {1, 1}});
    CHECK_THROWS_AS(degree_via_volume(degenerate), DomainError);
}

TEST_CASE("volume agrees with hilbert degree on catalog(4)") {
    for (const auto& entry : catalog(4)) {
        for (const char* id : {"CFN", "JC"}) {
            ExponentMatrix em = exponent_matrix(fourier_map(entry.shape, model_by_id(id)));
            Ideal I = toric_ideal(em);
            CHECK(degree_via_volume(em.A) == degree_via_hilbert(I));
        }
    }
}

TEST_CASE("toric ideal does not depend on the kernel basis") {
    IntegerMatrix A = jc_claw_matrix();
    Ideal reference = toric_ideal(A);

    // rebuild from a deliberately transformed kernel basis
    auto kernel = lattice_kernel(A); // single vector here; stress with multiples
    IntegerMatrix B = from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
    auto kernel_b = lattice_kernel(B);
    REQUIRE(kernel_b.size() == 2);
    // unimodular change: (u1 + 3*u2, -u2)
    std::vector<std::vector<Integer>> twisted(2, std::vector<Integer>(4));
    for (std::size_t j = 0; j < 4; ++j) {
        twisted[0][j] = kernel_b[0][j] + 3 * kernel_b[1][j];
        twisted[1][j] = -kernel_b[1][j];
    }
    auto ring = Ring::make({"q1", "q2", "q3", "q4"});
    auto binomial = [&](const std::vector<Integer>& u) {
        Monomial plus(4), minus(4);
        for (std::size_t i = 0; i < 4; ++i) {
            if (u[i] > 0) plus[i] = static_cast<std::int32_t>(u[i].get_si());
            if (u[i] < 0) minus[i] = static_cast<std::int32_t>(Integer(-u[i]).get_si());
        }
        return Polynomial::from_monomial(ring, plus) - Polynomial::from_monomial(ring, minus);
    };
    Ideal from_twisted =
        saturate_homogeneous(Ideal(ring, {binomial(twisted[0]), binomial(twisted[1])}));
    Ideal from_straight = toric_ideal(B);
    CHECK(basis_strings(from_twisted) == basis_strings(from_straight));
    (void)kernel;
    (void)reference;
}

TEST_CASE("every generator vanishes under the monomial substitution") {
    // K3P on the 4-leaf trees is exercised by the acceptance suite; here the
    // matrix covers all models at claw size and all trees for CFN/JC/K2P
    auto instances = [] {
        std::vector<std::pair<PhyloTree, std::string>> out;
        for (const auto& entry : catalog(4))
            for (const char* id : {"CFN", "JC"}) out.push_back({entry.shape, id});
        out.push_back({parse_newick("(1,2,3);"), "K2P"});
        out.push_back({parse_newick("(1,2,3,4);"), "K2P"});
        out.push_back({parse_newick("(1,2,3);"), "K3P"});
        return out;
    }();
    for (const auto& [tree, id] : instances) {
        {
            const auto& model = model_by_id(id);
            FourierMap fm = fourier_map(tree, model);
            ExponentMatrix em = exponent_matrix(fm);
            Ideal I = toric_ideal(em);
            // q_col -> its monomial in the f parameters, as exact polynomials
            std::vector<std::optional<Polynomial>> images;
            for (const auto& col : em.columns)
                images.push_back(Polynomial::from_monomial(fm.ring, col));
            for (const auto& g : I.basis()->elements)
                CHECK(g.substitute(fm.ring, images).is_zero());
        }
    }
}

TEST_CASE("probability invariants of the JC claw vanish on the model") {
    PhyloTree claw = parse_newick("(1,2,3);");
    const auto& jc = model_by_id("JC");
    ProbabilityMap pm = probability_map(claw, jc);
    FourierMap fm = fourier_map(claw, jc);
    FourierTransform ft = fourier_transform(3, jc.group);
    Ideal I = toric_ideal(exponent_matrix(fm));

    ProbabilityInvariants inv = probability_invariants(I, fm, ft);
    REQUIRE(inv.generators.size() == 1);
    CHECK(inv.generators[0].total_degree() == 3);
    CHECK(inv.skipped.empty());
    CHECK(inv.parity_linear.size() == 64 - 16); // parity-violating coordinates

    std::uint64_t state = 31337;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int round = 0; round < 5; ++round) {
        // random rational edge parameters
        std::vector<Rational> theta;
        for (std::size_t i = 0; i < pm.ring->nvars(); ++i)
            theta.push_back(Rational(static_cast<long>(next() % 23) - 11,
                                     static_cast<long>(next() % 7) + 1));
        // evaluate the probability coordinates at theta
        std::vector<Rational> p_values;
        for (const auto& p : pm.coords) p_values.push_back(p.evaluate(theta));
        for (const auto& g : inv.generators) CHECK(g.evaluate(p_values).is_zero());
        for (const auto& l : inv.parity_linear) CHECK(l.evaluate(p_values).is_zero());
    }
}

TEST_CASE("CFN claw yields only the four parity invariants") {
    PhyloTree claw = parse_newick("(1,2,3);");
    const auto& cfn = model_by_id("CFN");
    FourierMap fm = fourier_map(claw, cfn);
    FourierTransform ft = fourier_transform(3, cfn.group);
    Ideal I = toric_ideal(exponent_matrix(fm));
    ProbabilityInvariants inv = probability_invariants(I, fm, ft);
    CHECK(inv.generators.empty());
    CHECK(inv.parity_linear.size() == 4);
    for (const auto& l : inv.parity_linear) CHECK(l.total_degree() == 1);
}

TEST_CASE("dimension, degree and profile are relabeling invariant") {
    PhyloTree quartet = parse_newick("((1,2),(3,4));");
    PhyloTree relabeled = relabel_leaves(quartet, {2, 4, 1, 3});
    for (const char* id : {"CFN", "JC"}) {
        ExponentMatrix a = exponent_matrix(fourier_map(quartet, model_by_id(id)));
        ExponentMatrix b = exponent_matrix(fourier_map(relabeled, model_by_id(id)));
        Ideal ia = toric_ideal(a);
        Ideal ib = toric_ideal(b);
        CHECK(cone_dimension(a.A) == cone_dimension(b.A));
        CHECK(degree_via_hilbert(ia) == degree_via_hilbert(ib));
        CHECK(degree_profile(ia) == degree_profile(ib));
    }
}

TEST_CASE("budget exhaustion carries the unsaturated ideal") {
    // the rational normal cubic needs genuine S-pair work
    IntegerMatrix B = from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
    try {
        StepBudget tiny{1, 0};
        toric_ideal(B, &tiny);
        CHECK(false);
    } catch (const ToricBudgetExceeded& e) {
        CHECK_FALSE(e.unsaturated().generators().empty());
        CHECK(e.limit() == 1);
    }
}
