#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "phylotoric/parametrization.hpp"

using namespace phylotoric;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

std::size_t power(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// class values making every transition-matrix row sum to 1, distinct per edge
std::vector<Rational> stochastic_point(const PhyloTree& t, const GroupBasedModel& m) {
    std::vector<Rational> point;
    for (int e = 1; e <= t.n_edges(); ++e) {
        // sizes of the classes
        std::vector<long> size(static_cast<std::size_t>(m.n_classes), 0);
        for (int g = 0; g < m.group.size(); ++g) ++size[static_cast<std::size_t>(m.class_of(g))];
        // put mass (e+c+1)/K on class c, then rescale the identity class to fix the sum
        std::vector<Rational> vals;
        Rational rest(0);
        for (int c = 1; c < m.n_classes; ++c) {
            Rational v(e + c, 40 * m.n_classes);
            vals.push_back(v);
            rest += v * Rational(size[static_cast<std::size_t>(c)]);
        }
        point.push_back(Rational(1) - rest); // identity class
        for (const auto& v : vals) point.push_back(v);
    }
    return point;
}

} // namespace

TEST_CASE("CFN claw probability coordinates match the hand derivation") {
    PhyloTree claw = parse_newick("(1,2,3);");
    const auto& cfn = model_by_id("CFN");
    ProbabilityMap pm = probability_map(claw, cfn);
    REQUIRE(pm.coords.size() == 8);
    CHECK(pm.coords[0] == P(pm.ring, "1/2*a1*a2*a3 + 1/2*b1*b2*b3")); // p_000
    CHECK(pm.coords[4] == P(pm.ring, "1/2*b1*a2*a3 + 1/2*a1*b2*b3")); // p_100
    for (const auto& p : pm.coords) {
        CHECK(p.total_degree() == 3);
        for (const auto& t : p.terms()) CHECK(t.coeff == Rational(1, 2));
    }
}

TEST_CASE("total probability is one under stochastic substitution") {
    for (const auto& entry : catalog(4)) {
        for (const auto& model : builtin_models()) {
            ProbabilityMap pm = probability_map(entry.shape, model);
            auto point = stochastic_point(entry.shape, model);
            Rational total(0);
            for (const auto& p : pm.coords) total += p.evaluate(point);
            CHECK(total == Rational(1));
        }
    }
}

TEST_CASE("fourier transform entries, involution, and round trip") {
    FiniteAbelianGroup z2{1};
    FourierTransform f1 = fourier_transform(1, z2);
    CHECK(f1.dim == 2);
    CHECK(f1.entry(0, 0) == 1);
    CHECK(f1.entry(0, 1) == 1);
    CHECK(f1.entry(1, 0) == 1);
    CHECK(f1.entry(1, 1) == -1);

    FourierTransform f2 = fourier_transform(2, z2);
    std::vector<int> row3;
    for (std::size_t g = 0; g < 4; ++g) row3.push_back(f2.entry(3, g));
    CHECK(row3 == std::vector<int>{1, -1, -1, 1});

    // forward * inverse = identity, exactly, n <= 3 and both groups
    for (int k = 1; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n) {
            FiniteAbelianGroup G{k};
            FourierTransform ft = fourier_transform(n, G);
            for (std::size_t i = 0; i < ft.dim; ++i)
                for (std::size_t j = 0; j < ft.dim; ++j) {
                    Rational sum(0);
                    for (std::size_t l = 0; l < ft.dim; ++l)
                        sum += Rational(ft.entry(i, l)) * ft.inverse_entry(l, j);
                    CHECK(sum == Rational(i == j ? 1 : 0));
                }
        }
}

TEST_CASE("CFN claw fourier coordinates") {
    PhyloTree claw = parse_newick("(1,2,3);");
    const auto& cfn = model_by_id("CFN");
    FourierMap fm = fourier_map(claw, cfn);
    REQUIRE(fm.coords.size() == 8);

    auto mono = [&](std::size_t i) { return Polynomial::from_monomial(fm.ring, *fm.coords[i]).str(); };
    CHECK(fm.coords[0b000].has_value());
    CHECK(mono(0b000) == "f1_0*f2_0*f3_0");
    CHECK(mono(0b011) == "f1_0*f2_1*f3_1");
    CHECK(mono(0b101) == "f1_1*f2_0*f3_1");
    CHECK(mono(0b110) == "f1_1*f2_1*f3_0");
    for (std::size_t i : {std::size_t{1}, std::size_t{2}, std::size_t{4}, std::size_t{7}})
        CHECK_FALSE(fm.coords[i].has_value());
}

TEST_CASE("JC claw collapses to five monomials with multiplicities 1,3,3,3,6") {
    PhyloTree claw = parse_newick("(1,2,3);");
    const auto& jc = model_by_id("JC");
    FourierMap fm = fourier_map(claw, jc);

    std::map<std::string, int> counts;
    for (const auto& c : fm.coords)
        if (c) ++counts[Polynomial::from_monomial(fm.ring, *c).str()];
    REQUIRE(counts.size() == 5);
    CHECK(counts["f1_0*f2_0*f3_0"] == 1);
    CHECK(counts["f1_0*f2_1*f3_1"] == 3);
    CHECK(counts["f1_1*f2_0*f3_1"] == 3);
    CHECK(counts["f1_1*f2_1*f3_0"] == 3);
    CHECK(counts["f1_1*f2_1*f3_1"] == 6);

    ExponentMatrix em = exponent_matrix(fm);
    CHECK(em.nq == 5);
    CHECK(em.np == 5);
    CHECK(em.A.rows() == 6);
    CHECK(em.A.cols() == 5);
    CHECK(matrix_rank(em.A) == 4);
    // first-occurrence column order puts the all-zero pattern first
    CHECK(Polynomial::from_monomial(fm.ring, em.columns[0]).str() == "f1_0*f2_0*f3_0");
    CHECK(Polynomial::from_monomial(fm.ring, em.columns[4]).str() == "f1_1*f2_1*f3_1");
}

TEST_CASE("parity and homogeneity invariants") {
    for (const auto& entry : catalog(4)) {
        for (const auto& model : builtin_models()) {
            FourierMap fm = fourier_map(entry.shape, model);
            std::size_t nonzero = 0;
            for (const auto& c : fm.coords)
                if (c) {
                    ++nonzero;
                    CHECK(c->degree() == entry.shape.n_edges());
                    // each edge block contributes exactly one factor
                    for (int e = 1; e <= entry.shape.n_edges(); ++e) {
                        int block = 0;
                        for (int cls = 0; cls < model.n_fourier_classes; ++cls)
                            block += (*c)[static_cast<std::size_t>(
                                (e - 1) * model.n_fourier_classes + cls)];
                        CHECK(block == 1);
                    }
                }
            CHECK(nonzero ==
                  power(static_cast<std::size_t>(model.group.size()), entry.shape.n_leaves() - 1));
        }
    }
}

TEST_CASE("5-star JC spans a 27-dimensional space") {
    PhyloTree star = parse_newick("(1,2,3,4,5);");
    ExponentMatrix em = exponent_matrix(fourier_map(star, model_by_id("JC")));
    CHECK(em.nq == 27);
    CHECK(em.np == 27);
    CHECK(matrix_rank(em.A) == 6);
}

TEST_CASE("maps are root independent") {
    for (const auto& entry : catalog(4)) {
        const PhyloTree& t = entry.shape;
        for (const char* id : {"CFN", "K2P"}) {
            const auto& model = model_by_id(id);
            ProbabilityMap pm0 = probability_map(t, model);
            FourierMap fm0 = fourier_map(t, model);
            for (int root = 1; root <= t.n_vertices(); ++root) {
                ProbabilityMap pm = probability_map(t, model, root);
                FourierMap fm = fourier_map(t, model, root);
                for (std::size_t i = 0; i < pm.coords.size(); ++i)
                    CHECK(pm.coords[i] == pm0.coords[i]);
                for (std::size_t i = 0; i < fm.coords.size(); ++i) {
                    CHECK(fm.coords[i].has_value() == fm0.coords[i].has_value());
                    if (fm.coords[i]) CHECK(*fm.coords[i] == *fm0.coords[i]);
                }
            }
        }
    }
}

TEST_CASE("leaf relabeling preserves nq, np and rank") {
    PhyloTree quartet = parse_newick("((1,2),(3,4));");
    PhyloTree relabeled = relabel_leaves(quartet, {3, 1, 4, 2});
    for (const auto& model : builtin_models()) {
        ExponentMatrix a = exponent_matrix(fourier_map(quartet, model));
        ExponentMatrix b = exponent_matrix(fourier_map(relabeled, model));
        CHECK(a.nq == b.nq);
        CHECK(a.np == b.np);
        CHECK(matrix_rank(a.A) == matrix_rank(b.A));
    }
}

TEST_CASE("the commuting square holds exactly for all models on small trees") {
    // CFN claw first: the hand-checkable case
    CHECK(verify_commutes(parse_newick("(1,2,3);"), model_by_id("CFN")));
    CHECK(verify_commutes(parse_newick("(1,2,3);"), model_by_id("K3P")));
    for (const auto& entry : catalog(4))
        CHECK(verify_commutes(entry.shape, model_by_id("JC")));
}

TEST_CASE("spot evaluation of the commuting square at rational points") {
    PhyloTree claw = parse_newick("(1,2,3);");
    const auto& jc = model_by_id("JC");
    ProbabilityMap pm = probability_map(claw, jc);
    FourierMap fm = fourier_map(claw, jc);
    FourierTransform ft = fourier_transform(3, jc.group);

    std::uint64_t state = 99;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int round = 0; round < 5; ++round) {
        std::vector<Rational> m_point;
        for (std::size_t i = 0; i < pm.ring->nvars(); ++i)
            m_point.push_back(Rational(static_cast<long>(next() % 17) - 8,
                                       static_cast<long>(next() % 9) + 1));
        // Fourier parameter values induced by the substitution
        std::vector<Rational> f_point(fm.ring->nvars(), Rational(0));
        for (int e = 1; e <= claw.n_edges(); ++e)
            for (int c = 0; c < jc.n_fourier_classes; ++c) {
                Polynomial form = fourier_param_in_prob_params(jc, e, c, pm.ring);
                f_point[static_cast<std::size_t>(
                    fm.ring->var_index(jc.fourier_param_name(e, c)))] = form.evaluate(m_point);
            }
        for (std::size_t h = 0; h < ft.dim; ++h) {
            Rational lhs(0);
            for (std::size_t g = 0; g < ft.dim; ++g)
                lhs += Rational(ft.entry(h, g)) * pm.coords[g].evaluate(m_point);
            Rational rhs(0);
            if (fm.coords[h])
                rhs = Polynomial::from_monomial(fm.ring, *fm.coords[h]).evaluate(f_point);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("a non-self-dual hand-made partition is rejected") {
    // classes {00}, {01}, {10, 11}: its character sums distinguish 10 from 11
    GroupBasedModel broken;
    broken.id = "broken";
    broken.group = FiniteAbelianGroup{2};
    broken.state_names = {"A", "C", "G", "T"};
    broken.class_of_element = {0, 1, 2, 2};
    broken.n_classes = 3;
    // deliberately wire the Fourier classes to the probability partition
    broken.fourier_class_of_element = broken.class_of_element;
    broken.n_fourier_classes = 3;

    auto ring = Ring::make({"a1", "b1", "c1"});
    CHECK_THROWS_AS(fourier_param_in_prob_params(broken, 1, 2, ring), DomainError);
}
