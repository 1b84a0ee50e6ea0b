#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "phylotoric/model.hpp"

using namespace phylotoric;

TEST_CASE("the four builtin models and their class counts") {
    auto models = builtin_models();
    REQUIRE(models.size() == 4);

    const auto& cfn = model_by_id("CFN");
    CHECK(cfn.group.size() == 2);
    CHECK(cfn.n_classes == 2);
    CHECK(cfn.class_of(0) == 0);
    CHECK(cfn.class_of(1) == 1);

    const auto& jc = model_by_id("JC");
    CHECK(jc.group.size() == 4);
    CHECK(jc.n_classes == 2);
    CHECK(jc.class_of(0) == 0);
    for (int g = 1; g < 4; ++g) CHECK(jc.class_of(g) == 1);

    CHECK(model_by_id("K2P").n_classes == 3);
    CHECK(model_by_id("K3P").n_classes == 4);
    CHECK_THROWS_AS(model_by_id("JC69"), DomainError);
}

TEST_CASE("state map and the transition class") {
    const auto& k2p = model_by_id("K2P");
    // A=00, C=01, G=10, T=11; the A<->G transition adds 10
    CHECK(k2p.state_names == std::vector<std::string>{"A", "C", "G", "T"});
    CHECK(k2p.group.element_name(2) == "10");
    CHECK(k2p.class_of(2) == 1); // transition class
    CHECK(k2p.class_of(1) == 2);
    CHECK(k2p.class_of(3) == 2);
}

TEST_CASE("character values") {
    FiniteAbelianGroup z2{1};
    for (int g = 0; g < 2; ++g) CHECK(character_value(z2, 0, g) == 1);

    FiniteAbelianGroup v4{2};
    for (int g = 0; g < 4; ++g) CHECK(character_value(v4, 0, g) == 1);
    CHECK(character_value(v4, 3, 2) == -1); // <(1,1),(1,0)> = 1
    CHECK(character_value(v4, 3, 3) == 1);  // <(1,1),(1,1)> = 2
    CHECK_THROWS_AS(character_value(v4, 4, 0), DomainError);
}

TEST_CASE("character orthogonality, exhaustively") {
    for (int k = 1; k <= 2; ++k) {
        FiniteAbelianGroup G{k};
        for (int h1 = 0; h1 < G.size(); ++h1)
            for (int h2 = 0; h2 < G.size(); ++h2) {
                int sum = 0;
                for (int g = 0; g < G.size(); ++g) sum += G.character(h1, g) * G.character(h2, g);
                CHECK(sum == (h1 == h2 ? G.size() : 0));
            }
    }
}

TEST_CASE("symbolic transition matrices") {
    const auto& cfn = model_by_id("CFN");
    auto M = transition_matrix_symbolic(cfn, 1);
    CHECK(M == std::vector<std::vector<std::string>>{{"a1", "b1"}, {"b1", "a1"}});

    const auto& jc = model_by_id("JC");
    auto J = transition_matrix_symbolic(jc, 7);
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h)
            CHECK(J[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] ==
                  (g == h ? "a7" : "b7"));

    const auto& k3p = model_by_id("K3P");
    auto K = transition_matrix_symbolic(k3p, 2);
    for (int g = 0; g < 4; ++g) {
        std::set<std::string> row(K[static_cast<std::size_t>(g)].begin(),
                                  K[static_cast<std::size_t>(g)].end());
        CHECK(row == std::set<std::string>{"a2", "b2", "c2", "d2"});
    }

    // symmetry and constant row multiset hold for every builtin model
    for (const auto& m : builtin_models()) {
        auto T = transition_matrix_symbolic(m, 3);
        std::multiset<std::string> first(T[0].begin(), T[0].end());
        for (std::size_t g = 0; g < T.size(); ++g) {
            for (std::size_t h = 0; h < T.size(); ++h) CHECK(T[g][h] == T[h][g]);
            CHECK(std::multiset<std::string>(T[g].begin(), T[g].end()) == first);
        }
    }
}

TEST_CASE("Fourier-side class structure") {
    // CFN, JC and K3P transform to their own partitions
    for (const char* id : {"CFN", "JC", "K3P"}) {
        const auto& m = model_by_id(id);
        CHECK(m.fourier_class_of_element == m.class_of_element);
    }
    // K2P transforms to three values as well, but the partition swaps the
    // transition element with the first transversion
    const auto& k2p = model_by_id("K2P");
    CHECK(k2p.n_fourier_classes == 3);
    CHECK(k2p.n_fourier_classes <= k2p.n_classes);
    CHECK(k2p.fourier_class_of(0) == 0);
    CHECK(k2p.fourier_class_of(1) == 1);
    CHECK(k2p.fourier_class_of(2) == 2);
    CHECK(k2p.fourier_class_of(3) == 2);

    // the identity always forms its own Fourier class
    for (const auto& m : builtin_models()) {
        int cls0 = m.fourier_class_of(0);
        for (int g = 1; g < m.group.size(); ++g) CHECK(m.fourier_class_of(g) != cls0);
        CHECK(m.n_fourier_classes <= m.n_classes);
    }
}
