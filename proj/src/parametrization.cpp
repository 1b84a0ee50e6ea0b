#include "phylotoric/parametrization.hpp"

#include <algorithm>
#include <unordered_map>

namespace phylotoric {

namespace {

RingPtr prob_ring(const PhyloTree& tree, const GroupBasedModel& model) {
    std::vector<std::string> names;
    for (int e = 1; e <= tree.n_edges(); ++e)
        for (int c = 0; c < model.n_classes; ++c) names.push_back(model.prob_param_name(e, c));
    return Ring::make(std::move(names));
}

RingPtr fourier_ring(const PhyloTree& tree, const GroupBasedModel& model) {
    std::vector<std::string> names;
    for (int e = 1; e <= tree.n_edges(); ++e)
        for (int c = 0; c < model.n_fourier_classes; ++c)
            names.push_back(model.fourier_param_name(e, c));
    return Ring::make(std::move(names));
}

std::size_t power(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// decode tuple index into group elements, leaf 1 most significant
std::vector<int> decode_tuple(std::size_t idx, int n, int gsize) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(gsize));
        idx /= static_cast<std::size_t>(gsize);
    }
    return t;
}

} // namespace

ProbabilityMap probability_map(const PhyloTree& tree, const GroupBasedModel& model,
                               std::optional<int> root) {
    int r = root.value_or(tree.default_root());
    if (r < 1 || r > tree.n_vertices()) throw DomainError("root vertex out of range");

    const auto& G = model.group;
    int n = tree.n_leaves();
    int n_internal = tree.n_vertices() - n;
    std::size_t n_coords = power(static_cast<std::size_t>(G.size()), n);
    std::size_t n_assign = power(static_cast<std::size_t>(G.size()), n_internal);

    RingPtr ring = prob_ring(tree, model);
    Rational weight(1, G.size());

    std::vector<std::vector<Term>> acc(n_coords);
    std::vector<int> state(static_cast<std::size_t>(tree.n_vertices()) + 1, 0);
    for (std::size_t gi = 0; gi < n_coords; ++gi) {
        std::vector<int> leaf_states = decode_tuple(gi, n, G.size());
        for (int i = 0; i < n; ++i) state[static_cast<std::size_t>(i + 1)] = leaf_states[static_cast<std::size_t>(i)];
        for (std::size_t ai = 0; ai < n_assign; ++ai) {
            std::vector<int> internal = decode_tuple(ai, n_internal, G.size());
            for (int i = 0; i < n_internal; ++i)
                state[static_cast<std::size_t>(n + 1 + i)] = internal[static_cast<std::size_t>(i)];
            Monomial m(ring->nvars());
            for (int e = 1; e <= tree.n_edges(); ++e) {
                auto [v, w] = tree.edge(e);
                int cls = model.class_of(
                    G.add(state[static_cast<std::size_t>(v)], state[static_cast<std::size_t>(w)]));
                m[static_cast<std::size_t>((e - 1) * model.n_classes + cls)] += 1;
            }
            acc[gi].push_back({std::move(m), weight});
        }
    }
    ProbabilityMap pm{std::make_shared<PhyloTree>(tree),
                      std::make_shared<GroupBasedModel>(model), ring, {}};
    pm.coords.reserve(n_coords);
    for (auto& terms : acc) pm.coords.push_back(Polynomial::from_terms(ring, std::move(terms)));
    return pm;
}

FourierTransform fourier_transform(int n_leaves, const FiniteAbelianGroup& G) {
    if (n_leaves < 1) throw DomainError("fourier_transform needs n >= 1");
    return FourierTransform{n_leaves, G.size(),
                            power(static_cast<std::size_t>(G.size()), n_leaves)};
}

FourierMap fourier_map(const PhyloTree& tree, const GroupBasedModel& model,
                       std::optional<int> root) {
    int r = root.value_or(tree.default_root());
    auto splits = edge_splits(tree, r);

    const auto& G = model.group;
    int n = tree.n_leaves();
    std::size_t n_coords = power(static_cast<std::size_t>(G.size()), n);
    RingPtr ring = fourier_ring(tree, model);

    FourierMap fm{std::make_shared<PhyloTree>(tree),
                  std::make_shared<GroupBasedModel>(model), ring, {}};
    fm.coords.resize(n_coords);
    for (std::size_t hi = 0; hi < n_coords; ++hi) {
        std::vector<int> h = decode_tuple(hi, n, G.size());
        int total = 0;
        for (int x : h) total = G.add(total, x);
        if (total != 0) continue; // parity-violating coordinate stays zero
        Monomial m(ring->nvars());
        for (const auto& split : splits) {
            int sum = 0;
            for (int leaf : split.far_leaves) sum = G.add(sum, h[static_cast<std::size_t>(leaf - 1)]);
            int cls = model.fourier_class_of(sum);
            m[static_cast<std::size_t>((split.edge_id - 1) * model.n_fourier_classes + cls)] += 1;
        }
        fm.coords[hi] = std::move(m);
    }
    return fm;
}

ExponentMatrix exponent_matrix(const FourierMap& fm) {
    ExponentMatrix em;
    em.fourier_ring = fm.ring;
    em.coord_column.assign(fm.coords.size(), -1);
    std::unordered_map<Monomial, int, MonomialHash> seen;
    for (std::size_t i = 0; i < fm.coords.size(); ++i) {
        if (!fm.coords[i]) continue;
        auto it = seen.find(*fm.coords[i]);
        if (it == seen.end()) {
            it = seen.emplace(*fm.coords[i], static_cast<int>(em.columns.size())).first;
            em.columns.push_back(*fm.coords[i]);
        }
        em.coord_column[i] = it->second;
    }
    em.nq = static_cast<int>(em.columns.size());
    em.np = em.nq;
    em.A = IntegerMatrix(fm.ring->nvars(), em.columns.size());
    for (std::size_t c = 0; c < em.columns.size(); ++c)
        for (std::size_t r = 0; r < fm.ring->nvars(); ++r)
            em.A.at(r, c) = em.columns[c][r];
    return em;
}

int distinct_p_classes(const ProbabilityMap& pm) {
    std::vector<std::string> reprs;
    reprs.reserve(pm.coords.size());
    for (const auto& p : pm.coords) reprs.push_back(p.str());
    std::sort(reprs.begin(), reprs.end());
    reprs.erase(std::unique(reprs.begin(), reprs.end()), reprs.end());
    return static_cast<int>(reprs.size());
}

Polynomial fourier_param_in_prob_params(const GroupBasedModel& model, int edge,
                                        int fourier_class, const RingPtr& prob_ring) {
    const auto& G = model.group;
    std::optional<Polynomial> form;
    for (int h = 0; h < G.size(); ++h) {
        if (model.fourier_class_of(h) != fourier_class) continue;
        std::vector<Term> terms;
        for (int g = 0; g < G.size(); ++g) {
            int idx = prob_ring->var_index(model.prob_param_name(edge, model.class_of(g)));
            if (idx < 0) throw DomainError("probability ring lacks parameter for edge");
            Monomial m(prob_ring->nvars());
            m[static_cast<std::size_t>(idx)] += 1;
            terms.push_back({std::move(m), Rational(G.character(h, g))});
        }
        Polynomial candidate = Polynomial::from_terms(prob_ring, std::move(terms));
        if (form && !(*form == candidate))
            throw DomainError("Fourier parameter depends on the class representative; "
                              "model partition is not self-dual");
        form = std::move(candidate);
    }
    if (!form) throw DomainError("empty Fourier class");
    return *form;
}

bool verify_commutes(const PhyloTree& tree, const GroupBasedModel& model) {
    ProbabilityMap pm = probability_map(tree, model);
    FourierMap fm = fourier_map(tree, model);
    FourierTransform ft = fourier_transform(tree.n_leaves(), model.group);

    // substitution images for every Fourier parameter, checked for
    // representative independence
    std::vector<std::optional<Polynomial>> images(fm.ring->nvars());
    for (int e = 1; e <= tree.n_edges(); ++e)
        for (int c = 0; c < model.n_fourier_classes; ++c) {
            int idx = fm.ring->var_index(model.fourier_param_name(e, c));
            images[static_cast<std::size_t>(idx)] =
                fourier_param_in_prob_params(model, e, c, pm.ring);
        }

    for (std::size_t h = 0; h < ft.dim; ++h) {
        // row h of the transform applied to the probability coordinates
        std::vector<Term> terms;
        for (std::size_t g = 0; g < ft.dim; ++g) {
            const Polynomial& p = pm.coords[g];
            int sign = ft.entry(h, g);
            for (const auto& t : p.terms())
                terms.push_back({t.mono, sign > 0 ? t.coeff : -t.coeff});
        }
        Polynomial transformed = Polynomial::from_terms(pm.ring, std::move(terms));

        Polynomial expected = Polynomial::zero(pm.ring);
        if (fm.coords[h])
            expected =
                Polynomial::from_monomial(fm.ring, *fm.coords[h]).substitute(pm.ring, images);
        if (!(transformed == expected)) return false;
    }
    return true;
}

} // namespace phylotoric
