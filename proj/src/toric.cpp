#include "phylotoric/toric.hpp"
#include <numeric>
#include <set>

#include <algorithm>

namespace phylotoric {

namespace {

RingPtr q_ring(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
    return Ring::make(std::move(names));
}

Polynomial kernel_vector_binomial(const RingPtr& ring, const std::vector<Integer>& u) {
    Monomial plus(ring->nvars()), minus(ring->nvars());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > 0) plus[i] = static_cast<std::int32_t>(u[i].get_si());
        if (u[i] < 0) minus[i] = static_cast<std::int32_t>(Integer(-u[i]).get_si());
    }
    return Polynomial::from_monomial(ring, plus) - Polynomial::from_monomial(ring, minus);
}

} // namespace

namespace {

Integer l1_norm(const std::vector<Integer>& v) {
    Integer s(0);
    for (const auto& x : v) s += x < 0 ? Integer(-x) : x;
    return s;
}

// Short generators keep the lattice-basis ideal tame.  LLL shortens the
// basis in the euclidean sense; a local search then trims the 1-norm, which
// is what bounds the binomial degrees.  Finally the set is enriched with
// short pairwise combinations: the saturation identity only needs the
// vectors to generate the kernel lattice, and redundant short vectors start
// the Groebner run much closer to the toric ideal.
std::vector<std::vector<Integer>> short_kernel_generators(const IntegerMatrix& A) {
    auto basis = lll_reduce(lattice_kernel(A));
    std::size_t k = basis.size();
    if (k == 0) return basis;
    std::size_t n = basis[0].size();

    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) continue;
                for (int s : {1, -1}) {
                    std::vector<Integer> cand(n);
                    for (std::size_t l = 0; l < n; ++l) cand[l] = basis[i][l] + s * basis[j][l];
                    if (l1_norm(cand) < l1_norm(basis[i])) {
                        basis[i] = std::move(cand);
                        improved = true;
                    }
                }
            }
    }

    Integer thresh(0);
    for (const auto& v : basis) thresh = std::max(thresh, l1_norm(v));
    std::set<std::vector<Integer>> seen(basis.begin(), basis.end());
    std::vector<std::vector<Integer>> out = basis;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (int s : {1, -1}) {
                std::vector<Integer> cand(n);
                for (std::size_t l = 0; l < n; ++l) cand[l] = basis[i][l] + s * basis[j][l];
                if (l1_norm(cand) > thresh) continue;
                std::vector<Integer> neg(n);
                for (std::size_t l = 0; l < n; ++l) neg[l] = -cand[l];
                if (seen.count(cand) || seen.count(neg)) continue;
                seen.insert(cand);
                out.push_back(std::move(cand));
            }
    return out;
}

} // namespace

Ideal toric_ideal(const IntegerMatrix& A, StepBudget* budget,
                  const std::vector<std::vector<int>>& symmetries) {
    RingPtr ring = q_ring(A.cols());
    auto kernel = short_kernel_generators(A);
    std::vector<Polynomial> gens;
    for (const auto& u : kernel) gens.push_back(kernel_vector_binomial(ring, u));
    Ideal basis_ideal(ring, std::move(gens));
    if (basis_ideal.is_zero()) {
        basis_ideal.set_basis({MonomialOrder::degrevlex(), {}});
        return basis_ideal;
    }
    try {
        if (!basis_ideal.homogeneous()) return saturate_by_all_variables(basis_ideal, budget);
        if (!symmetries.empty())
            return saturate_homogeneous_symmetric(basis_ideal, symmetries, budget);
        return saturate_homogeneous(basis_ideal, budget);
    } catch (const BudgetExceeded& e) {
        throw ToricBudgetExceeded(e.limit(), basis_ideal);
    }
}

Ideal toric_ideal(const ExponentMatrix& em, StepBudget* budget,
                  const std::vector<std::vector<int>>& symmetries) {
    return toric_ideal(em.A, budget, symmetries);
}

// ---------------------------------------------------------------------------
// symmetries

namespace {

std::vector<int> decode_index(std::size_t idx, int n, int gsize) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(gsize));
        idx /= static_cast<std::size_t>(gsize);
    }
    return t;
}

std::size_t encode_index(const std::vector<int>& t, int gsize) {
    std::size_t idx = 0;
    for (int x : t) idx = idx * static_cast<std::size_t>(gsize) + static_cast<std::size_t>(x);
    return idx;
}

// column permutation induced by a coordinate bijection, if consistent
std::optional<std::vector<int>> induced_column_permutation(
    const FourierMap& fm, const ExponentMatrix& em,
    const std::vector<std::size_t>& coordinate_image) {
    std::vector<int> cperm(static_cast<std::size_t>(em.nq), -1);
    for (std::size_t i = 0; i < fm.coords.size(); ++i) {
        int c = em.coord_column[i];
        std::size_t j = coordinate_image[i];
        int c2 = em.coord_column[j];
        if ((c < 0) != (c2 < 0)) return std::nullopt;
        if (c < 0) continue;
        auto uc = static_cast<std::size_t>(c);
        if (cperm[uc] == -1)
            cperm[uc] = c2;
        else if (cperm[uc] != c2)
            return std::nullopt;
    }
    std::vector<bool> hit(static_cast<std::size_t>(em.nq), false);
    for (int x : cperm) {
        if (x < 0 || hit[static_cast<std::size_t>(x)]) return std::nullopt;
        hit[static_cast<std::size_t>(x)] = true;
    }
    return cperm;
}

} // namespace

std::vector<std::vector<int>> column_symmetries(const FourierMap& fm, const ExponentMatrix& em) {
    const PhyloTree& tree = *fm.tree;
    const GroupBasedModel& model = *fm.model;
    int n = tree.n_leaves();
    int gsize = model.group.size();
    std::size_t ncoords = fm.coords.size();

    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;
    auto consider = [&](const std::vector<std::size_t>& coordinate_image) {
        auto cperm = induced_column_permutation(fm, em, coordinate_image);
        if (!cperm) return;
        bool identity = true;
        for (std::size_t i = 0; i < cperm->size(); ++i) identity &= (*cperm)[i] == static_cast<int>(i);
        if (!identity && seen.insert(*cperm).second) out.push_back(std::move(*cperm));
    };

    // leaf permutations that fix the labeled tree
    if (n <= 6) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            if (!(relabel_leaves(tree, perm) == tree)) continue;
            std::vector<std::size_t> image(ncoords);
            for (std::size_t i = 0; i < ncoords; ++i) {
                std::vector<int> t = decode_index(i, n, gsize);
                std::vector<int> t2(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k)
                    t2[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)] - 1)] =
                        t[static_cast<std::size_t>(k)];
                image[i] = encode_index(t2, gsize);
            }
            consider(image);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // group automorphisms preserving the Fourier class partition
    int k = model.group.k;
    std::vector<std::vector<int>> autos;
    if (k == 1) {
        autos.push_back({0, 1});
    } else {
        for (int a = 1; a < 4; ++a)
            for (int b = 1; b < 4; ++b) {
                if (a == b) continue; // images of the two basis vectors must differ
                std::vector<int> phi(4);
                for (int h = 0; h < 4; ++h) {
                    int img = 0;
                    if (h & 2) img ^= a;
                    if (h & 1) img ^= b;
                    phi[static_cast<std::size_t>(h)] = img;
                }
                autos.push_back(std::move(phi));
            }
    }
    for (const auto& phi : autos) {
        bool preserves = true;
        for (int h1 = 0; h1 < gsize && preserves; ++h1)
            for (int h2 = 0; h2 < gsize && preserves; ++h2)
                preserves = (model.fourier_class_of(h1) == model.fourier_class_of(h2)) ==
                            (model.fourier_class_of(phi[static_cast<std::size_t>(h1)]) ==
                             model.fourier_class_of(phi[static_cast<std::size_t>(h2)]));
        if (!preserves) continue;
        std::vector<std::size_t> image(ncoords);
        for (std::size_t i = 0; i < ncoords; ++i) {
            std::vector<int> t = decode_index(i, n, gsize);
            for (auto& x : t) x = phi[static_cast<std::size_t>(x)];
            image[i] = encode_index(t, gsize);
        }
        consider(image);
    }
    return out;
}

int cone_dimension(const IntegerMatrix& A) { return static_cast<int>(matrix_rank(A)); }

Integer degree_via_hilbert(const Ideal& ideal) { return hilbert_dimension_degree(ideal).second; }

std::map<int, int> degree_profile(const Ideal& ideal, StepBudget* budget) {
    std::map<int, int> profile;
    for (const auto& g : minimal_generators(ideal, budget))
        ++profile[static_cast<int>(g.total_degree())];
    return profile;
}

ProbabilityInvariants probability_invariants(const Ideal& ideal, const FourierMap& fm,
                                             const FourierTransform& ft,
                                             std::uint64_t expansion_limit) {
    const auto& G = fm.model->group;
    int n = fm.tree->n_leaves();
    std::size_t dim = ft.dim;

    // probability coordinate ring p_<g1...gn>
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t g = 0; g < dim; ++g) {
        std::string name = "p";
        std::size_t rest = g;
        std::vector<int> digits(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % G.size());
            rest /= static_cast<std::size_t>(G.size());
        }
        for (int d : digits) name += static_cast<char>('0' + d);
        names.push_back(std::move(name));
    }
    ProbabilityInvariants out;
    out.p_ring = Ring::make(std::move(names));

    auto transform_row = [&](std::size_t h) {
        std::vector<Term> terms;
        terms.reserve(dim);
        for (std::size_t g = 0; g < dim; ++g) {
            Monomial m(dim);
            m[g] = 1;
            terms.push_back({std::move(m), Rational(ft.entry(h, g))});
        }
        return Polynomial::from_terms(out.p_ring, std::move(terms));
    };

    // first coordinate of each column class supplies its linear form
    std::size_t ncols = fm.ring->nvars(); // upper bound; actual columns from coord map
    (void)ncols;
    std::vector<std::optional<Polynomial>> images;
    std::vector<std::size_t> column_coord;
    {
        int max_col = -1;
        std::vector<int> coord_col(fm.coords.size(), -1);
        std::unordered_map<Monomial, int, MonomialHash> seen;
        for (std::size_t i = 0; i < fm.coords.size(); ++i) {
            if (!fm.coords[i]) continue;
            auto it = seen.find(*fm.coords[i]);
            if (it == seen.end()) {
                it = seen.emplace(*fm.coords[i], max_col + 1).first;
                ++max_col;
                column_coord.push_back(i);
            }
            coord_col[i] = it->second;
        }
        images.resize(static_cast<std::size_t>(max_col + 1));
        for (std::size_t c = 0; c < images.size(); ++c) images[c] = transform_row(column_coord[c]);
    }
    out.column_coordinate = column_coord;

    if (ideal.basis() && ideal.ring()->nvars() != images.size())
        throw DomainError("ideal ring does not match the Fourier map's column count");

    const std::vector<Polynomial>& gens =
        ideal.basis() ? ideal.basis()->elements : ideal.generators();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        // expansion cost estimate: dim^degree monomial products
        std::int64_t deg = gens[gi].total_degree();
        double cost = 1;
        for (std::int64_t i = 0; i < deg; ++i) cost *= static_cast<double>(dim);
        if (cost > static_cast<double>(expansion_limit)) {
            out.skipped.push_back(gi);
            continue;
        }
        out.generators.push_back(gens[gi].substitute(out.p_ring, images));
    }

    for (std::size_t h = 0; h < fm.coords.size(); ++h)
        if (!fm.coords[h]) out.parity_linear.push_back(transform_row(h));
    return out;
}

} // namespace phylotoric
