#include <algorithm>
#include <unordered_set>

#include "phylotoric/groebner.hpp"

namespace phylotoric {

namespace {

// --- minimal monomial generating sets --------------------------------------

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        std::int64_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps < b.exps;
    });
    std::vector<Monomial> out;
    for (auto& g : gens) {
        bool dominated = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(std::move(g));
    }
    gens = std::move(out);
}

// --- Krull dimension of R/<gens> as a max independent set of variables -----

struct DimSolver {
    std::size_t nvars;
    std::vector<std::vector<std::size_t>> supports;
    std::size_t best = 0;
    std::unordered_set<std::uint64_t> seen; // only used when nvars <= 64

    void solve(std::vector<bool>& allowed, std::size_t allowed_count) {
        if (allowed_count <= best) return;
        if (nvars <= 64) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < nvars; ++i)
                if (allowed[i]) key |= std::uint64_t{1} << i;
            if (!seen.insert(key).second) return;
        }
        // first generator whose support is still fully allowed
        const std::vector<std::size_t>* blocker = nullptr;
        for (const auto& s : supports) {
            bool inside = true;
            for (std::size_t v : s)
                if (!allowed[v]) {
                    inside = false;
                    break;
                }
            if (inside) {
                blocker = &s;
                break;
            }
        }
        if (!blocker) {
            best = std::max(best, allowed_count);
            return;
        }
        for (std::size_t v : *blocker) {
            allowed[v] = false;
            solve(allowed, allowed_count - 1);
            allowed[v] = true;
        }
    }
};

std::size_t krull_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
    DimSolver solver;
    solver.nvars = nvars;
    for (const auto& g : gens) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0) s.push_back(i);
        solver.supports.push_back(std::move(s));
    }
    std::vector<bool> allowed(nvars, true);
    solver.solve(allowed, nvars);
    return solver.best;
}

// --- Hilbert series numerator ----------------------------------------------
// H(R/I) = N(s) / (1-s)^n.  Computed by the pivot recursion
// N(I) = N(I + <m>) + s^deg(m) * N(I : m) on minimal generator lists.

using SeriesPoly = std::vector<Integer>; // coefficient of s^i at index i

SeriesPoly series_one() { return {Integer(1)}; }

void series_add_shifted(SeriesPoly& acc, const SeriesPoly& p, std::size_t shift, int sign) {
    if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sign > 0)
            acc[i + shift] += p[i];
        else
            acc[i + shift] -= p[i];
    }
}

// multiply by (1 - s^d)
void series_mul_one_minus(SeriesPoly& p, std::size_t d) {
    SeriesPoly out(p.size() + d, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += p[i];
        out[i + d] -= p[i];
    }
    p = std::move(out);
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!Monomial::coprime(gens[i], gens[j])) return false;
    return true;
}

SeriesPoly hilbert_numerator(std::vector<Monomial> gens) {
    if (gens.empty()) return series_one();
    if (pairwise_coprime(gens)) {
        SeriesPoly p = series_one();
        for (const auto& g : gens) series_mul_one_minus(p, static_cast<std::size_t>(g.degree()));
        return p;
    }
    // pivot: the most frequent variable, lowest index on ties; exponent is the
    // smallest one occurring for it
    std::size_t nvars = gens[0].size();
    std::vector<int> freq(nvars, 0);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < nvars; ++i)
            if (g[i] > 0) ++freq[i];
    std::size_t pivot_var = 0;
    for (std::size_t i = 1; i < nvars; ++i)
        if (freq[i] > freq[pivot_var]) pivot_var = i;
    std::int32_t e = INT32_MAX;
    for (const auto& g : gens)
        if (g[pivot_var] > 0) e = std::min(e, g[pivot_var]);

    // colon branch I : x^e
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        Monomial m = g;
        m[pivot_var] = std::max(0, m[pivot_var] - e);
        colon.push_back(std::move(m));
    }
    minimalize(colon);

    // sum branch I + <x^e>
    std::vector<Monomial> sum;
    for (const auto& g : gens)
        if (g[pivot_var] < e) sum.push_back(g);
    Monomial pe(nvars);
    pe[pivot_var] = e;
    sum.push_back(std::move(pe));

    SeriesPoly res = hilbert_numerator(std::move(sum));
    series_add_shifted(res, hilbert_numerator(std::move(colon)), static_cast<std::size_t>(e), +1);
    return res;
}

Integer series_eval_at_one(const SeriesPoly& p) {
    Integer s(0);
    for (const auto& c : p) s += c;
    return s;
}

// exact division by (1 - s); caller checks p(1) == 0 first
SeriesPoly series_div_one_minus(const SeriesPoly& p) {
    SeriesPoly q(p.size() > 0 ? p.size() - 1 : 0, Integer(0));
    Integer carry(0);
    for (std::size_t i = 0; i < q.size(); ++i) {
        carry += p[i];
        q[i] = carry;
    }
    return q;
}

} // namespace

std::vector<Integer> hilbert_series_numerator(const Ideal& ideal) {
    if (!ideal.basis()) throw DomainError("hilbert_series_numerator requires a cached basis");
    const auto& basis = *ideal.basis();
    if (basis.order.kind() != MonomialOrder::Kind::DegRevLex)
        throw DomainError("hilbert_series_numerator requires a degree-compatible order");
    std::vector<Monomial> lms;
    for (const auto& g : basis.elements) {
        if (!g.is_homogeneous())
            throw DomainError("hilbert_series_numerator requires a homogeneous ideal");
        lms.push_back(g.leading_term(basis.order).mono);
    }
    minimalize(lms);
    SeriesPoly num = hilbert_numerator(std::move(lms));
    while (!num.empty() && num.back() == 0) num.pop_back();
    return num;
}

std::pair<int, Integer> hilbert_dimension_degree(const Ideal& ideal) {
    if (!ideal.basis()) throw DomainError("hilbert_dimension_degree requires a cached basis");
    const auto& basis = *ideal.basis();
    if (basis.order.kind() != MonomialOrder::Kind::DegRevLex)
        throw DomainError("hilbert_dimension_degree requires a degree-compatible order");
    for (const auto& g : basis.elements) {
        if (!g.is_homogeneous())
            throw DomainError("hilbert_dimension_degree requires a homogeneous ideal");
        if (g.is_constant()) throw DomainError("hilbert_dimension_degree of the unit ideal");
    }
    std::size_t n = ideal.ring()->nvars();

    std::vector<Monomial> lms;
    for (const auto& g : basis.elements) lms.push_back(g.leading_term(basis.order).mono);
    minimalize(lms);

    std::size_t dim = krull_dimension(lms, n);

    SeriesPoly num = hilbert_numerator(lms);
    std::size_t codim = 0;
    while (!num.empty() && series_eval_at_one(num) == 0) {
        num = series_div_one_minus(num);
        ++codim;
    }
    if (n - codim != dim)
        throw Error("Hilbert series codimension disagrees with the independent-set dimension");
    Integer degree = series_eval_at_one(num);
    if (degree <= 0) throw Error("nonpositive degree from Hilbert series");
    return {static_cast<int>(dim), degree};
}

} // namespace phylotoric
