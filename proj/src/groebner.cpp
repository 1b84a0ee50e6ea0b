#include "phylotoric/groebner.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

namespace phylotoric {

namespace {

std::uint64_t support_mask(const Monomial& m) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) mask |= std::uint64_t{1} << (i < 63 ? i : 63);
    return mask;
}

// ---------------------------------------------------------------------------
// Pair bookkeeping shared by both engines.  Normal selection strategy:
// lowest lcm degree first, then lexicographic pair indices.  Gebauer-Moeller
// pruning shrinks the queue; it never changes the final reduced basis, only
// the work done to reach it.

struct PairKey {
    std::int64_t deg;
    std::uint32_t i, j;
    friend bool operator<(const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct PairData {
    Monomial lcm;
    std::uint64_t mask;
};

class PairManager {
public:
    bool empty() const { return queue_.empty(); }
    std::size_t size() const { return queue_.size(); }

    std::int64_t min_degree() const { return queue_.begin()->first.deg; }

    std::pair<std::uint32_t, std::uint32_t> pop() {
        auto it = queue_.begin();
        PairKey k = it->first;
        queue_.erase(it);
        return {k.i, k.j};
    }

    // Called with all leading monomials after element t was appended.
    void update(const std::vector<Monomial>& lms, std::uint32_t t) {
        const Monomial& lt = lms[t];
        std::uint64_t lt_mask = support_mask(lt);
        std::int64_t lt_deg = lt.degree();

        // retire old pairs strictly superseded by the new element
        for (auto it = queue_.begin(); it != queue_.end();) {
            const PairData& pd = it->second;
            bool drop = false;
            if (lt_deg <= pd.lcm.degree() && (lt_mask & ~pd.mask) == 0 && lt.divides(pd.lcm)) {
                Monomial l1 = Monomial::lcm(lms[it->first.i], lt);
                Monomial l2 = Monomial::lcm(lms[it->first.j], lt);
                drop = (l1 != pd.lcm) && (l2 != pd.lcm);
            }
            it = drop ? queue_.erase(it) : std::next(it);
        }

        // candidate pairs (i, t), one representative per lcm
        struct Cand {
            Monomial lcm;
            std::uint64_t mask;
            std::int64_t deg;
            std::uint32_t i;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        std::unordered_map<Monomial, std::size_t, MonomialHash> by_lcm;
        for (std::uint32_t i = 0; i < t; ++i) {
            Monomial l = Monomial::lcm(lms[i], lt);
            bool cop = Monomial::coprime(lms[i], lt);
            auto it = by_lcm.find(l);
            if (it != by_lcm.end()) {
                if (cop) cands[it->second].coprime = true; // a coprime member kills the class
                continue;                                  // keep the lowest index
            }
            by_lcm.emplace(l, cands.size());
            std::uint64_t mask = support_mask(l);
            std::int64_t d = l.degree();
            cands.push_back({std::move(l), mask, d, i, cop});
        }
        // a candidate properly divided by another's lcm dies; by transitivity
        // it is enough to test against already-accepted candidates
        std::vector<std::size_t> idx(cands.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (cands[a].deg != cands[b].deg) return cands[a].deg < cands[b].deg;
            return a < b;
        });
        std::vector<std::size_t> accepted;
        for (std::size_t a : idx) {
            const Cand& ca = cands[a];
            bool dominated = false;
            for (std::size_t b : accepted) {
                const Cand& cb = cands[b];
                if (cb.deg >= ca.deg) continue;
                if (cb.mask & ~ca.mask) continue;
                if (cb.lcm.divides(ca.lcm)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) accepted.push_back(a);
        }
        for (std::size_t a : accepted) {
            Cand& c = cands[a];
            if (c.coprime) continue;
            queue_.emplace(PairKey{c.deg, c.i, t}, PairData{std::move(c.lcm), c.mask});
        }
    }

private:
    std::map<PairKey, PairData> queue_;
};

// Basis elements bucketed by the lowest variable in the support of their
// leading monomial; constants land in a sentinel bucket that is always
// scanned.

class DivisorIndex {
public:
    explicit DivisorIndex(std::size_t nvars) : nvars_(nvars), buckets_(nvars + 1) {}

    void add(std::uint32_t id, const Monomial& lm) {
        std::size_t v = nvars_;
        for (std::size_t i = 0; i < lm.size(); ++i)
            if (lm[i] > 0) {
                v = i;
                break;
            }
        buckets_[v].push_back(id);
        if (masks_.size() <= id) {
            masks_.resize(id + 1);
            degs_.resize(id + 1);
        }
        masks_[id] = support_mask(lm);
        degs_[id] = lm.degree();
    }

    // First element in bucket scan order whose lm divides m; -1 if none.
    template <typename GetLm, typename Alive>
    int find(const Monomial& m, GetLm&& lm, Alive&& alive) const {
        std::uint64_t m_mask = support_mask(m);
        std::int64_t m_deg = m.degree();
        for (std::size_t v = 0; v <= nvars_; ++v) {
            if (v < nvars_ && (v >= m.size() || m[v] == 0)) continue;
            for (std::uint32_t id : buckets_[v]) {
                if (degs_[id] > m_deg) continue;
                if (masks_[id] & ~m_mask) continue;
                if (!alive(id)) continue;
                if (lm(id).divides(m)) return static_cast<int>(id);
            }
        }
        return -1;
    }

private:
    std::size_t nvars_;
    std::vector<std::vector<std::uint32_t>> buckets_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::int64_t> degs_;
};

constexpr std::int64_t kNoDegreeCap = INT64_MAX;

// ---------------------------------------------------------------------------
// Engine over pure-difference binomials (lead - tail, coefficients +-1).
// S-polynomials and reductions stay pure differences, so there is no
// coefficient arithmetic anywhere on this path.

struct Bino {
    Monomial lead, tail;
};

class BinomialEngine {
public:
    BinomialEngine(const MonomialOrder& order, RingPtr ring, StepBudget* budget,
                   bool strip_content = false)
        : ord_(order), ring_(std::move(ring)), budget_(budget), index_(ring_->nvars()),
          strip_content_(strip_content) {}

    // Reduces and appends; returns false when the element vanished.
    bool add_generator(const Polynomial& g) {
        const auto& t = g.terms();
        auto r = reduce(t[0].mono, t[1].mono);
        if (!r) return false;
        append(std::move(*r));
        return true;
    }

    void run(std::int64_t max_degree = kNoDegreeCap) {
        static const bool verbose = std::getenv("PHYLOTORIC_GB_VERBOSE") != nullptr;
        std::uint64_t processed = 0;
        while (!pairs_.empty() && pairs_.min_degree() <= max_degree) {
            tick();
            if (verbose && ++processed % 500 == 0)
                std::fprintf(stderr, "[gb] pairs=%zu basis=%zu deg=%lld\n", pairs_.size(),
                             basis_.size(), static_cast<long long>(pairs_.min_degree()));
            auto [i, j] = pairs_.pop();
            Monomial l = Monomial::lcm(basis_[i].lead, basis_[j].lead);
            Monomial a = basis_[j].tail * (l / basis_[j].lead);
            Monomial b = basis_[i].tail * (l / basis_[i].lead);
            auto r = reduce(std::move(a), std::move(b));
            if (r) append(std::move(*r));
        }
    }

    std::vector<Polynomial> reduced() {
        std::vector<std::size_t> by_lm(basis_.size());
        for (std::size_t k = 0; k < basis_.size(); ++k) by_lm[k] = k;
        std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
            int c = ord_.compare(basis_[a].lead, basis_[b].lead);
            return c != 0 ? c < 0 : a < b;
        });
        std::vector<bool> keep(basis_.size(), false);
        std::vector<std::size_t> kept;
        for (std::size_t k : by_lm) {
            bool dominated = false;
            for (std::size_t j : kept)
                if (basis_[j].lead.divides(basis_[k].lead)) {
                    dominated = true;
                    break;
                }
            if (!dominated) {
                keep[k] = true;
                kept.push_back(k);
            }
        }
        std::vector<Polynomial> out;
        out.reserve(kept.size());
        for (std::size_t k : kept) {
            Monomial tail = basis_[k].tail;
            while (true) {
                int d = find_divisor(tail, [&](std::uint32_t id) { return keep[id]; });
                if (d < 0) break;
                tick();
                const Bino& g = basis_[static_cast<std::size_t>(d)];
                tail = g.tail * (tail / g.lead);
            }
            out.push_back(Polynomial::from_monomial(ring_, basis_[k].lead) -
                          Polynomial::from_monomial(ring_, tail));
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ord_.less(a.leading_term(ord_).mono, b.leading_term(ord_).mono);
        });
        return out;
    }

private:
    void tick() {
        if (budget_) budget_->tick();
    }

    template <typename Alive>
    int find_divisor(const Monomial& m, Alive&& alive) const {
        return index_.find(
            m, [&](std::uint32_t id) -> const Monomial& { return basis_[id].lead; },
            std::forward<Alive>(alive));
    }

    // when saturating, a common monomial factor may be divided out: the
    // stripped binomial still lies in the saturation of the ideal
    void strip(Monomial& a, Monomial& b) const {
        if (!strip_content_) return;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int32_t c = std::min(a[i], b[i]);
            if (c > 0) {
                a[i] -= c;
                b[i] -= c;
            }
        }
    }

    std::optional<Bino> reduce(Monomial a, Monomial b) {
        auto all = [](std::uint32_t) { return true; };
        strip(a, b);
        while (true) {
            if (a == b) return std::nullopt;
            if (ord_.less(a, b)) std::swap(a, b);
            int d = find_divisor(a, all);
            if (d < 0) break;
            tick();
            const Bino& g = basis_[static_cast<std::size_t>(d)];
            a = g.tail * (a / g.lead);
            strip(a, b);
        }
        while (true) {
            int d = find_divisor(b, all);
            if (d < 0) break;
            tick();
            const Bino& g = basis_[static_cast<std::size_t>(d)];
            b = g.tail * (b / g.lead);
            strip(a, b);
            if (a == b) return std::nullopt;
            if (ord_.less(a, b)) {
                // stripping can reorder the sides; restart the top reduction
                std::swap(a, b);
                return reduce(std::move(a), std::move(b));
            }
        }
        return Bino{std::move(a), std::move(b)};
    }

    void append(Bino g) {
        auto id = static_cast<std::uint32_t>(basis_.size());
        index_.add(id, g.lead);
        lms_.push_back(g.lead);
        basis_.push_back(std::move(g));
        pairs_.update(lms_, id);
    }

    const MonomialOrder& ord_;
    RingPtr ring_;
    StepBudget* budget_;
    std::vector<Bino> basis_;
    std::vector<Monomial> lms_;
    PairManager pairs_;
    DivisorIndex index_;
    bool strip_content_;
};

// ---------------------------------------------------------------------------
// Generic engine over polynomials with rational coefficients.

class PolyEngine {
public:
    PolyEngine(const MonomialOrder& order, RingPtr ring, StepBudget* budget)
        : ord_(order), ring_(std::move(ring)), budget_(budget), index_(ring_->nvars()) {}

    bool add_generator(const Polynomial& g) {
        Polynomial r = reduce(g);
        if (r.is_zero()) return false;
        append(make_monic(r));
        return true;
    }

    void run(std::int64_t max_degree = kNoDegreeCap) {
        while (!pairs_.empty() && pairs_.min_degree() <= max_degree) {
            tick();
            auto [i, j] = pairs_.pop();
            const Polynomial& f = basis_[i];
            const Polynomial& g = basis_[j];
            Monomial l = Monomial::lcm(lms_[i], lms_[j]);
            Polynomial s = f.times_monomial(l / lms_[i], Rational(1)) -
                           g.times_monomial(l / lms_[j], Rational(1));
            Polynomial r = reduce(s);
            if (!r.is_zero()) append(make_monic(r));
        }
    }

    std::vector<Polynomial> reduced() {
        std::vector<std::size_t> by_lm(basis_.size());
        for (std::size_t k = 0; k < basis_.size(); ++k) by_lm[k] = k;
        std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
            int c = ord_.compare(lms_[a], lms_[b]);
            return c != 0 ? c < 0 : a < b;
        });
        std::vector<bool> keep(basis_.size(), false);
        std::vector<std::size_t> kept;
        for (std::size_t k : by_lm) {
            bool dominated = false;
            for (std::size_t j : kept)
                if (lms_[j].divides(lms_[k])) {
                    dominated = true;
                    break;
                }
            if (!dominated) {
                keep[k] = true;
                kept.push_back(k);
            }
        }
        std::vector<Polynomial> out;
        for (std::size_t k : kept) {
            Polynomial lead = Polynomial::from_monomial(ring_, lms_[k]);
            Polynomial tail = reduce_with(
                basis_[k] - lead, [&](std::uint32_t id) { return keep[id] && id != k; });
            out.push_back(lead + tail);
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ord_.less(a.leading_term(ord_).mono, b.leading_term(ord_).mono);
        });
        return out;
    }

private:
    void tick() {
        if (budget_) budget_->tick();
    }

    Polynomial make_monic(const Polynomial& p) const {
        const Term& lt = p.leading_term(ord_);
        return lt.coeff.is_one() ? p : p.scaled(Rational(1) / lt.coeff);
    }

    Polynomial reduce(const Polynomial& f) {
        return reduce_with(f, [](std::uint32_t) { return true; });
    }

    template <typename Alive>
    Polynomial reduce_with(const Polynomial& f, Alive&& alive) {
        Polynomial work = f;
        std::vector<Term> rem;
        while (!work.is_zero()) {
            const Term& lt = work.leading_term(ord_);
            int d = index_.find(
                lt.mono, [&](std::uint32_t id) -> const Monomial& { return lms_[id]; }, alive);
            if (d < 0) {
                rem.push_back(lt);
                work = work - Polynomial::from_monomial(ring_, lt.mono, lt.coeff);
            } else {
                tick();
                const Polynomial& g = basis_[static_cast<std::size_t>(d)];
                work = work - g.times_monomial(lt.mono / lms_[d], lt.coeff);
            }
        }
        return Polynomial::from_terms(ring_, std::move(rem));
    }

    void append(Polynomial g) {
        auto id = static_cast<std::uint32_t>(basis_.size());
        Monomial lm = g.leading_term(ord_).mono;
        index_.add(id, lm);
        basis_.push_back(std::move(g));
        lms_.push_back(std::move(lm));
        pairs_.update(lms_, id);
    }

    const MonomialOrder& ord_;
    RingPtr ring_;
    StepBudget* budget_;
    std::vector<Polynomial> basis_;
    std::vector<Monomial> lms_;
    PairManager pairs_;
    DivisorIndex index_;
};

bool all_pure_difference(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return false;
    for (const auto& g : gens)
        if (!g.is_pure_difference_binomial()) return false;
    return true;
}

template <typename Engine, typename... Extra>
std::vector<Polynomial> run_engine(const Ideal& ideal, const MonomialOrder& order,
                                   StepBudget* budget, Extra... extra) {
    Engine eng(order, ideal.ring(), budget, extra...);
    for (const auto& g : ideal.generators()) eng.add_generator(g);
    eng.run();
    return eng.reduced();
}

// Groebner run that may divide monomial content out of every intermediate
// binomial.  The result is a reduced basis of an ideal squeezed between the
// input and its saturation by all variables, which is exactly what the
// saturation drivers need.
Ideal buchberger_stripping(const Ideal& ideal, const MonomialOrder& order, StepBudget* budget) {
    Ideal out(ideal.ring(), ideal.generators());
    if (ideal.is_zero()) {
        out.set_basis({order, {}});
        return out;
    }
    out.set_basis({order, run_engine<BinomialEngine>(ideal, order, budget, true)});
    return out;
}

} // namespace

Ideal buchberger(const Ideal& ideal, const MonomialOrder& order, StepBudget* budget) {
    Ideal out(ideal.ring(), ideal.generators());
    if (ideal.is_zero()) {
        out.set_basis({order, {}});
        return out;
    }
    std::vector<Polynomial> elements =
        all_pure_difference(ideal.generators())
            ? run_engine<BinomialEngine>(ideal, order, budget)
            : run_engine<PolyEngine>(ideal, order, budget);
    out.set_basis({order, std::move(elements)});
    return out;
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order) {
    if (!ideal.has_basis_for(order))
        throw DomainError("normal_form requires a cached Groebner basis for the given order");
    check_same_ring(f.ring(), ideal.ring(), "normal_form");
    const auto& basis = ideal.basis()->elements;

    Polynomial work = f;
    std::vector<Term> rem;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term(order);
        const Polynomial* div = nullptr;
        for (const auto& g : basis)
            if (g.leading_term(order).mono.divides(lt.mono)) {
                div = &g;
                break;
            }
        if (!div) {
            rem.push_back(lt);
            work = work - Polynomial::from_monomial(f.ring(), lt.mono, lt.coeff);
        } else {
            const Term& ltg = div->leading_term(order);
            work = work - div->times_monomial(lt.mono / ltg.mono, lt.coeff / ltg.coeff);
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(rem));
}

// ---------------------------------------------------------------------------
// Saturation

namespace {

void check_binomial_generators(const Ideal& ideal, const char* op) {
    for (const auto& g : ideal.generators()) {
        if (g.nterms() > 2)
            throw DomainError(std::string(op) + " requires binomial generators, found '" +
                              g.str() + "'");
        if (g.nterms() == 1)
            throw DomainError(std::string(op) + ": monomial generator '" + g.str() +
                              "' saturates to the unit ideal");
    }
}

} // namespace

Ideal saturate_by_all_variables(const Ideal& ideal, StepBudget* budget) {
    check_binomial_generators(ideal, "saturate_by_all_variables");
    if (ideal.is_zero()) {
        Ideal out = ideal;
        out.set_basis({MonomialOrder::degrevlex(), {}});
        return out;
    }
    const RingPtr& ring = ideal.ring();
    std::size_t n = ring->nvars();

    std::vector<std::string> ext_vars;
    ext_vars.push_back("t@sat"); // cannot collide with parsed identifiers
    for (const auto& v : ring->vars()) ext_vars.push_back(v);
    RingPtr ext = Ring::make(std::move(ext_vars));

    auto lift = [&](const Polynomial& p) {
        std::vector<Term> terms;
        for (const auto& t : p.terms()) {
            Monomial m(n + 1);
            for (std::size_t i = 0; i < n; ++i) m[i + 1] = t.mono[i];
            terms.push_back({std::move(m), t.coeff});
        }
        return Polynomial::from_terms(ext, std::move(terms));
    };

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(lift(g));
    Monomial t_prod(n + 1);
    for (std::size_t i = 0; i <= n; ++i) t_prod[i] = 1;
    gens.push_back(Polynomial::from_monomial(ext, t_prod) -
                   Polynomial::constant(ext, Rational(1)));

    Ideal extended = buchberger_stripping(Ideal(ext, std::move(gens)),
                                          MonomialOrder::block_elimination(1), budget);

    std::vector<Polynomial> down;
    for (const auto& g : extended.basis()->elements) {
        bool has_t = false;
        for (const auto& t : g.terms())
            if (t.mono[0] != 0) {
                has_t = true;
                break;
            }
        if (has_t) continue;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m[i] = t.mono[i + 1];
            terms.push_back({std::move(m), t.coeff});
        }
        down.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }

    // restricted to the t-free block the elimination order is degrevlex, so
    // the eliminated slice of the reduced basis is itself reduced
    Ideal out(ring, down);
    out.set_basis({MonomialOrder::degrevlex(), std::move(down)});
    return out;
}

Ideal saturate_homogeneous(const Ideal& ideal, StepBudget* budget) {
    check_binomial_generators(ideal, "saturate_homogeneous");
    if (!ideal.homogeneous())
        throw DomainError("saturate_homogeneous requires homogeneous generators");
    if (ideal.is_zero()) {
        Ideal out = ideal;
        out.set_basis({MonomialOrder::degrevlex(), {}});
        return out;
    }
    const RingPtr& ring = ideal.ring();
    std::size_t n = ring->nvars();

    Ideal current = ideal;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> perm;
        for (std::size_t i = 0; i < n; ++i)
            if (i != v) perm.push_back(i);
        perm.push_back(v);
        MonomialOrder ord = (v == n - 1) ? MonomialOrder::degrevlex()
                                         : MonomialOrder::degrevlex_permuted(std::move(perm));
        Ideal gb = buchberger_stripping(current, ord, budget);
        // with x_v cheapest and the ideal homogeneous, dividing each basis
        // element by its x_v content yields a basis of I : x_v^inf
        std::vector<Polynomial> divided;
        for (const auto& g : gb.basis()->elements) {
            std::int32_t k = INT32_MAX;
            for (const auto& t : g.terms()) k = std::min(k, t.mono[v]);
            if (k == 0) {
                divided.push_back(g);
                continue;
            }
            std::vector<Term> terms;
            for (const auto& t : g.terms()) {
                Monomial m = t.mono;
                m[static_cast<std::size_t>(v)] -= k;
                terms.push_back({std::move(m), t.coeff});
            }
            divided.push_back(Polynomial::from_terms(ring, std::move(terms)));
        }
        current = Ideal(ring, std::move(divided));
    }
    return buchberger(current, MonomialOrder::degrevlex(), budget);
}

// ---------------------------------------------------------------------------
// Orbit saturation for symmetric lattice ideals.

namespace {

Polynomial permute_variables(const Polynomial& p, const std::vector<int>& perm) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(t.mono.size());
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            m[static_cast<std::size_t>(perm[i])] = t.mono[i];
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial::from_terms(p.ring(), std::move(terms));
}

std::vector<int> inverse_permutation(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

} // namespace

Ideal saturate_homogeneous_symmetric(const Ideal& ideal,
                                     const std::vector<std::vector<int>>& symmetry_generators,
                                     StepBudget* budget) {
    check_binomial_generators(ideal, "saturate_homogeneous_symmetric");
    if (!ideal.homogeneous())
        throw DomainError("saturate_homogeneous_symmetric requires homogeneous generators");
    if (ideal.is_zero() || symmetry_generators.empty())
        return saturate_homogeneous(ideal, budget);

    static const bool verbose = std::getenv("PHYLOTORIC_GB_VERBOSE") != nullptr;
    const RingPtr& ring = ideal.ring();
    std::size_t n = ring->nvars();
    for (const auto& g : symmetry_generators)
        if (g.size() != n) throw DomainError("symmetry permutation arity mismatch");

    // generators plus inverses drive both the orbits and the images; at
    // stabilization g(J) = J for every generator, hence for the whole group
    std::vector<std::vector<int>> movers = symmetry_generators;
    for (const auto& g : symmetry_generators) {
        auto inv = inverse_permutation(g);
        if (std::find(movers.begin(), movers.end(), inv) == movers.end())
            movers.push_back(std::move(inv));
    }

    // variable orbits by union-find over the generators
    std::vector<int> orbit_of(n, -1);
    std::vector<std::size_t> reps;
    for (std::size_t v = 0; v < n; ++v) {
        if (orbit_of[v] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(v);
        std::vector<std::size_t> stack{v};
        orbit_of[v] = id;
        while (!stack.empty()) {
            std::size_t w = stack.back();
            stack.pop_back();
            for (const auto& g : movers) {
                auto u = static_cast<std::size_t>(g[w]);
                if (orbit_of[u] < 0) {
                    orbit_of[u] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    if (reps.size() == n) return saturate_homogeneous(ideal, budget);

    // start from the generator images under the movers
    std::vector<Polynomial> gens = ideal.generators();
    {
        std::set<std::string> seen;
        for (const auto& g : gens) seen.insert(g.str());
        for (const auto& g : ideal.generators())
            for (const auto& sigma : movers) {
                Polynomial image = permute_variables(g, sigma);
                if (seen.insert(image.str()).second) gens.push_back(std::move(image));
            }
    }

    Ideal current(ring, std::move(gens));
    std::vector<Integer> last_numerator;
    std::size_t stable_passes = 0;
    std::size_t rep_idx = 0;

    auto symmetrize = [&](const std::vector<Polynomial>& basis) {
        std::vector<Polynomial> next = basis;
        std::set<std::string> seen;
        for (const auto& g : next) seen.insert(g.str());
        for (const auto& sigma : movers)
            for (const auto& g : basis) {
                Polynomial image = permute_variables(g, sigma);
                if (seen.insert(image.str()).second) next.push_back(std::move(image));
            }
        return next;
    };

    while (true) {
        std::size_t v = reps[rep_idx];
        rep_idx = (rep_idx + 1) % reps.size();
        std::vector<std::size_t> perm;
        for (std::size_t i = 0; i < n; ++i)
            if (i != v) perm.push_back(i);
        perm.push_back(v);
        MonomialOrder ord = (v == n - 1) ? MonomialOrder::degrevlex()
                                         : MonomialOrder::degrevlex_permuted(std::move(perm));
        Ideal gb = buchberger_stripping(current, ord, budget);
        if (verbose)
            std::fprintf(stderr, "[sat-sym] orbit pass var=%zu basis=%zu stable=%zu\n", v,
                         gb.basis()->elements.size(), stable_passes);

        // the chain of pass ideals ascends inside the saturation, so a frozen
        // Hilbert series certifies the pass changed nothing
        std::vector<Integer> numerator = hilbert_series_numerator(gb);
        bool unchanged = numerator == last_numerator;
        last_numerator = std::move(numerator);
        stable_passes = unchanged ? stable_passes + 1 : 0;

        if (stable_passes < reps.size()) {
            // still discovering: fold the symmetry images in after changes
            current = Ideal(ring, unchanged ? gb.basis()->elements
                                            : symmetrize(gb.basis()->elements));
            continue;
        }
        // every orbit representative left the series frozen; one closure
        // pass under the symmetry images settles invariance
        Ideal closure = buchberger_stripping(Ideal(ring, symmetrize(gb.basis()->elements)),
                                             MonomialOrder::degrevlex(), budget);
        if (hilbert_series_numerator(closure) == last_numerator) return closure;
        if (verbose) std::fprintf(stderr, "[sat-sym] closure pass changed the ideal\n");
        last_numerator.clear();
        stable_passes = 0;
        current = Ideal(ring, symmetrize(closure.basis()->elements));
    }
}

// ---------------------------------------------------------------------------
// Minimal generators of a homogeneous ideal out of its reduced basis: walk
// degrees upward, keeping each element not generated by those kept before.
// Membership runs against a Buchberger state completed through the candidate
// degree, which decides membership exactly for homogeneous input.

namespace {

template <typename Engine>
std::vector<Polynomial> minimal_generators_impl(const Ideal& ideal,
                                                const std::vector<std::size_t>& idx,
                                                StepBudget* budget) {
    const auto& gb = ideal.basis()->elements;
    Engine eng(ideal.basis()->order, ideal.ring(), budget);
    std::vector<Polynomial> chosen;
    for (std::size_t k : idx) {
        const Polynomial& cand = gb[k];
        eng.run(cand.total_degree());
        if (eng.add_generator(cand)) chosen.push_back(cand);
    }
    return chosen;
}

} // namespace

std::vector<Polynomial> minimal_generators(const Ideal& ideal, StepBudget* budget) {
    if (!ideal.basis())
        throw DomainError("minimal_generators requires a cached Groebner basis");
    const auto& gb = ideal.basis()->elements;
    if (gb.empty()) return {};
    for (const auto& g : gb)
        if (!g.is_homogeneous())
            throw DomainError("minimal_generators requires a homogeneous ideal");

    std::vector<std::size_t> idx(gb.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return gb[a].total_degree() < gb[b].total_degree();
    });

    return all_pure_difference(gb) ? minimal_generators_impl<BinomialEngine>(ideal, idx, budget)
                                   : minimal_generators_impl<PolyEngine>(ideal, idx, budget);
}

} // namespace phylotoric
