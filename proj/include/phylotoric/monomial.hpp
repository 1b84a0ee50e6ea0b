#ifndef PHYLOTORIC_MONOMIAL_HPP
#define PHYLOTORIC_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace phylotoric {

// Exponent vector of a power product; length equals the ring's variable count.
struct Monomial {
    std::vector<std::int32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::int32_t> e) : exps(std::move(e)) {}

    std::size_t size() const { return exps.size(); }
    std::int32_t operator[](std::size_t i) const { return exps[i]; }
    std::int32_t& operator[](std::size_t i) { return exps[i]; }

    std::int64_t degree() const {
        return std::accumulate(exps.begin(), exps.end(), std::int64_t{0});
    }

    bool is_constant() const {
        for (auto e : exps)
            if (e != 0) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > m.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    // Caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (b.exps[i] > r.exps[i]) r.exps[i] = b.exps[i];
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (b.exps[i] < r.exps[i]) r.exps[i] = b.exps[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps.size(); ++i)
            if (a.exps[i] > 0 && b.exps[i] > 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.exps != b.exps; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto e : m.exps) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

} // namespace phylotoric

#endif
