#include <algorithm>
#include <map>

#include "phylotoric/errors.hpp"
#include "phylotoric/toric.hpp"

// Normalized volume by a placing (beneath-beyond) triangulation with
// lexicographic point insertion.  Ties are broken by a deterministic scaled
// perturbation: combinatorics run on P_i = N*q_i + r_i with N large enough
// that every nonzero true orientation keeps its sign, while volumes are read
// from the true coordinates, so perturbation-only simplices contribute zero.

namespace phylotoric {

namespace {

struct RestartPerturbation {};

std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Point = std::vector<Integer>;

Integer dot(const Point& a, const Point& b) {
    Integer s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// |det| of the r x r matrix of differences (pts[1]-pts[0], ..., pts[r]-pts[0])
Integer simplex_det(const std::vector<const Point*>& pts) {
    std::size_t r = pts.size() - 1;
    IntegerMatrix M(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) M.at(i, j) = (*pts[i + 1])[j] - (*pts[0])[j];
    Integer d = determinant(M);
    return d < 0 ? Integer(-d) : d;
}

struct Facet {
    std::vector<int> verts; // sorted point indices, size r
    Point normal;           // outward in perturbed coordinates
    Integer offset;
    bool alive = true;
};

class Hull {
public:
    Hull(const std::vector<Point>& true_pts, const std::vector<Point>& pert_pts, std::size_t r)
        : true_(true_pts), pert_(pert_pts), r_(r) {}

    Integer run() {
        std::vector<int> initial = initial_simplex();
        volume_ += true_simplex_volume(initial);
        inside_ref_.assign(r_, Integer(0));
        for (int v : initial)
            for (std::size_t j = 0; j < r_; ++j) inside_ref_[j] += pert_[static_cast<std::size_t>(v)][j];
        inside_scale_ = static_cast<long>(initial.size());
        for (std::size_t omit = 0; omit < initial.size(); ++omit) {
            std::vector<int> verts;
            for (std::size_t i = 0; i < initial.size(); ++i)
                if (i != omit) verts.push_back(initial[i]);
            add_facet(std::move(verts));
        }
        std::vector<bool> used(true_.size(), false);
        for (int v : initial) used[static_cast<std::size_t>(v)] = true;
        for (std::size_t p = 0; p < true_.size(); ++p)
            if (!used[p]) insert(static_cast<int>(p));
        return volume_;
    }

private:
    std::vector<int> initial_simplex() {
        std::vector<int> chosen{0};
        std::vector<std::vector<Integer>> diffs;
        for (std::size_t p = 1; p < pert_.size() && chosen.size() < r_ + 1; ++p) {
            std::vector<Integer> d(r_);
            for (std::size_t j = 0; j < r_; ++j) d[j] = pert_[p][j] - pert_[0][j];
            diffs.push_back(std::move(d));
            IntegerMatrix M(diffs.size(), r_);
            for (std::size_t i = 0; i < diffs.size(); ++i)
                for (std::size_t j = 0; j < r_; ++j) M.at(i, j) = diffs[i][j];
            if (matrix_rank(M) == diffs.size())
                chosen.push_back(static_cast<int>(p));
            else
                diffs.pop_back();
        }
        if (chosen.size() != r_ + 1) throw RestartPerturbation{};
        return chosen;
    }

    Integer true_simplex_volume(const std::vector<int>& verts) {
        std::vector<const Point*> pts;
        for (int v : verts) pts.push_back(&true_[static_cast<std::size_t>(v)]);
        return simplex_det(pts);
    }

    void add_facet(std::vector<int> verts) {
        std::sort(verts.begin(), verts.end());
        IntegerMatrix M(r_ - 1, r_);
        for (std::size_t i = 0; i + 1 < verts.size(); ++i)
            for (std::size_t j = 0; j < r_; ++j)
                M.at(i, j) = pert_[static_cast<std::size_t>(verts[i + 1])][j] -
                             pert_[static_cast<std::size_t>(verts[0])][j];
        auto kernel = lattice_kernel(M);
        if (kernel.size() != 1) throw RestartPerturbation{}; // degenerate facet
        Point normal = std::move(kernel[0]);
        Integer offset = dot(normal, pert_[static_cast<std::size_t>(verts[0])]);
        // orient away from the interior reference point
        Integer side = dot(normal, inside_ref_) - inside_scale_ * offset;
        if (side == 0) throw RestartPerturbation{};
        if (side > 0) {
            for (auto& x : normal) x = -x;
            offset = -offset;
        }
        int id = static_cast<int>(facets_.size());
        facets_.push_back({verts, std::move(normal), std::move(offset), true});
        for (std::size_t omit = 0; omit < verts.size(); ++omit) {
            std::vector<int> ridge;
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (i != omit) ridge.push_back(verts[i]);
            ridges_[ridge].push_back(id);
        }
    }

    void insert(int p) {
        const Point& pp = pert_[static_cast<std::size_t>(p)];
        std::vector<int> visible;
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            if (!facets_[f].alive) continue;
            Integer side = dot(facets_[f].normal, pp) - facets_[f].offset;
            if (side == 0) throw RestartPerturbation{};
            if (side > 0) visible.push_back(static_cast<int>(f));
        }
        if (visible.empty()) return; // interior point

        for (int f : visible) {
            std::vector<int> verts = facets_[static_cast<std::size_t>(f)].verts;
            verts.push_back(p);
            volume_ += true_simplex_volume(verts);
        }

        // collect horizon ridges and retire visible facets
        std::vector<std::vector<int>> horizon;
        for (int f : visible) facets_[static_cast<std::size_t>(f)].alive = false;
        for (int f : visible) {
            const auto& verts = facets_[static_cast<std::size_t>(f)].verts;
            for (std::size_t omit = 0; omit < verts.size(); ++omit) {
                std::vector<int> ridge;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != omit) ridge.push_back(verts[i]);
                const auto& owners = ridges_.at(ridge);
                int alive_owners = 0;
                for (int o : owners)
                    if (facets_[static_cast<std::size_t>(o)].alive) ++alive_owners;
                if (alive_owners == 1) horizon.push_back(ridge);
            }
        }
        for (auto& ridge : horizon) {
            ridge.push_back(p);
            add_facet(std::move(ridge));
        }
    }

    const std::vector<Point>& true_;
    const std::vector<Point>& pert_;
    std::size_t r_;
    Integer volume_{0};
    Point inside_ref_;
    long inside_scale_ = 1;
    std::vector<Facet> facets_;
    std::map<std::vector<int>, std::vector<int>> ridges_;
};

} // namespace

Integer degree_via_volume(const IntegerMatrix& A) {
    // distinct columns as points
    std::vector<Point> raw;
    for (std::size_t c = 0; c < A.cols(); ++c) {
        Point p = A.column(c);
        if (std::find(raw.begin(), raw.end(), p) == raw.end()) raw.push_back(std::move(p));
    }
    if (raw.size() <= 1)
        throw DomainError("degenerate polytope: all exponent columns coincide");

    // lattice basis of the differences and coordinates in it
    std::vector<std::vector<Integer>> diffs;
    for (std::size_t i = 1; i < raw.size(); ++i) {
        std::vector<Integer> d(A.rows());
        for (std::size_t j = 0; j < A.rows(); ++j) d[j] = raw[i][j] - raw[0][j];
        diffs.push_back(std::move(d));
    }
    auto basis = lattice_row_basis(diffs);
    std::size_t r = basis.size();
    if (r == 0) throw DomainError("degenerate polytope: all exponent columns coincide");

    std::vector<Point> pts;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        std::vector<Integer> d(A.rows());
        for (std::size_t j = 0; j < A.rows(); ++j) d[j] = raw[i][j] - raw[0][j];
        std::vector<Integer> coords;
        if (!in_lattice_coordinates(basis, d, coords))
            throw Error("difference escaped its own lattice");
        pts.push_back(std::move(coords));
    }
    std::sort(pts.begin(), pts.end());

    // perturbation scale: N > r! (2D+1)^r R guarantees every nonzero true
    // orientation determinant keeps its sign after perturbing
    Integer D(1);
    for (const auto& p : pts)
        for (const auto& x : p) {
            Integer ax = x < 0 ? Integer(-x) : x;
            if (ax > D) D = ax;
        }
    const long R = 1 << 10;
    Integer fact(1);
    for (std::size_t i = 2; i <= r; ++i) fact *= static_cast<long>(i);
    Integer N = 2 * fact * R;
    Integer base = 2 * D + 1;
    for (std::size_t i = 0; i < r; ++i) N *= base;
    N += 1;

    for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
        std::uint64_t seed = 0x5bd1e995u + attempt * 0x100000001b3ULL;
        std::vector<Point> pert;
        pert.reserve(pts.size());
        for (const auto& p : pts) {
            Point q(r);
            for (std::size_t j = 0; j < r; ++j)
                q[j] = N * p[j] + Integer(static_cast<long>(splitmix64(seed) % R));
            pert.push_back(std::move(q));
        }
        try {
            Hull hull(pts, pert, r);
            return hull.run();
        } catch (const RestartPerturbation&) {
            continue;
        }
    }
    throw Error("volume perturbation failed repeatedly");
}

} // namespace phylotoric
