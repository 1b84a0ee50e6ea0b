#include "phylotoric/matrix.hpp"

#include <algorithm>

#include "phylotoric/errors.hpp"

namespace phylotoric {

std::size_t matrix_rank(const IntegerMatrix& A) {
    std::size_t m = A.rows(), n = A.cols();
    IntegerMatrix M = A;
    Integer prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && M.at(pivot, col) == 0) ++pivot;
        if (pivot == m) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(pivot, j), M.at(rank, j));
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                Integer t = M.at(rank, col) * M.at(i, j) - M.at(i, col) * M.at(rank, j);
                M.at(i, j) = t / prev; // exact by Bareiss
            }
            M.at(i, col) = 0;
        }
        prev = M.at(rank, col);
        ++rank;
    }
    return rank;
}

Integer determinant(const IntegerMatrix& A) {
    if (A.rows() != A.cols()) throw DomainError("determinant of non-square matrix");
    std::size_t n = A.rows();
    if (n == 0) return Integer(1);
    IntegerMatrix M = A;
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && M.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return Integer(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(pivot, j), M.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(k, k) * M.at(i, j) - M.at(i, k) * M.at(k, j)) / prev;
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : Integer(-M.at(n - 1, n - 1));
}

std::vector<std::vector<Integer>> lattice_kernel(const IntegerMatrix& A) {
    std::size_t m = A.rows(), n = A.cols();
    IntegerMatrix M = A;
    IntegerMatrix U = IntegerMatrix::identity(n);

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(M.at(r, a), M.at(r, b));
        for (std::size_t r = 0; r < n; ++r) std::swap(U.at(r, a), U.at(r, b));
    };
    auto axpy_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < m; ++r) M.at(r, dst) -= q * M.at(r, src);
        for (std::size_t r = 0; r < n; ++r) U.at(r, dst) -= q * U.at(r, src);
    };
    auto negate_col = [&](std::size_t c) {
        for (std::size_t r = 0; r < m; ++r) M.at(r, c) = -M.at(r, c);
        for (std::size_t r = 0; r < n; ++r) U.at(r, c) = -U.at(r, c);
    };

    std::size_t p = 0;
    for (std::size_t row = 0; row < m && p < n; ++row) {
        while (true) {
            // smallest nonzero entry in this row among the free columns
            std::size_t best = n;
            for (std::size_t j = p; j < n; ++j) {
                if (M.at(row, j) == 0) continue;
                if (best == n || mpz_cmpabs(M.at(row, j).get_mpz_t(), M.at(row, best).get_mpz_t()) < 0)
                    best = j;
            }
            if (best == n) break; // row already zero on free columns
            swap_cols(p, best);
            bool clean = true;
            for (std::size_t j = p + 1; j < n; ++j) {
                if (M.at(row, j) == 0) continue;
                Integer q = M.at(row, j) / M.at(row, p); // truncated
                axpy_col(j, p, q);
                if (M.at(row, j) != 0) clean = false;
            }
            if (clean) {
                if (M.at(row, p) < 0) negate_col(p);
                ++p;
                break;
            }
        }
    }

    std::vector<std::vector<Integer>> kernel;
    for (std::size_t j = p; j < n; ++j) kernel.push_back(U.column(j));
    return kernel;
}

std::vector<std::vector<Integer>> lattice_row_basis(
    const std::vector<std::vector<Integer>>& gens) {
    std::vector<std::vector<Integer>> rows = gens;
    if (rows.empty()) return {};
    std::size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw DomainError("ragged lattice generators");

    std::vector<std::vector<Integer>> basis;
    std::size_t done = 0; // rows of `basis` finished, one pivot column each
    for (std::size_t col = 0; col < n; ++col) {
        // gather rows with nonzero entry in this column, gcd-reduce them
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0)
                    best = i;
            }
            if (best == rows.size()) break;
            bool others = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][col] == 0) continue;
                Integer q = rows[i][col] / rows[best][col];
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[best][j];
                if (rows[i][col] != 0) others = true;
            }
            if (!others) {
                if (rows[best][col] < 0)
                    for (auto& x : rows[best]) x = -x;
                basis.push_back(rows[best]);
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                ++done;
                break;
            }
        }
    }
    (void)done;
    return basis;
}

std::vector<std::vector<Integer>> lll_reduce(std::vector<std::vector<Integer>> basis) {
    std::size_t k = basis.size();
    if (k <= 1) return basis;
    std::size_t n = basis[0].size();

    // exact Gram-Schmidt data: mu[i][j] and the squared norms B[i] of b*_i
    std::vector<std::vector<Rational>> mu(k, std::vector<Rational>(k, Rational(0)));
    std::vector<Rational> B(k, Rational(0));
    std::vector<std::vector<Rational>> star(k, std::vector<Rational>(n, Rational(0)));

    auto recompute = [&]() {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) star[i][j] = Rational(basis[i][j]);
            for (std::size_t j = 0; j < i; ++j) {
                Rational dot(0);
                for (std::size_t l = 0; l < n; ++l) dot += Rational(basis[i][l]) * star[j][l];
                mu[i][j] = B[j].is_zero() ? Rational(0) : dot / B[j];
                for (std::size_t l = 0; l < n; ++l) star[i][l] -= mu[i][j] * star[j][l];
            }
            B[i] = Rational(0);
            for (std::size_t l = 0; l < n; ++l) B[i] += star[i][l] * star[i][l];
        }
    };
    auto round_to_int = [](const Rational& q) {
        Integer num = q.numerator(), den = q.denominator();
        Integer twice = 2 * num + den; // floor((2num + den) / (2den)) = round(num/den)
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Integer(2 * den).get_mpz_t());
        return r;
    };

    recompute();
    const Rational delta(3, 4);
    std::size_t i = 1;
    while (i < k) {
        // size reduction
        for (std::size_t j = i; j-- > 0;) {
            Integer q = round_to_int(mu[i][j]);
            if (q != 0)
                for (std::size_t l = 0; l < n; ++l) basis[i][l] -= q * basis[j][l];
        }
        recompute();
        // Lovasz condition
        if (i >= 1 && B[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * B[i - 1]) {
            std::swap(basis[i], basis[i - 1]);
            recompute();
            i = i > 1 ? i - 1 : 1;
        } else {
            ++i;
        }
    }
    return basis;
}

bool in_lattice_coordinates(const std::vector<std::vector<Integer>>& basis,
                            const std::vector<Integer>& v, std::vector<Integer>& coords_out) {
    // The basis is in echelon form: each row has a leading column where all
    // later rows vanish, so back-substitution walks the rows in order.
    std::vector<Integer> rem = v;
    coords_out.assign(basis.size(), Integer(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t lead = 0;
        while (lead < basis[i].size() && basis[i][lead] == 0) ++lead;
        if (lead == basis[i].size()) continue;
        Integer q = rem[lead] / basis[i][lead];
        if (rem[lead] % basis[i][lead] != 0) return false;
        coords_out[i] = q;
        for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= q * basis[i][j];
    }
    for (const auto& x : rem)
        if (x != 0) return false;
    return true;
}

} // namespace phylotoric
