#ifndef PHYLOTORIC_MATRIX_HPP
#define PHYLOTORIC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "phylotoric/rational.hpp"

namespace phylotoric {

// Dense matrix with arbitrary-precision integer entries.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Integer> column(std::size_t c) const {
        std::vector<Integer> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Integer> entries_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const IntegerMatrix& A);

// Basis of the integer kernel lattice {v : A v = 0}, via column Hermite
// reduction with a unimodular transform.  Deterministic; the vectors are
// Z-linearly independent and Z-span the whole kernel.
std::vector<std::vector<Integer>> lattice_kernel(const IntegerMatrix& A);

// Determinant of a square matrix (Bareiss).
Integer determinant(const IntegerMatrix& A);

// Row-style Hermite basis of the lattice spanned by the given vectors:
// returns a maximal set of independent vectors in column-echelon-by-row form
// whose Z-span equals the Z-span of the input.
std::vector<std::vector<Integer>> lattice_row_basis(const std::vector<std::vector<Integer>>& gens);

// Coordinates of v in the given row basis, if v lies in its Z-span.
bool in_lattice_coordinates(const std::vector<std::vector<Integer>>& basis,
                            const std::vector<Integer>& v, std::vector<Integer>& coords_out);

// LLL-reduced basis of the same lattice (delta = 3/4, exact arithmetic).
// Short kernel vectors keep the toric generators at low degree.
std::vector<std::vector<Integer>> lll_reduce(std::vector<std::vector<Integer>> basis);

} // namespace phylotoric

#endif
