#pragma once

#include <cstdint>
#include <vector>

#include "morseres/util.hpp"

namespace morseres {

// Dense integer matrix, row major. Boundary matrices at desk scale are
// small enough that sparsity is not worth the bookkeeping.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    long long at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<long long> a_;
};

// Product a*b; dimensions must agree.
IntMat multiply(const IntMat& a, const IntMat& b);

bool is_zero(const IntMat& m);

// Rank over the rationals by fraction-free (Bareiss) elimination. All
// intermediate values are minors of the input, kept exact in arbitrary
// precision integers, so the result is never subject to overflow or
// rounding.
int rational_rank(const IntMat& m);

// A chain complex of cells graded by dimension -1..top. boundaries[d] is
// the matrix of the boundary map from d-cells to (d-1)-cells; for d = 0 it
// is the augmentation row mapping each vertex to the empty cell.
struct ChainComplex {
    std::vector<int> cells;          // cells[d+1] = number of d-cells, d from -1
    std::vector<IntMat> boundaries;  // boundaries[d] : d-cells -> (d-1)-cells

    int top_dim() const { return static_cast<int>(cells.size()) - 2; }
};

// Reduced homology ranks over the rationals, indexed from dimension -1.
// betti[d+1] = dim H~_d = #d-cells - rank d_d - rank d_{d+1}.
struct HomologyProfile {
    std::vector<int> betti;

    int rank(int d) const {
        int i = d + 1;
        if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
        return betti[i];
    }
    bool trivial() const;
    long long euler_characteristic_reduced() const;
};

// Guard: refuses complexes with more than max_cells cells in total.
HomologyProfile reduced_homology(const ChainComplex& chain, std::size_t max_cells = (1u << 20));

}  // namespace morseres
