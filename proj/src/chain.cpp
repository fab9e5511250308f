#include "morseres/chain.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace morseres {

using boost::multiprecision::cpp_int;

IntMat multiply(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows())
        throw invalid_error("multiply: dimension mismatch");
    IntMat out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            long long aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

bool is_zero(const IntMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

int rational_rank(const IntMat& m) {
    int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    // Bareiss: after step k the trailing block consists of (k+1)x(k+1)
    // minors of the input and the division below is exact.
    cpp_int prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

bool HomologyProfile::trivial() const {
    for (int b : betti)
        if (b != 0) return false;
    return true;
}

long long HomologyProfile::euler_characteristic_reduced() const {
    long long chi = 0;
    int sign = 1;  // starts at dimension -1
    for (int b : betti) {
        chi += sign * static_cast<long long>(b);
        sign = -sign;
    }
    return chi;
}

HomologyProfile reduced_homology(const ChainComplex& chain, std::size_t max_cells) {
    std::size_t total = 0;
    for (int c : chain.cells) total += static_cast<std::size_t>(c);
    if (total > max_cells)
        throw guard_error("reduced_homology: " + std::to_string(total) +
                          " cells exceed the guard of " + std::to_string(max_cells));
    if (chain.cells.empty()) return HomologyProfile{};
    int top = chain.top_dim();
    std::vector<int> ranks(top + 2, 0);  // ranks[d] = rank of boundaries[d], d in 0..top
    for (int d = 0; d <= top; ++d) {
        if (d < static_cast<int>(chain.boundaries.size()))
            ranks[d] = rational_rank(chain.boundaries[d]);
    }
    HomologyProfile out;
    out.betti.resize(top + 2, 0);
    // H~_{-1}: the empty cell minus the image of the augmentation.
    out.betti[0] = chain.cells[0] - ranks[0];
    for (int d = 0; d <= top; ++d)
        out.betti[d + 1] = chain.cells[d + 1] - ranks[d] - (d + 1 <= top ? ranks[d + 1] : 0);
    return out;
}

}  // namespace morseres
