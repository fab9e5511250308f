#pragma once

// Independent rank oracle for cross-checking the fraction-free elimination:
// Gaussian elimination over two large prime fields. rank_p <= rank_Q always,
// and equality can only fail when some nonzero minor vanishes mod both
// primes, which no matrix in this test suite gets anywhere near.

#include <vector>

#include "morseres/chain.hpp"

inline int rank_mod_p(const morseres::IntMat& m, long long p) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = ((m.at(i, j) % p) + p) % p;
    auto powmod = [&](long long b, long long e) {
        long long r = 1 % p;
        b %= p;
        while (e > 0) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const long long inv = powmod(a[rank][col], p - 2);
        for (int j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const long long f = a[i][col];
            for (int j = col; j < cols; ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline int oracle_rank(const morseres::IntMat& m) {
    const int r1 = rank_mod_p(m, 1000003);
    const int r2 = rank_mod_p(m, 998244353);
    return r1 > r2 ? r1 : r2;
}
