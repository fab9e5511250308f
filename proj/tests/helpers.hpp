#pragma once

// Shared fixture ideals and terse constructors for the test binaries.

#include <initializer_list>
#include <utility>
#include <vector>

#include "morseres/reference_checks.hpp"

// Monomial in n variables from (variable, exponent) pairs: mono(3, {{1,2},{3,1}}) = x1^2*x3.
inline morseres::Monomial mono(int n, std::initializer_list<std::pair<int, int>> ps) {
    std::vector<int> e(n, 0);
    for (auto [k, v] : ps) e[k - 1] = v;
    return morseres::Monomial(std::move(e));
}

inline morseres::Face fov(std::initializer_list<int> vs) {
    return morseres::face_from_vertices(std::vector<int>(vs));
}

// Four generators in four variables whose size >= 2 Taylor faces all share
// one lcm. The single label class is big enough to carry a directed cycle,
// which no face class of the other fixture ideals can.
inline morseres::MonomialIdeal quad_ideal() {
    return morseres::MonomialIdeal(4, {
        morseres::Monomial({2, 2, 2, 0}),
        morseres::Monomial({0, 2, 2, 2}),
        morseres::Monomial({2, 0, 2, 2}),
        morseres::Monomial({2, 2, 0, 2}),
    });
}

// The matching whose modified graph walks {1,4} -> {1,2,4} -> {2,4} ->
// {2,3,4} -> {3,4} -> {1,3,4} -> {1,4}.
inline morseres::Matching quad_cyclic_matching() {
    return morseres::canonical_matching({
        {fov({1, 4}), fov({1, 2, 4})},
        {fov({2, 4}), fov({2, 3, 4})},
        {fov({3, 4}), fov({1, 3, 4})},
    });
}
