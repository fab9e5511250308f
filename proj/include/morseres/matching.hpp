#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "morseres/complex.hpp"

namespace morseres {

// A matched edge tau -> sigma of the face poset: sigma is a facet of tau
// and both carry the same lcm label.
struct HomogeneousPair {
    Face sigma = 0;
    Face tau = 0;

    friend bool operator==(const HomogeneousPair&, const HomogeneousPair&) = default;
};

// Canonical pair order: by sigma, then tau, in canonical face order.
bool pair_less(const HomogeneousPair& a, const HomogeneousPair& b);

// A homogeneous matching, kept sorted in canonical pair order. Each face
// appears in at most one pair.
using Matching = std::vector<HomogeneousPair>;

Matching canonical_matching(Matching m);

// All codimension-1 label-equal pairs of the complex, canonical order.
std::vector<HomogeneousPair> homogeneous_pairs(const LabeledComplex& taylor);

// The pairs (sigma, tau) such that no non-empty A inside sigma makes
// lcm(sigma \ A) = lcm(tau \ A). Every homogeneous pair must then be of
// the form (sigma_i + A, tau_i + A) for some minimal pair i and some A
// disjoint from tau_i; a violation of that decomposition throws
// std::logic_error.
std::vector<HomogeneousPair> minimal_homogeneous_pairs(const LabeledComplex& taylor);

// Checks matching shape: pairs exist in the complex, are codimension-1
// covers, are label-homogeneous, and no face is used twice. Throws
// invalid_error otherwise.
void validate_matching(const LabeledComplex& taylor, const Matching& m);

struct AcyclicityResult {
    bool acyclic = false;
    std::vector<Face> cycle;  // a directed cycle in the modified graph when not acyclic
};

// Full cycle detection on the matching graph with matched edges reversed.
// Validates the matching first.
AcyclicityResult is_acyclic(const LabeledComplex& taylor, const Matching& m);

struct EnumerationResult {
    std::vector<Matching> matchings;
    bool truncated = false;
};

// All inclusion-maximal homogeneous acyclic matchings, deduplicated, in a
// deterministic lexicographic order, stopping after `limit` results (the
// flag records truncation). Throws guard_error when the pair set exceeds
// max_pairs. Backtracks over each lcm-label class separately (conflicts
// and directed cycles never cross classes) and streams the Cartesian
// product of the per-class solutions.
EnumerationResult enumerate_maximal_matchings(const LabeledComplex& taylor,
                                              std::size_t limit = 100000,
                                              std::size_t max_pairs = 64);

// Streams the same enumeration; return false from the callback to stop.
void for_each_maximal_matching(const LabeledComplex& taylor,
                               const std::function<bool(const Matching&)>& fn,
                               std::size_t max_pairs = 64);

}  // namespace morseres
