#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "morseres/complex.hpp"

namespace morseres {

// beta_{index, degree}: rank of the degree-strand reduced homology in
// dimension index-1. Only nonzero entries are reported.
struct BettiEntry {
    int index = 0;
    Monomial degree;
    int value = 0;
};

// Multigraded Betti numbers of S/I computed over the lcm lattice: for each
// lattice degree m, the strand is the set of Taylor faces whose label
// strictly divides m, and beta_{i,m} = dim H~_{i-1} of that strand.
// Entries are sorted by (index, degree). Degrees are processed in parallel
// when MORSE_RESOLVE_THREADS allows.
std::vector<BettiEntry> multigraded_betti(const MonomialIdeal& ideal, int max_gens = 20);

// Total Betti numbers of the ideal: beta_i(I) = sum over degrees of
// beta_{i,m}. Index 0 counts the generators.
std::vector<long long> total_betti(const MonomialIdeal& ideal, int max_gens = 20);

// Minimality criterion for a labeled cell complex: no face may share its
// label with a face it covers. Returns the first offending cover pair
// (sub, super) in canonical order when the criterion fails.
struct MinimalityResult {
    bool minimal = false;
    std::optional<std::pair<Face, Face>> witness;
};

MinimalityResult is_minimal_support(const LabeledComplex& complex);

}  // namespace morseres
