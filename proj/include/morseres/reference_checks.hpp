#pragma once

#include <string>
#include <vector>

#include "morseres/matching.hpp"

namespace morseres {

struct ReferenceResult {
    std::string name;
    bool pass = false;
    std::string detail;  // what was expected vs what came out, on failure
};

// The pinned worked examples the library is validated against: every
// expected value is frozen into the checks, so a pass certifies the whole
// pipeline end to end on known ground truth.
std::vector<ReferenceResult> run_reference_checks();

bool all_pass(const std::vector<ReferenceResult>& results);

// The two pinned ideals and the pinned showcase matching the checks use.
MonomialIdeal xyz_square_ideal();
MonomialIdeal twelve_vars_ideal();
Matching xyz_square_showcase_matching();

}  // namespace morseres
