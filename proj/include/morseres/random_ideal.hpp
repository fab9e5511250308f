#pragma once

#include <cstdint>

#include "morseres/ideal.hpp"

namespace morseres {

// Draws an ideal with exactly `gens` minimal generators in `vars`
// variables, each exponent uniform in [0, max_exp], by seeded rejection
// sampling. Deterministic for a fixed seed. Throws guard_error when no
// draw of the attempt budget yields an antichain of the requested size
// (e.g. more generators than the ring can carry).
MonomialIdeal random_ideal(int gens, int vars, int max_exp, std::uint32_t seed);

}  // namespace morseres
