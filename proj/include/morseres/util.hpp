#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace morseres {

// Thrown on malformed textual input (monomials, ideal files, matching JSON).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation would exceed a size guard. Guards exist because
// everything here is exponential in the number of generators; callers can
// raise them explicitly when they know what they are doing.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when input data is structurally invalid for an operation
// (unknown cells, malformed matchings, inconsistent arguments).
struct invalid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A face of the Taylor complex on r <= 32 generators: bit i set means
// generator i+1 is a vertex. Vertex names are 1-based everywhere outside
// this bitmask representation. Face(0) is the empty face.
using Face = std::uint32_t;

inline int face_size(Face f) { return std::popcount(f); }
inline int face_dim(Face f) { return std::popcount(f) - 1; }

inline bool face_subset(Face a, Face b) { return (a & b) == a; }

Face face_from_vertices(const std::vector<int>& vertices);
std::vector<int> face_vertices(Face f);
std::string face_str(Face f);

// Canonical cell order: by dimension, then lexicographically by the
// ascending vertex list. Used for every exported list of cells.
bool face_less(Face a, Face b);

struct FaceLess {
    bool operator()(Face a, Face b) const { return face_less(a, b); }
};

// Simplicial incidence sign of (tau, tau \ {v}): (-1)^k where v is the
// k-th smallest vertex of tau, counting from zero.
int incidence_sign(Face tau, int v);

// Worker count for parallel sections: MORSE_RESOLVE_THREADS if set and
// positive, hardware concurrency when unset or 0, never less than 1.
int resolve_threads();

// Runs fn(i) for i in [0, n). Splits into contiguous chunks when more than
// one worker is available; results must be written to disjoint slots so the
// outcome is identical to the serial loop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace morseres
