#pragma once

#include <string>
#include <vector>

#include "morseres/morse.hpp"

namespace morseres {

// Meet of two cells in the face poset: the structure of their common
// lower bounds (empty cell excluded). A poset whose meets all exist and
// are faces is a necessary condition for an honest polyhedral complex.
enum class MeetStatus {
    empty,            // no common cell: the intersection is the empty face
    face,             // a unique maximal common cell: the meet exists
    multiple_maximal  // two or more maximal common cells: no meet
};

struct MeetResult {
    MeetStatus status = MeetStatus::empty;
    // All maximal common lower cells; one entry for `face`, two or more
    // for `multiple_maximal`.
    std::vector<Face> maximal_common;
};

MeetResult meet_check(const MorseComplex& complex, std::size_t a, std::size_t b);

// True when the closed cell is combinatorially a simplex: its down-set
// together with the empty cell is the full power set of its support and
// the cover order below it agrees with inclusion.
bool is_simplex_cell(const MorseComplex& complex, std::size_t cell);

// Face-count test for a 3-cell against the possible f-vectors of
// 3-polytopes: Euler/Steinitz relations f1 = 3 f0 - 6, f2 = 2 f0 - 4 for
// a cell with simplicial boundary, plus nonnegativity of the h-vector of
// (1, f0, f1, f2, 1).
struct PolytopeCheck {
    bool ok = false;
    bool steinitz_ok = false;
    bool h_nonnegative = false;
    long long expected_f1 = 0;  // 3 f0 - 6
    long long expected_f2 = 0;  // 2 f0 - 4
    std::vector<long long> h;
    std::string reason;  // empty when ok
};

PolytopeCheck candidate_3polytope_check(long long f0, long long f1, long long f2);

enum class PolyhedralStatus {
    polyhedral,     // every certification step passed
    inconclusive,   // no failure, but some cell could not be certified
    not_polyhedral  // a poset-level obstruction was found
};

// A pair of cells whose meet does not exist.
struct MeetWitness {
    Face a = 0, b = 0;
    std::vector<Face> maximal_common;
};

struct PolyhedralVerdict {
    PolyhedralStatus status = PolyhedralStatus::polyhedral;
    std::vector<MeetWitness> witnesses;   // failed meets
    std::vector<Face> irregular_cells;    // cells failing a local test
    std::vector<Face> uncertified_cells;  // cells no test could certify
};

// Certifies whether the Morse complex can be realized with polyhedral
// cells glued along faces. Any failed meet or failed local boundary test
// gives not_polyhedral. Simplex cells certify directly; a non-simplex
// 2-cell needs a polygon boundary; a non-simplex 3-cell with simplex
// 2-faces is screened by candidate_3polytope_check. Cells out of reach of
// every implemented test leave the verdict inconclusive.
PolyhedralVerdict check_polyhedral(const MorseComplex& complex);

// Searches the maximal homogeneous acyclic matchings of the Taylor
// complex for one whose Morse complex certifies polyhedral. Intended for
// small inputs; guards on the generator count.
bool exists_polyhedral_maximal_matching(const MonomialIdeal& ideal, int max_gens = 6);

}  // namespace morseres
