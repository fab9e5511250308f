#pragma once

#include <vector>

#include "morseres/monomial.hpp"
#include "morseres/util.hpp"

namespace morseres {

// Removes generators divided by another generator and duplicates, keeping
// the first occurrence of each survivor in the input order. Idempotent.
std::vector<Monomial> minimalize(const std::vector<Monomial>& gens);

// A monomial ideal held by its unique minimal generating set. Generators
// are numbered 1..r in their (stable, minimalized) input order; that
// numbering names the vertices of every complex built from the ideal.
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    int ngens() const { return static_cast<int>(gens_.size()); }

    // Generator m_i, i in 1..ngens.
    const Monomial& gen(int i) const { return gens_[i - 1]; }

    const std::vector<Monomial>& gens() const { return gens_; }

    // lcm of the generators indexed by f; the constant monomial for the
    // empty face.
    Monomial face_label(Face f) const;

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

// All distinct lcms of non-empty generator subsets, sorted by exponent
// vector. Computed as the closure of the generators under pairwise lcm.
// Throws guard_error when the ideal has more than max_gens generators.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, int max_gens = 20);

}  // namespace morseres
