#pragma once

#include <optional>
#include <vector>

#include "morseres/betti.hpp"
#include "morseres/matching.hpp"

namespace morseres {

// The CW complex obtained by collapsing a homogeneous acyclic matching
// out of the Taylor complex. Cells are the critical faces (the empty cell
// included); the face poset is generated by the codimension-1 cover
// relation "a gradient path exists", and the signed gradient path count
// gives the incidence coefficient of each cover.
//
// A cover can exist with coefficient 0 when path signs cancel, so the
// poset is kept separately from the boundary coefficients.
class MorseComplex {
public:
    struct Cover {
        std::size_t sub = 0;    // cell index of the lower cell
        std::size_t super = 0;  // cell index of the upper cell
        long long coeff = 0;    // signed gradient path count
    };

    const MonomialIdeal& ideal() const { return ideal_; }
    const std::vector<Face>& cells() const { return cells_; }
    const Monomial& label(std::size_t i) const { return labels_[i]; }

    // True when the cell and every subset of it are critical; such a cell
    // is a simplex whose covers are exactly its facets.
    bool simplex_flag(std::size_t i) const { return simplex_flags_[i] != 0; }

    std::size_t size() const { return cells_.size(); }
    int top_dim() const;
    std::optional<std::size_t> index_of(Face f) const;

    // Cells per dimension 0..top; the empty cell is not counted.
    std::vector<long long> f_vector() const;

    const std::vector<Cover>& covers() const { return covers_; }

    // Covers below / above one cell, as indices into covers().
    const std::vector<std::size_t>& boundary_of(std::size_t cell) const {
        return by_super_[cell];
    }
    const std::vector<std::size_t>& coboundary_of(std::size_t cell) const {
        return by_sub_[cell];
    }

    // Reflexive transitive closure of the cover relation below `cell`,
    // the empty cell excluded. Sorted cell indices.
    std::vector<std::size_t> down_set(std::size_t cell) const;

    // Boundary map from d-cells to (d-1)-cells; d = 0 is the augmentation.
    BoundaryMatrix boundary(int d) const;
    ChainComplex chain() const;

    // The subcomplex of cells whose label divides m. Closed under the
    // boundary because labels weakly divide along covers.
    ChainComplex chain_restricted(const Monomial& m) const;

    friend MorseComplex morse_complex(const LabeledComplex& taylor, const Matching& m);

private:
    MonomialIdeal ideal_{0, {}};
    std::vector<Face> cells_;  // canonical order, empty cell first
    std::vector<Monomial> labels_;
    std::vector<char> simplex_flags_;
    std::vector<Cover> covers_;
    std::vector<std::vector<std::size_t>> by_super_, by_sub_;
};

// Builds the Morse complex of a homogeneous acyclic matching on the
// Taylor complex. Validates the matching and throws invalid_error when it
// is inhomogeneous, ill-shaped, or cyclic.
MorseComplex morse_complex(const LabeledComplex& taylor, const Matching& m);

// Critical cell counts per dimension 0..top.
std::vector<long long> morse_fvector(const LabeledComplex& taylor, const Matching& m);

// Minimality criterion on the Morse poset: no cover pair shares a label.
MinimalityResult is_minimal_support(const MorseComplex& complex);

HomologyProfile reduced_homology(const MorseComplex& complex);

}  // namespace morseres
