#pragma once

#include <optional>
#include <vector>

#include "morseres/chain.hpp"
#include "morseres/ideal.hpp"

namespace morseres {

// A simplicial complex on the generators of a monomial ideal, every face
// carrying its lcm label. Faces are stored in canonical order (dimension,
// then lexicographic vertex list) and always include the empty face, which
// is what makes the reduced chain complex below work uniformly.
class LabeledComplex {
public:
    LabeledComplex(MonomialIdeal ideal, std::vector<Face> faces);

    const MonomialIdeal& ideal() const { return ideal_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Monomial& label(std::size_t index) const { return labels_[index]; }
    const Monomial& label_of(Face f) const;

    std::size_t size() const { return faces_.size(); }
    int top_dim() const;
    bool contains(Face f) const;
    std::optional<std::size_t> index_of(Face f) const;

    // Faces with k vertices, k = 0..top. Leading entry is 1 for the empty
    // face.
    std::vector<long long> f_vector() const;

    // Inclusion-maximal faces, canonical order.
    std::vector<Face> facets() const;

    ChainComplex chain() const;

private:
    MonomialIdeal ideal_;
    std::vector<Face> faces_;    // canonical order, empty face first
    std::vector<Monomial> labels_;
};

// Boundary map from d-cells to (d-1)-cells with the simplicial sign
// convention: dropping the k-th smallest vertex (k from 0) contributes
// (-1)^k. For d = 0 this is the augmentation row of ones.
struct BoundaryMatrix {
    int d = 0;
    std::vector<Face> row_cells;  // (d-1)-cells, canonical order
    std::vector<Face> col_cells;  // d-cells, canonical order
    IntMat m;
};

BoundaryMatrix boundary_matrix(const LabeledComplex& complex, int d);

HomologyProfile reduced_homology(const LabeledComplex& complex);

// The full simplex on all generators: every subset of 1..r is a face.
// Throws guard_error beyond max_gens generators.
LabeledComplex taylor_complex(const MonomialIdeal& ideal, int max_gens = 20);

// Faces of the Taylor complex whose label no other Taylor face carries.
// Downward closure is re-verified after selection.
LabeledComplex scarf_complex(const MonomialIdeal& ideal, int max_gens = 20);

// The smallest complex containing the given faces (downward closure plus
// the empty face).
LabeledComplex complex_from_faces(const MonomialIdeal& ideal, const std::vector<Face>& faces);

}  // namespace morseres
