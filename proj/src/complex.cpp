#include "morseres/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace morseres {

LabeledComplex::LabeledComplex(MonomialIdeal ideal, std::vector<Face> faces)
    : ideal_(std::move(ideal)) {
    std::sort(faces.begin(), faces.end(), FaceLess{});
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.empty() || faces.front() != 0)
        faces.insert(faces.begin(), 0);
    faces_ = std::move(faces);
    labels_.reserve(faces_.size());
    for (Face f : faces_) labels_.push_back(ideal_.face_label(f));
}

const Monomial& LabeledComplex::label_of(Face f) const {
    auto idx = index_of(f);
    if (!idx) throw invalid_error("label_of: face " + face_str(f) + " not in complex");
    return labels_[*idx];
}

int LabeledComplex::top_dim() const { return face_dim(faces_.back()); }

bool LabeledComplex::contains(Face f) const { return index_of(f).has_value(); }

std::optional<std::size_t> LabeledComplex::index_of(Face f) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), f, FaceLess{});
    if (it == faces_.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - faces_.begin());
}

std::vector<long long> LabeledComplex::f_vector() const {
    std::vector<long long> out(static_cast<std::size_t>(top_dim()) + 2, 0);
    for (Face f : faces_) ++out[face_size(f)];
    return out;
}

std::vector<Face> LabeledComplex::facets() const {
    std::vector<Face> out;
    for (Face f : faces_) {
        bool maximal = true;
        for (Face g : faces_)
            if (g != f && face_subset(f, g)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(f);
    }
    return out;
}

ChainComplex LabeledComplex::chain() const {
    ChainComplex out;
    int top = top_dim();
    out.cells.assign(static_cast<std::size_t>(top) + 2, 0);
    for (Face f : faces_) ++out.cells[face_size(f)];
    out.boundaries.reserve(top + 1);
    for (int d = 0; d <= top; ++d) out.boundaries.push_back(boundary_matrix(*this, d).m);
    return out;
}

BoundaryMatrix boundary_matrix(const LabeledComplex& complex, int d) {
    if (d < 0 || d > complex.top_dim())
        throw invalid_error("boundary_matrix: dimension " + std::to_string(d) + " out of range");
    BoundaryMatrix out;
    out.d = d;
    std::map<Face, int, FaceLess> row_index;
    for (Face f : complex.faces()) {
        if (face_size(f) == d) {
            row_index.emplace(f, static_cast<int>(out.row_cells.size()));
            out.row_cells.push_back(f);
        } else if (face_size(f) == d + 1) {
            out.col_cells.push_back(f);
        }
    }
    out.m = IntMat(static_cast<int>(out.row_cells.size()), static_cast<int>(out.col_cells.size()));
    for (int j = 0; j < static_cast<int>(out.col_cells.size()); ++j) {
        Face tau = out.col_cells[j];
        for (int v : face_vertices(tau)) {
            Face sigma = tau & ~(Face(1) << (v - 1));
            auto it = row_index.find(sigma);
            if (it != row_index.end()) out.m.at(it->second, j) = incidence_sign(tau, v);
        }
    }
    return out;
}

HomologyProfile reduced_homology(const LabeledComplex& complex) {
    return reduced_homology(complex.chain());
}

LabeledComplex taylor_complex(const MonomialIdeal& ideal, int max_gens) {
    int r = ideal.ngens();
    if (r > max_gens || r > 31)
        throw guard_error("taylor_complex: " + std::to_string(r) +
                          " generators exceed the guard of " + std::to_string(std::min(max_gens, 31)));
    std::vector<Face> faces;
    faces.reserve(std::size_t(1) << r);
    for (Face f = 0; f < (Face(1) << r); ++f) faces.push_back(f);
    return LabeledComplex(ideal, std::move(faces));
}

LabeledComplex scarf_complex(const MonomialIdeal& ideal, int max_gens) {
    LabeledComplex taylor = taylor_complex(ideal, max_gens);
    std::map<Monomial, int> label_count;
    for (std::size_t i = 1; i < taylor.size(); ++i) ++label_count[taylor.label(i)];
    std::vector<Face> faces;
    for (std::size_t i = 1; i < taylor.size(); ++i)
        if (label_count[taylor.label(i)] == 1) faces.push_back(taylor.faces()[i]);
    LabeledComplex scarf(taylor.ideal(), std::move(faces));
    // The Scarf complex is always downward closed; a failure here would be
    // an implementation bug, not an input problem.
    for (Face f : scarf.faces())
        for (int v : face_vertices(f))
            if (!scarf.contains(f & ~(Face(1) << (v - 1))))
                throw std::logic_error("scarf_complex: selection is not downward closed");
    return scarf;
}

LabeledComplex complex_from_faces(const MonomialIdeal& ideal, const std::vector<Face>& faces) {
    std::set<Face> closed;
    std::vector<Face> stack(faces);
    while (!stack.empty()) {
        Face f = stack.back();
        stack.pop_back();
        if (!closed.insert(f).second) continue;
        for (int v : face_vertices(f)) stack.push_back(f & ~(Face(1) << (v - 1)));
    }
    return LabeledComplex(ideal, std::vector<Face>(closed.begin(), closed.end()));
}

}  // namespace morseres
