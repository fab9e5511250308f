#include "morseres/morse.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace morseres {

int MorseComplex::top_dim() const {
    return cells_.empty() ? -1 : face_dim(cells_.back());
}

std::optional<std::size_t> MorseComplex::index_of(Face f) const {
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), f, face_less);
    if (it == cells_.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<long long> MorseComplex::f_vector() const {
    std::vector<long long> out(std::max(top_dim() + 1, 0), 0);
    for (Face f : cells_)
        if (f != 0) ++out[face_dim(f)];
    return out;
}

std::vector<std::size_t> MorseComplex::down_set(std::size_t cell) const {
    std::vector<std::size_t> out;
    if (cells_[cell] == 0) return out;
    std::vector<char> seen(cells_.size(), 0);
    std::vector<std::size_t> stack{cell};
    seen[cell] = 1;
    while (!stack.empty()) {
        const std::size_t c = stack.back();
        stack.pop_back();
        out.push_back(c);
        for (std::size_t ci : by_super_[c]) {
            const std::size_t sub = covers_[ci].sub;
            if (cells_[sub] == 0 || seen[sub]) continue;
            seen[sub] = 1;
            stack.push_back(sub);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// [begin, end) index range of the size-k cells; cells are sorted by size
// first, so each range is contiguous.
std::vector<std::pair<std::size_t, std::size_t>> size_ranges(const std::vector<Face>& cells) {
    int top = 0;
    for (Face f : cells) top = std::max(top, face_size(f));
    std::vector<std::pair<std::size_t, std::size_t>> out(top + 1, {0, 0});
    std::size_t i = 0;
    for (int k = 0; k <= top; ++k) {
        const std::size_t begin = i;
        while (i < cells.size() && face_size(cells[i]) == k) ++i;
        out[k] = {begin, i};
    }
    return out;
}

}  // namespace

BoundaryMatrix MorseComplex::boundary(int d) const {
    BoundaryMatrix out;
    out.d = d;
    for (Face f : cells_) {
        if (face_size(f) == d) out.row_cells.push_back(f);
        if (face_size(f) == d + 1) out.col_cells.push_back(f);
    }
    out.m = IntMat(static_cast<int>(out.row_cells.size()), static_cast<int>(out.col_cells.size()));

    std::unordered_map<std::size_t, int> row_pos, col_pos;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (face_size(cells_[i]) == d) row_pos[i] = static_cast<int>(row_pos.size());
        if (face_size(cells_[i]) == d + 1) col_pos[i] = static_cast<int>(col_pos.size());
    }
    for (const Cover& cv : covers_) {
        const auto ci = col_pos.find(cv.super);
        if (ci == col_pos.end()) continue;
        out.m.at(row_pos.at(cv.sub), ci->second) = cv.coeff;
    }
    return out;
}

ChainComplex MorseComplex::chain() const {
    ChainComplex out;
    const int top = top_dim();
    out.cells.assign(top + 2, 0);
    for (Face f : cells_) ++out.cells[face_size(f)];
    for (int d = 0; d <= top; ++d) out.boundaries.push_back(boundary(d).m);
    return out;
}

ChainComplex MorseComplex::chain_restricted(const Monomial& m) const {
    std::vector<char> in(cells_.size(), 0);
    int top_size = 0;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (divides(labels_[i], m)) {
            in[i] = 1;
            top_size = std::max(top_size, face_size(cells_[i]));
        }
    }

    ChainComplex out;
    out.cells.assign(top_size + 1, 0);
    std::unordered_map<std::size_t, int> pos;  // cell index -> position within its size block
    std::vector<int> counts(top_size + 2, 0);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (!in[i]) continue;
        const int k = face_size(cells_[i]);
        pos[i] = counts[k]++;
        ++out.cells[k];
    }
    for (int d = 0; d + 1 <= top_size; ++d) {
        IntMat mat(counts[d], counts[d + 1]);
        for (const Cover& cv : covers_) {
            if (!in[cv.super] || face_size(cells_[cv.super]) != d + 1) continue;
            // labels divide along covers, so the sub cell is selected too
            mat.at(pos.at(cv.sub), pos.at(cv.super)) = cv.coeff;
        }
        out.boundaries.push_back(std::move(mat));
    }
    return out;
}

MorseComplex morse_complex(const LabeledComplex& taylor, const Matching& m) {
    const AcyclicityResult ac = is_acyclic(taylor, m);  // validates shape too
    if (!ac.acyclic) {
        std::string what = "matching is not acyclic; cycle:";
        for (Face f : ac.cycle) what += " " + face_str(f);
        throw invalid_error(what);
    }

    MorseComplex out;
    out.ideal_ = taylor.ideal();

    std::unordered_set<Face> matched;
    std::unordered_map<Face, Face> up;  // sigma -> tau
    for (const HomogeneousPair& p : m) {
        matched.insert(p.sigma);
        matched.insert(p.tau);
        up[p.sigma] = p.tau;
    }
    for (std::size_t i = 0; i < taylor.size(); ++i) {
        if (matched.count(taylor.faces()[i])) continue;
        out.cells_.push_back(taylor.faces()[i]);
        out.labels_.push_back(taylor.label(i));
    }

    std::unordered_map<Face, std::size_t> cell_index;
    for (std::size_t i = 0; i < out.cells_.size(); ++i) cell_index[out.cells_[i]] = i;

    out.simplex_flags_.assign(out.cells_.size(), 1);
    for (std::size_t i = 0; i < out.cells_.size(); ++i) {
        const Face c = out.cells_[i];
        for (Face s = (c - 1) & c;; s = (s - 1) & c) {
            if (!cell_index.count(s)) {
                out.simplex_flags_[i] = 0;
                break;
            }
            if (s == 0) break;
        }
    }

    const auto ranges = size_ranges(out.cells_);

    // Signed gradient path count from each critical tau to the critical
    // cells one dimension down: seed the facets of tau with their
    // simplicial signs, then push weights through each matched up-step in
    // topological order of the zigzag graph. Reachability is tracked
    // separately because opposite-signed paths may cancel while the cover
    // relation persists.
    for (std::size_t ti = 0; ti < out.cells_.size(); ++ti) {
        const Face tau = out.cells_[ti];
        if (tau == 0) continue;
        const int k = face_size(tau);

        std::vector<Face> order;  // postorder of the zigzag DFS
        std::unordered_set<Face> seen;
        std::vector<std::pair<Face, int>> stack;  // (node, next child slot)
        auto children = [&](Face x) {
            std::vector<Face> ch;
            const auto it = up.find(x);
            if (it != up.end()) {
                const Face u = it->second;
                for (int v : face_vertices(u)) {
                    const Face y = u & ~(Face(1) << (v - 1));
                    if (y != x) ch.push_back(y);
                }
            }
            return ch;
        };
        std::unordered_map<Face, std::vector<Face>> kids;
        auto visit = [&](Face root) {
            if (seen.count(root)) return;
            seen.insert(root);
            stack.push_back({root, 0});
            kids[root] = children(root);
            while (!stack.empty()) {
                const Face x = stack.back().first;
                auto& slot = stack.back().second;
                const auto& ch = kids[x];
                if (slot < static_cast<int>(ch.size())) {
                    const Face y = ch[slot++];
                    if (!seen.count(y)) {
                        seen.insert(y);
                        kids[y] = children(y);
                        stack.push_back({y, 0});
                    }
                } else {
                    order.push_back(x);
                    stack.pop_back();
                }
            }
        };

        std::unordered_map<Face, long long> coeff;
        std::unordered_set<Face> reach;
        for (int v : face_vertices(tau)) {
            const Face x = tau & ~(Face(1) << (v - 1));
            visit(x);
            coeff[x] += incidence_sign(tau, v);
            reach.insert(x);
        }

        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Face x = *it;
            if (!reach.count(x)) continue;
            const auto ui = up.find(x);
            if (ui == up.end()) continue;
            const Face u = ui->second;
            const int w = face_vertices(u & ~x)[0];
            const long long su = -incidence_sign(u, w);
            const long long cx = coeff[x];
            for (int v : face_vertices(u)) {
                const Face y = u & ~(Face(1) << (v - 1));
                if (y == x) continue;
                coeff[y] += cx * su * incidence_sign(u, v);
                reach.insert(y);
            }
        }

        if (k - 1 < static_cast<int>(ranges.size())) {
            const auto [begin, end] = ranges[k - 1];
            for (std::size_t si = begin; si < end; ++si) {
                if (!reach.count(out.cells_[si])) continue;
                const auto ci = coeff.find(out.cells_[si]);
                out.covers_.push_back({si, ti, ci == coeff.end() ? 0 : ci->second});
            }
        }
    }

    // covers_ ended up grouped by super cell; regroup into index lists.
    out.by_super_.assign(out.cells_.size(), {});
    out.by_sub_.assign(out.cells_.size(), {});
    for (std::size_t i = 0; i < out.covers_.size(); ++i) {
        out.by_super_[out.covers_[i].super].push_back(i);
        out.by_sub_[out.covers_[i].sub].push_back(i);
    }
    return out;
}

std::vector<long long> morse_fvector(const LabeledComplex& taylor, const Matching& m) {
    return morse_complex(taylor, m).f_vector();
}

MinimalityResult is_minimal_support(const MorseComplex& complex) {
    std::vector<std::pair<Face, Face>> offending;
    for (const MorseComplex::Cover& cv : complex.covers()) {
        if (complex.label(cv.sub) == complex.label(cv.super))
            offending.push_back({complex.cells()[cv.sub], complex.cells()[cv.super]});
    }
    if (offending.empty()) return {true, std::nullopt};
    std::sort(offending.begin(), offending.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return face_less(a.first, b.first);
        return face_less(a.second, b.second);
    });
    return {false, offending.front()};
}

HomologyProfile reduced_homology(const MorseComplex& complex) {
    return reduced_homology(complex.chain());
}

}  // namespace morseres
