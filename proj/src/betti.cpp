#include "morseres/betti.hpp"

#include <algorithm>

namespace morseres {

std::vector<BettiEntry> multigraded_betti(const MonomialIdeal& ideal, int max_gens) {
    const LabeledComplex taylor = taylor_complex(ideal, max_gens);
    const std::vector<Monomial> degrees = lcm_lattice(ideal, max_gens);

    // One result slot per degree so the strands can run in parallel.
    std::vector<std::vector<BettiEntry>> slots(degrees.size());
    parallel_for(degrees.size(), [&](std::size_t di) {
        const Monomial& m = degrees[di];
        std::vector<Face> strand;
        for (std::size_t i = 0; i < taylor.size(); ++i) {
            if (strictly_divides(taylor.label(i), m)) strand.push_back(taylor.faces()[i]);
        }
        if (strand.empty()) return;
        // Labels only grow along inclusion, so the strand is already a
        // subcomplex; complex_from_faces just re-checks that.
        const HomologyProfile h = reduced_homology(complex_from_faces(ideal, strand));
        for (int d = -1; d < static_cast<int>(h.betti.size()) - 1; ++d) {
            if (h.rank(d) != 0) slots[di].push_back({d + 1, m, h.rank(d)});
        }
    });

    std::vector<BettiEntry> out;
    for (const auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end(), [](const BettiEntry& a, const BettiEntry& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.degree < b.degree;
    });
    return out;
}

std::vector<long long> total_betti(const MonomialIdeal& ideal, int max_gens) {
    std::vector<long long> out;
    for (const BettiEntry& e : multigraded_betti(ideal, max_gens)) {
        if (static_cast<int>(out.size()) <= e.index) out.resize(e.index + 1, 0);
        out[e.index] += e.value;
    }
    return out;
}

MinimalityResult is_minimal_support(const LabeledComplex& complex) {
    std::vector<std::pair<Face, Face>> offending;
    for (std::size_t i = 0; i < complex.size(); ++i) {
        const Face tau = complex.faces()[i];
        if (tau == 0) continue;
        for (int v : face_vertices(tau)) {
            const Face sigma = tau & ~(Face(1) << (v - 1));
            const auto si = complex.index_of(sigma);
            if (si && complex.label(*si) == complex.label(i)) offending.push_back({sigma, tau});
        }
    }
    if (offending.empty()) return {true, std::nullopt};
    std::sort(offending.begin(), offending.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return face_less(a.first, b.first);
        return face_less(a.second, b.second);
    });
    return {false, offending.front()};
}

}  // namespace morseres
