#include "morseres/ideal.hpp"

#include <algorithm>
#include <set>

namespace morseres {

std::vector<Monomial> minimalize(const std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
        bool dominated = false;
        for (const Monomial& h : gens) {
            if (&h != &g && divides(h, g) && !(h == g)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        if (std::find(out.begin(), out.end(), g) != out.end()) continue;
        out.push_back(g);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const Monomial& g : gens)
        if (g.nvars() != nvars)
            throw invalid_error("generator ring size mismatch");
    gens_ = minimalize(gens);
    if (gens_.size() > 32)
        throw guard_error("more than 32 minimal generators are not supported");
}

Monomial MonomialIdeal::face_label(Face f) const {
    Monomial out(nvars_);
    for (int v : face_vertices(f)) out = lcm(out, gen(v));
    return out;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, int max_gens) {
    if (ideal.ngens() > max_gens)
        throw guard_error("lcm_lattice: " + std::to_string(ideal.ngens()) +
                          " generators exceed the guard of " + std::to_string(max_gens));
    std::set<Monomial> seen(ideal.gens().begin(), ideal.gens().end());
    std::vector<Monomial> frontier(ideal.gens());
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const Monomial& a : frontier) {
            for (const Monomial& g : ideal.gens()) {
                Monomial l = lcm(a, g);
                if (seen.insert(l).second) next.push_back(std::move(l));
            }
        }
        frontier = std::move(next);
    }
    return std::vector<Monomial>(seen.begin(), seen.end());
}

}  // namespace morseres
