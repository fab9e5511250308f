#include "morseres/matching.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace morseres {

bool pair_less(const HomogeneousPair& a, const HomogeneousPair& b) {
    if (a.sigma != b.sigma) return face_less(a.sigma, b.sigma);
    return face_less(a.tau, b.tau);
}

Matching canonical_matching(Matching m) {
    std::sort(m.begin(), m.end(), pair_less);
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

std::vector<HomogeneousPair> homogeneous_pairs(const LabeledComplex& taylor) {
    std::vector<HomogeneousPair> out;
    for (std::size_t i = 0; i < taylor.size(); ++i) {
        const Face tau = taylor.faces()[i];
        if (face_size(tau) < 2) continue;
        for (int v : face_vertices(tau)) {
            const Face sigma = tau & ~(Face(1) << (v - 1));
            const auto si = taylor.index_of(sigma);
            if (si && taylor.label(*si) == taylor.label(i)) out.push_back({sigma, tau});
        }
    }
    return canonical_matching(std::move(out));
}

std::vector<HomogeneousPair> minimal_homogeneous_pairs(const LabeledComplex& taylor) {
    const std::vector<HomogeneousPair> all = homogeneous_pairs(taylor);
    const MonomialIdeal& ideal = taylor.ideal();

    std::vector<HomogeneousPair> mins;
    for (const HomogeneousPair& p : all) {
        bool reducible = false;
        // a runs over the non-empty subsets of sigma, largest first
        for (Face a = p.sigma; a != 0; a = (a - 1) & p.sigma) {
            if (ideal.face_label(p.sigma & ~a) == ideal.face_label(p.tau & ~a)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) mins.push_back(p);
    }

    // Every pair must be a minimal pair extended by vertices that avoid
    // the minimal pair's top face. Anything else means the minimal set
    // does not generate, which this construction is supposed to rule out.
    for (const HomogeneousPair& p : all) {
        bool generated = false;
        for (const HomogeneousPair& q : mins) {
            if (!face_subset(q.sigma, p.sigma)) continue;
            const Face a = p.sigma & ~q.sigma;
            if ((a & q.tau) == 0 && p.tau == (q.tau | a)) {
                generated = true;
                break;
            }
        }
        if (!generated)
            throw std::logic_error("homogeneous pair not generated by a minimal pair: " +
                                   face_str(p.sigma) + " -> " + face_str(p.tau));
    }
    return mins;
}

void validate_matching(const LabeledComplex& taylor, const Matching& m) {
    std::set<Face, FaceLess> used;
    for (const HomogeneousPair& p : m) {
        const std::string what = face_str(p.sigma) + " -> " + face_str(p.tau);
        const auto si = taylor.index_of(p.sigma);
        const auto ti = taylor.index_of(p.tau);
        if (!si || !ti) throw invalid_error("matched face not in the complex: " + what);
        if (!face_subset(p.sigma, p.tau) || face_size(p.tau) != face_size(p.sigma) + 1)
            throw invalid_error("matched pair is not a codimension-1 cover: " + what);
        if (!(taylor.label(*si) == taylor.label(*ti)))
            throw invalid_error("matched pair is not label-homogeneous: " + what);
        if (!used.insert(p.sigma).second || !used.insert(p.tau).second)
            throw invalid_error("face matched twice: " + what);
    }
}

AcyclicityResult is_acyclic(const LabeledComplex& taylor, const Matching& m) {
    validate_matching(taylor, m);
    const std::size_t n = taylor.size();

    std::unordered_map<Face, Face> matched_down;  // tau -> sigma
    for (const HomogeneousPair& p : m) matched_down[p.tau] = p.sigma;

    // Down edges tau -> facet, with each matched edge reversed.
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Face tau = taylor.faces()[i];
        for (int v : face_vertices(tau)) {
            const Face sigma = tau & ~(Face(1) << (v - 1));
            const auto si = taylor.index_of(sigma);
            if (!si) continue;
            const auto it = matched_down.find(tau);
            if (it != matched_down.end() && it->second == sigma)
                adj[*si].push_back(i);
            else
                adj[i].push_back(*si);
        }
    }

    std::vector<char> color(n, 0);  // 0 fresh, 1 on path, 2 done
    std::vector<std::size_t> path;
    for (std::size_t s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack;
        stack.push_back({s, 0});
        color[s] = 1;
        path.push_back(s);
        while (!stack.empty()) {
            const std::size_t u = stack.back().first;
            if (stack.back().second < adj[u].size()) {
                const std::size_t w = adj[u][stack.back().second++];
                if (color[w] == 1) {
                    std::vector<Face> cycle;
                    auto it = std::find(path.begin(), path.end(), w);
                    for (; it != path.end(); ++it) cycle.push_back(taylor.faces()[*it]);
                    cycle.push_back(taylor.faces()[w]);
                    return {false, cycle};
                }
                if (color[w] == 0) {
                    color[w] = 1;
                    path.push_back(w);
                    stack.push_back({w, 0});
                }
            } else {
                color[u] = 2;
                path.pop_back();
                stack.pop_back();
            }
        }
    }
    return {true, {}};
}

namespace {

bool matching_lex_less(const Matching& a, const Matching& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), pair_less);
}

// Cycle check within one lcm-label class: chosen pairs point up, every
// other pair of the class points down. Directed cycles of the full graph
// never leave a class (labels only weakly divide along its edges), so
// this local check decides global acyclicity.
bool class_acyclic(const std::vector<HomogeneousPair>& pairs, const std::vector<char>& chosen) {
    std::unordered_map<Face, int> id;
    auto node = [&](Face f) {
        return id.emplace(f, static_cast<int>(id.size())).first->second;
    };
    std::vector<std::vector<int>> adj(pairs.size() * 2);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const int s = node(pairs[i].sigma);
        const int t = node(pairs[i].tau);
        if (chosen[i]) adj[s].push_back(t);
        else adj[t].push_back(s);
    }
    const int n = static_cast<int>(id.size());
    std::vector<char> color(n, 0);
    for (int s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        color[s] = 1;
        while (!stack.empty()) {
            const int u = stack.back().first;
            if (stack.back().second < adj[u].size()) {
                const int w = adj[u][stack.back().second++];
                if (color[w] == 1) return false;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

// All maximal valid subsets of one class by include/exclude backtracking.
// Subsets of valid matchings stay valid, so gating the include branch on
// validity loses nothing. Results sorted lexicographically.
std::vector<Matching> enumerate_class(const std::vector<HomogeneousPair>& pairs) {
    const std::size_t n = pairs.size();
    std::vector<char> chosen(n, 0);
    std::vector<Matching> out;

    auto conflicts = [&](std::size_t i, std::size_t j) {
        return pairs[i].sigma == pairs[j].sigma || pairs[i].sigma == pairs[j].tau ||
               pairs[i].tau == pairs[j].sigma || pairs[i].tau == pairs[j].tau;
    };
    auto valid_add = [&](std::size_t k) {
        for (std::size_t j = 0; j < n; ++j)
            if (chosen[j] && conflicts(k, j)) return false;
        chosen[k] = 1;
        const bool ok = class_acyclic(pairs, chosen);
        chosen[k] = 0;
        return ok;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            for (std::size_t j = 0; j < n; ++j)
                if (!chosen[j] && valid_add(j)) return;  // extendable: not maximal
            Matching m;
            for (std::size_t j = 0; j < n; ++j)
                if (chosen[j]) m.push_back(pairs[j]);
            out.push_back(std::move(m));  // pairs are in canonical order already
            return;
        }
        if (valid_add(i)) {
            chosen[i] = 1;
            rec(i + 1);
            chosen[i] = 0;
        }
        rec(i + 1);
    };
    rec(0);

    std::sort(out.begin(), out.end(), matching_lex_less);
    return out;
}

}  // namespace

void for_each_maximal_matching(const LabeledComplex& taylor,
                               const std::function<bool(const Matching&)>& fn,
                               std::size_t max_pairs) {
    const std::vector<HomogeneousPair> pairs = homogeneous_pairs(taylor);
    if (pairs.size() > max_pairs)
        throw guard_error("matching enumeration over " + std::to_string(pairs.size()) +
                          " homogeneous pairs exceeds the limit of " + std::to_string(max_pairs));

    std::map<Monomial, std::vector<HomogeneousPair>> classes;
    for (const HomogeneousPair& p : pairs) classes[taylor.label_of(p.tau)].push_back(p);

    std::vector<std::vector<Matching>> per;
    per.reserve(classes.size());
    for (const auto& [label, class_pairs] : classes) per.push_back(enumerate_class(class_pairs));

    if (per.empty()) {
        fn(Matching{});
        return;
    }

    // Odometer over the per-class solutions, rightmost class fastest.
    std::vector<std::size_t> pos(per.size(), 0);
    while (true) {
        Matching m;
        for (std::size_t c = 0; c < per.size(); ++c)
            m.insert(m.end(), per[c][pos[c]].begin(), per[c][pos[c]].end());
        if (!fn(canonical_matching(std::move(m)))) return;
        std::size_t c = per.size() - 1;
        while (true) {
            if (++pos[c] < per[c].size()) break;
            pos[c] = 0;
            if (c == 0) return;
            --c;
        }
    }
}

EnumerationResult enumerate_maximal_matchings(const LabeledComplex& taylor, std::size_t limit,
                                              std::size_t max_pairs) {
    EnumerationResult out;
    const std::size_t want = limit == SIZE_MAX ? limit : limit + 1;
    for_each_maximal_matching(
        taylor,
        [&](const Matching& m) {
            out.matchings.push_back(m);
            return out.matchings.size() < want;
        },
        max_pairs);
    if (out.matchings.size() > limit) {
        out.matchings.resize(limit);
        out.truncated = true;
    }
    std::sort(out.matchings.begin(), out.matchings.end(), matching_lex_less);
    out.matchings.erase(std::unique(out.matchings.begin(), out.matchings.end()),
                        out.matchings.end());
    return out;
}

}  // namespace morseres
