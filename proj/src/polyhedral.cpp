#include "morseres/polyhedral.hpp"

#include <algorithm>
#include <iterator>

namespace morseres {

MeetResult meet_check(const MorseComplex& complex, std::size_t a, std::size_t b) {
    const std::vector<std::size_t> da = complex.down_set(a);
    const std::vector<std::size_t> db = complex.down_set(b);
    std::vector<std::size_t> common;
    std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(common));

    MeetResult out;
    if (common.empty()) {
        out.status = MeetStatus::empty;
        return out;
    }
    for (std::size_t c : common) {
        bool below_other = false;
        for (std::size_t d : common) {
            if (d == c) continue;
            const std::vector<std::size_t> dd = complex.down_set(d);
            if (std::binary_search(dd.begin(), dd.end(), c)) {
                below_other = true;
                break;
            }
        }
        if (!below_other) out.maximal_common.push_back(complex.cells()[c]);
    }
    out.status = out.maximal_common.size() == 1 ? MeetStatus::face : MeetStatus::multiple_maximal;
    return out;
}

bool is_simplex_cell(const MorseComplex& complex, std::size_t cell) {
    const Face c = complex.cells()[cell];
    const std::vector<std::size_t> ds = complex.down_set(cell);
    if (ds.size() != (std::size_t(1) << face_size(c)) - 1) return false;
    for (std::size_t i : ds)
        if (!face_subset(complex.cells()[i], c)) return false;
    // distinct cells + subsets of c + full count: ds is exactly the
    // non-empty subsets of c. Now the order must agree with inclusion.
    for (std::size_t bi : ds) {
        const std::vector<std::size_t> dsb = complex.down_set(bi);
        for (std::size_t ai : ds) {
            if (ai == bi) continue;
            const bool incl = face_subset(complex.cells()[ai], complex.cells()[bi]);
            const bool below = std::binary_search(dsb.begin(), dsb.end(), ai);
            if (incl != below) return false;
        }
    }
    return true;
}

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

PolytopeCheck candidate_3polytope_check(long long f0, long long f1, long long f2) {
    PolytopeCheck out;
    out.expected_f1 = 3 * f0 - 6;
    out.expected_f2 = 2 * f0 - 4;
    out.steinitz_ok = f1 == out.expected_f1 && f2 == out.expected_f2;

    const long long fv[5] = {1, f0, f1, f2, 1};
    out.h.assign(5, 0);
    for (int k = 0; k <= 4; ++k) {
        long long acc = 0;
        for (int i = 0; i <= k; ++i) {
            const long long sign = ((k - i) % 2 == 0) ? 1 : -1;
            acc += sign * binomial(4 - i, k - i) * fv[i];
        }
        out.h[k] = acc;
    }
    out.h_nonnegative = std::all_of(out.h.begin(), out.h.end(), [](long long x) { return x >= 0; });

    out.ok = out.steinitz_ok && out.h_nonnegative;
    if (!out.steinitz_ok)
        out.reason = "face counts violate f1 = 3 f0 - 6, f2 = 2 f0 - 4";
    else if (!out.h_nonnegative)
        out.reason = "h-vector has a negative entry";
    return out;
}

PolyhedralVerdict check_polyhedral(const MorseComplex& complex) {
    PolyhedralVerdict out;

    std::vector<std::size_t> cells;
    for (std::size_t i = 0; i < complex.size(); ++i)
        if (complex.cells()[i] != 0) cells.push_back(i);

    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            const MeetResult r = meet_check(complex, cells[i], cells[j]);
            if (r.status == MeetStatus::multiple_maximal)
                out.witnesses.push_back(
                    {complex.cells()[cells[i]], complex.cells()[cells[j]], r.maximal_common});
        }
    }
    if (!out.witnesses.empty()) {
        out.status = PolyhedralStatus::not_polyhedral;
        return out;
    }

    auto has_cover = [&](std::size_t sub, std::size_t super) {
        for (std::size_t ci : complex.boundary_of(super))
            if (complex.covers()[ci].sub == sub) return true;
        return false;
    };

    for (std::size_t c : cells) {
        if (is_simplex_cell(complex, c)) continue;
        const int d = face_dim(complex.cells()[c]);
        std::vector<std::size_t> ds = complex.down_set(c);
        ds.erase(std::remove(ds.begin(), ds.end(), c), ds.end());

        if (d == 2) {
            // Boundary must look like a polygon: every edge below has two
            // vertex covers and every vertex lies under exactly two edges.
            std::vector<std::size_t> vs, es;
            for (std::size_t x : ds) {
                if (face_size(complex.cells()[x]) == 1) vs.push_back(x);
                if (face_size(complex.cells()[x]) == 2) es.push_back(x);
            }
            bool good = es.size() == vs.size();
            std::vector<int> degree(vs.size(), 0);
            for (std::size_t e : es) {
                int covered = 0;
                for (std::size_t k = 0; k < vs.size(); ++k) {
                    if (has_cover(vs[k], e)) {
                        ++covered;
                        ++degree[k];
                    }
                }
                if (covered != 2) good = false;
            }
            for (int dg : degree)
                if (dg != 2) good = false;
            if (!good) out.irregular_cells.push_back(complex.cells()[c]);
            continue;
        }

        if (d == 3) {
            std::vector<std::size_t> two;
            for (std::size_t x : ds)
                if (face_size(complex.cells()[x]) == 3) two.push_back(x);
            const bool faces_simplex = std::all_of(two.begin(), two.end(), [&](std::size_t x) {
                return is_simplex_cell(complex, x);
            });
            if (!faces_simplex) {
                out.uncertified_cells.push_back(complex.cells()[c]);
                continue;
            }
            long long f0 = 0, f1 = 0;
            for (std::size_t x : ds) {
                if (face_size(complex.cells()[x]) == 1) ++f0;
                if (face_size(complex.cells()[x]) == 2) ++f1;
            }
            if (!candidate_3polytope_check(f0, f1, static_cast<long long>(two.size())).ok)
                out.irregular_cells.push_back(complex.cells()[c]);
            continue;
        }

        out.uncertified_cells.push_back(complex.cells()[c]);
    }

    if (!out.irregular_cells.empty())
        out.status = PolyhedralStatus::not_polyhedral;
    else if (!out.uncertified_cells.empty())
        out.status = PolyhedralStatus::inconclusive;
    else
        out.status = PolyhedralStatus::polyhedral;
    return out;
}

bool exists_polyhedral_maximal_matching(const MonomialIdeal& ideal, int max_gens) {
    if (ideal.ngens() > max_gens)
        throw guard_error("polyhedral matching search over " + std::to_string(ideal.ngens()) +
                          " generators exceeds the limit of " + std::to_string(max_gens));
    const LabeledComplex taylor = taylor_complex(ideal);
    bool found = false;
    for_each_maximal_matching(taylor, [&](const Matching& m) {
        const PolyhedralVerdict v = check_polyhedral(morse_complex(taylor, m));
        if (v.status == PolyhedralStatus::polyhedral) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace morseres
