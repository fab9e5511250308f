#include "morseres/reference_checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "morseres/betti.hpp"
#include "morseres/morse.hpp"
#include "morseres/polyhedral.hpp"

namespace morseres {

namespace {

Monomial mono(int n, std::initializer_list<std::pair<int, int>> factors) {
    std::vector<int> e(n, 0);
    for (const auto& [k, v] : factors) e[k - 1] = v;
    return Monomial(std::move(e));
}

Face fov(std::initializer_list<int> verts) { return face_from_vertices(std::vector<int>(verts)); }

template <class T>
std::string seq_str(const std::vector<T>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ")";
    return out.str();
}

std::string faces_str(const std::vector<Face>& fs) {
    std::string out = "[";
    for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? " " : "") + face_str(fs[i]);
    return out + "]";
}

class Check {
public:
    explicit Check(std::string name) : name_(std::move(name)) {}

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (!detail_.empty()) detail_ += "; ";
        detail_ += what;
    }

    ReferenceResult result() const { return {name_, detail_.empty(), detail_}; }

private:
    std::string name_;
    std::string detail_;
};

ReferenceResult run_one(const std::string& name, const std::function<void(Check&)>& fn) {
    Check c(name);
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    return c.result();
}

void check_xyz_betti(Check& c) {
    const std::vector<long long> tb = total_betti(xyz_square_ideal());
    c.expect(tb == std::vector<long long>{6, 8, 3}, "total Betti " + seq_str(tb) + " != (6, 8, 3)");
}

void check_xyz_scarf(Check& c) {
    const LabeledComplex sc = scarf_complex(xyz_square_ideal());
    const std::vector<long long> fvec = sc.f_vector();
    c.expect(fvec == std::vector<long long>{1, 6, 6}, "f-vector " + seq_str(fvec) + " != (1, 6, 6)");

    std::vector<Face> expected{0};
    for (int v = 1; v <= 6; ++v) expected.push_back(fov({v}));
    for (auto e : {fov({1, 2}), fov({1, 6}), fov({2, 3}), fov({3, 4}), fov({4, 5}), fov({5, 6})})
        expected.push_back(e);
    c.expect(sc.faces() == expected, "faces " + faces_str(sc.faces()) + " are not the hexagon");

    const HomologyProfile h = reduced_homology(sc);
    c.expect(h.betti == std::vector<int>{0, 0, 1},
             "reduced homology " + seq_str(h.betti) + " != (0, 0, 1)");
}

void check_xyz_matching(Check& c) {
    const MonomialIdeal ideal = xyz_square_ideal();
    const LabeledComplex taylor = taylor_complex(ideal);
    const Matching m1 = xyz_square_showcase_matching();
    c.expect(m1.size() == 23, "matching has " + std::to_string(m1.size()) + " edges, not 23");

    c.expect(is_acyclic(taylor, m1).acyclic, "matching has a directed cycle");

    const std::vector<HomogeneousPair> pairs = homogeneous_pairs(taylor);
    c.expect(pairs.size() == 54,
             std::to_string(pairs.size()) + " homogeneous pairs in total, not 54");
    std::set<Face, FaceLess> used;
    for (const HomogeneousPair& p : m1) {
        used.insert(p.sigma);
        used.insert(p.tau);
    }
    bool addable = false;
    for (const HomogeneousPair& p : pairs) {
        if (std::find(m1.begin(), m1.end(), p) != m1.end()) continue;
        if (used.count(p.sigma) || used.count(p.tau)) continue;
        Matching ext = m1;
        ext.push_back(p);
        if (is_acyclic(taylor, canonical_matching(std::move(ext))).acyclic) addable = true;
    }
    c.expect(!addable, "matching is not maximal");

    const MorseComplex mo = morse_complex(taylor, m1);
    const std::vector<long long> fvec = mo.f_vector();
    c.expect(fvec == std::vector<long long>{6, 8, 3},
             "critical f-vector " + seq_str(fvec) + " != (6, 8, 3)");

    std::vector<Face> expected{0};
    for (int v = 1; v <= 6; ++v) expected.push_back(fov({v}));
    for (auto e : {fov({1, 2}), fov({1, 6}), fov({2, 3}), fov({2, 4}), fov({2, 6}), fov({3, 4}),
                   fov({4, 5}), fov({5, 6})})
        expected.push_back(e);
    for (auto t : {fov({1, 2, 6}), fov({2, 3, 4}), fov({4, 5, 6})}) expected.push_back(t);
    c.expect(mo.cells() == expected, "cells " + faces_str(mo.cells()) + " unexpected");

    std::vector<Face> nonsimplex;
    for (std::size_t i = 0; i < mo.size(); ++i)
        if (mo.cells()[i] != 0 && !is_simplex_cell(mo, i)) nonsimplex.push_back(mo.cells()[i]);
    c.expect(nonsimplex == std::vector<Face>{fov({4, 5, 6})},
             "non-simplex cells " + faces_str(nonsimplex) + " != [{4,5,6}]");

    const auto i456 = mo.index_of(fov({4, 5, 6}));
    c.expect(i456.has_value(), "{4,5,6} is not a cell");
    if (i456) {
        std::vector<Face> subs;
        std::vector<long long> coeffs;
        for (std::size_t ci : mo.boundary_of(*i456)) {
            subs.push_back(mo.cells()[mo.covers()[ci].sub]);
            coeffs.push_back(mo.covers()[ci].coeff);
        }
        const std::vector<Face> want{fov({2, 4}), fov({2, 6}), fov({4, 5}), fov({5, 6})};
        c.expect(subs == want, "covers of {4,5,6} are " + faces_str(subs));
        c.expect(coeffs == std::vector<long long>{1, -1, 1, 1},
                 "cover coefficients of {4,5,6} are " + seq_str(coeffs));
    }

    c.expect(check_polyhedral(mo).status == PolyhedralStatus::polyhedral,
             "complex did not certify polyhedral");
    c.expect(is_minimal_support(mo).minimal, "a cover pair shares its label");

    const ChainComplex ch = mo.chain();
    for (std::size_t d = 1; d < ch.boundaries.size(); ++d)
        c.expect(is_zero(multiply(ch.boundaries[d - 1], ch.boundaries[d])),
                 "boundary does not square to zero at " + std::to_string(d));
}

void check_twelve_scarf(Check& c) {
    const LabeledComplex sc = scarf_complex(twelve_vars_ideal());
    const std::vector<long long> fvec = sc.f_vector();
    c.expect(fvec == std::vector<long long>{1, 6, 15, 17, 6},
             "f-vector " + seq_str(fvec) + " != (1, 6, 15, 17, 6)");

    const std::vector<Face> facets = sc.facets();
    const std::vector<Face> want{fov({2, 3, 5}),    fov({1, 2, 4, 6}), fov({1, 2, 5, 6}),
                                 fov({1, 3, 4, 5}), fov({1, 3, 4, 6}), fov({1, 4, 5, 6}),
                                 fov({2, 3, 4, 6})};
    c.expect(facets == want, "facets " + faces_str(facets) + " unexpected");

    const HomologyProfile h = reduced_homology(sc);
    c.expect(h.betti == std::vector<int>{0, 0, 0, 1, 0},
             "reduced homology " + seq_str(h.betti) + " != (0, 0, 0, 1, 0)");
}

void check_twelve_betti(Check& c) {
    const MonomialIdeal ideal = twelve_vars_ideal();
    const std::vector<long long> tb = total_betti(ideal);
    c.expect(tb == std::vector<long long>{6, 15, 17, 7},
             "total Betti " + seq_str(tb) + " != (6, 15, 17, 7)");

    std::vector<long long> quotient{1};
    quotient.insert(quotient.end(), tb.begin(), tb.end());
    c.expect(quotient == std::vector<long long>{1, 6, 15, 17, 7},
             "quotient Betti " + seq_str(quotient) + " != (1, 6, 15, 17, 7)");

    // Each Scarf face accounts for one Betti entry at its (dimension,
    // label); exactly one entry must remain unaccounted for.
    const LabeledComplex sc = scarf_complex(ideal);
    std::map<std::pair<int, Monomial>, int> from_scarf;
    for (std::size_t i = 0; i < sc.size(); ++i) {
        const Face f = sc.faces()[i];
        if (f != 0) ++from_scarf[{face_dim(f), sc.label(i)}];
    }
    std::vector<BettiEntry> extra;
    for (const BettiEntry& e : multigraded_betti(ideal)) {
        const auto it = from_scarf.find({e.index, e.degree});
        if (it == from_scarf.end() || it->second != e.value) extra.push_back(e);
    }
    const Monomial all11 = mono(12, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1},
                                     {8, 1}, {9, 1}, {10, 1}, {11, 1}});
    c.expect(extra.size() == 1, std::to_string(extra.size()) + " entries beyond the Scarf data");
    if (extra.size() == 1)
        c.expect(extra[0].index == 3 && extra[0].degree == all11 && extra[0].value == 1,
                 "extra entry is (" + std::to_string(extra[0].index) + ", " +
                     extra[0].degree.str() + ", " + std::to_string(extra[0].value) + ")");
}

void check_twelve_minimal_pairs(Check& c) {
    const LabeledComplex taylor = taylor_complex(twelve_vars_ideal());
    c.expect(homogeneous_pairs(taylor).size() == 12, "homogeneous pair count is not 12");

    const std::vector<HomogeneousPair> mins = minimal_homogeneous_pairs(taylor);
    const std::vector<HomogeneousPair> want{{fov({1, 2, 3}), fov({1, 2, 3, 4})},
                                            {fov({2, 4, 5}), fov({1, 2, 4, 5})},
                                            {fov({3, 5, 6}), fov({3, 4, 5, 6})},
                                            {fov({2, 3, 5, 6}), fov({1, 2, 3, 5, 6})}};
    std::string got;
    for (const HomogeneousPair& p : mins) got += face_str(p.sigma) + "->" + face_str(p.tau) + " ";
    c.expect(mins == want, "minimal pairs " + got + "unexpected");
}

// The six matched edges forced into every maximal matching of the
// twelve-variable ideal: their label classes are singletons.
Matching forced_pairs() {
    return canonical_matching({{fov({1, 2, 3}), fov({1, 2, 3, 4})},
                               {fov({1, 2, 3, 6}), fov({1, 2, 3, 4, 6})},
                               {fov({2, 4, 5}), fov({1, 2, 4, 5})},
                               {fov({2, 4, 5, 6}), fov({1, 2, 4, 5, 6})},
                               {fov({3, 5, 6}), fov({3, 4, 5, 6})},
                               {fov({1, 3, 5, 6}), fov({1, 3, 4, 5, 6})}});
}

// Cells of the Morse complex that are not Scarf faces. Used by the
// enumeration checks; every matching here leaves exactly one extra cell.
std::vector<Face> extra_cells(const MorseComplex& mo, const LabeledComplex& sc) {
    std::vector<Face> out;
    for (Face f : mo.cells())
        if (!sc.contains(f)) out.push_back(f);
    return out;
}

void check_twelve_enumeration(Check& c) {
    const LabeledComplex taylor = taylor_complex(twelve_vars_ideal());
    const LabeledComplex sc = scarf_complex(twelve_vars_ideal());
    const EnumerationResult er = enumerate_maximal_matchings(taylor);
    c.expect(!er.truncated, "enumeration truncated");
    c.expect(er.matchings.size() == 4,
             std::to_string(er.matchings.size()) + " maximal matchings, not 4");

    const Matching m0 = forced_pairs();
    const Face cell_a = fov({1, 2, 3, 5});
    const Face cell_b = fov({2, 3, 4, 5});
    std::map<Face, int, FaceLess> extra_count;
    for (const Matching& m : er.matchings) {
        c.expect(m.size() == 9, "matching has " + std::to_string(m.size()) + " edges, not 9");
        for (const HomogeneousPair& p : m0)
            c.expect(std::find(m.begin(), m.end(), p) != m.end(),
                     "forced pair " + face_str(p.sigma) + "->" + face_str(p.tau) + " missing");

        const MorseComplex mo = morse_complex(taylor, m);
        const std::vector<long long> fvec = mo.f_vector();
        c.expect(fvec == std::vector<long long>{6, 15, 17, 7},
                 "critical f-vector " + seq_str(fvec) + " != (6, 15, 17, 7)");

        for (Face f : sc.faces())
            c.expect(mo.index_of(f).has_value(), "Scarf face " + face_str(f) + " not critical");
        const std::vector<Face> extra = extra_cells(mo, sc);
        c.expect(extra.size() == 1 && (extra[0] == cell_a || extra[0] == cell_b),
                 "extra critical cells " + faces_str(extra) + " unexpected");
        if (extra.size() == 1) ++extra_count[extra[0]];
    }
    c.expect(extra_count[cell_a] == 2 && extra_count[cell_b] == 2,
             "extra cells do not split two against two");
}

void check_twelve_polyhedral(Check& c) {
    const LabeledComplex taylor = taylor_complex(twelve_vars_ideal());
    const LabeledComplex sc = scarf_complex(twelve_vars_ideal());
    const EnumerationResult er = enumerate_maximal_matchings(taylor);
    c.expect(er.matchings.size() == 4, "expected 4 matchings to test");

    const Face cell_a = fov({1, 2, 3, 5});
    for (const Matching& m : er.matchings) {
        const MorseComplex mo = morse_complex(taylor, m);
        const PolyhedralVerdict v = check_polyhedral(mo);
        c.expect(v.status == PolyhedralStatus::not_polyhedral, "verdict is not not_polyhedral");

        const std::vector<Face> extra = extra_cells(mo, sc);
        const std::vector<Face> want = (extra.size() == 1 && extra[0] == cell_a)
                                           ? std::vector<Face>{fov({1, 4}), fov({1, 5})}
                                           : std::vector<Face>{fov({1, 4}), fov({3, 4})};
        bool found = false;
        for (const MeetWitness& w : v.witnesses)
            if (w.maximal_common == want) found = true;
        c.expect(found, "no meet failure with maximal common cells " + faces_str(want));
    }
}

void check_polytope_screen(Check& c) {
    const PolytopeCheck a = candidate_3polytope_check(5, 10, 8);
    c.expect(!a.ok && !a.steinitz_ok && !a.h_nonnegative,
             "(5, 10, 8) not rejected on both grounds");
    c.expect(a.expected_f1 == 9 && a.expected_f2 == 6,
             "expected counts for f0 = 5 are (" + std::to_string(a.expected_f1) + ", " +
                 std::to_string(a.expected_f2) + "), not (9, 6)");
    c.expect(a.h == std::vector<long long>{1, 1, 1, -1, -1},
             "h-vector of (1, 5, 10, 8, 1) is " + seq_str(a.h));

    const PolytopeCheck b = candidate_3polytope_check(4, 6, 4);
    c.expect(b.ok, "(4, 6, 4) rejected");
    c.expect(b.h == std::vector<long long>{1, 0, 0, 0, 0},
             "h-vector of (1, 4, 6, 4, 1) is " + seq_str(b.h));

    const PolytopeCheck d = candidate_3polytope_check(5, 9, 6);
    c.expect(d.steinitz_ok && !d.ok, "(5, 9, 6) must pass the count relations but fail overall");
    c.expect(d.h == std::vector<long long>{1, 1, 0, -1, 0},
             "h-vector of (1, 5, 9, 6, 1) is " + seq_str(d.h));
}

}  // namespace

std::vector<ReferenceResult> run_reference_checks() {
    return {
        run_one("xyz-square betti numbers", check_xyz_betti),
        run_one("xyz-square scarf hexagon", check_xyz_scarf),
        run_one("xyz-square showcase matching", check_xyz_matching),
        run_one("twelve-vars scarf complex", check_twelve_scarf),
        run_one("twelve-vars betti numbers", check_twelve_betti),
        run_one("twelve-vars minimal pairs", check_twelve_minimal_pairs),
        run_one("twelve-vars matching enumeration", check_twelve_enumeration),
        run_one("twelve-vars polyhedral verdicts", check_twelve_polyhedral),
        run_one("three-polytope face-count screen", check_polytope_screen),
    };
}

bool all_pass(const std::vector<ReferenceResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const ReferenceResult& r) { return r.pass; });
}

MonomialIdeal xyz_square_ideal() {
    return MonomialIdeal(3, {mono(3, {{1, 2}}), mono(3, {{1, 1}, {2, 1}}), mono(3, {{2, 2}}),
                             mono(3, {{2, 1}, {3, 1}}), mono(3, {{3, 2}}),
                             mono(3, {{1, 1}, {3, 1}})});
}

MonomialIdeal twelve_vars_ideal() {
    return MonomialIdeal(
        12, {mono(12, {{3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}}),
             mono(12, {{2, 1}, {3, 1}, {10, 1}, {11, 1}}),
             mono(12, {{1, 1}, {6, 1}, {9, 1}}),
             mono(12, {{1, 1}, {2, 1}, {4, 1}, {5, 1}, {6, 1}, {10, 1}}),
             mono(12, {{4, 1}, {7, 1}, {8, 1}, {10, 1}}),
             mono(12, {{2, 1}, {5, 1}, {12, 1}})});
}

Matching xyz_square_showcase_matching() {
    return canonical_matching({
        {fov({1, 3}), fov({1, 2, 3})},
        {fov({1, 4}), fov({1, 2, 4})},
        {fov({1, 5}), fov({1, 5, 6})},
        {fov({2, 5}), fov({2, 4, 5})},
        {fov({3, 5}), fov({3, 4, 5})},
        {fov({3, 6}), fov({2, 3, 6})},
        {fov({4, 6}), fov({2, 4, 6})},
        {fov({1, 2, 5}), fov({1, 2, 5, 6})},
        {fov({1, 3, 4}), fov({1, 2, 3, 4})},
        {fov({1, 3, 5}), fov({1, 2, 3, 5})},
        {fov({1, 3, 6}), fov({1, 2, 3, 6})},
        {fov({1, 4, 5}), fov({1, 4, 5, 6})},
        {fov({1, 4, 6}), fov({1, 2, 4, 6})},
        {fov({2, 3, 5}), fov({2, 3, 4, 5})},
        {fov({2, 5, 6}), fov({2, 4, 5, 6})},
        {fov({3, 4, 6}), fov({2, 3, 4, 6})},
        {fov({3, 5, 6}), fov({3, 4, 5, 6})},
        {fov({1, 2, 4, 5}), fov({1, 2, 4, 5, 6})},
        {fov({1, 3, 4, 5}), fov({1, 2, 3, 4, 5})},
        {fov({1, 3, 4, 6}), fov({1, 2, 3, 4, 6})},
        {fov({1, 3, 5, 6}), fov({1, 2, 3, 5, 6})},
        {fov({2, 3, 5, 6}), fov({2, 3, 4, 5, 6})},
        {fov({1, 3, 4, 5, 6}), fov({1, 2, 3, 4, 5, 6})},
    });
}

}  // namespace morseres
