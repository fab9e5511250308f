#include <doctest.h>

#include <algorithm>
#include <set>

#include "morseres/morse.hpp"
#include "helpers.hpp"

using namespace morseres;

namespace {

const std::vector<Face> m1_cells = {
    0,
    fov({1}), fov({2}), fov({3}), fov({4}), fov({5}), fov({6}),
    fov({1, 2}), fov({1, 6}), fov({2, 3}), fov({2, 4}), fov({2, 6}),
    fov({3, 4}), fov({4, 5}), fov({5, 6}),
    fov({1, 2, 6}), fov({2, 3, 4}), fov({4, 5, 6}),
};

MorseComplex showcase() {
    return morse_complex(taylor_complex(xyz_square_ideal()), xyz_square_showcase_matching());
}

}  // namespace

TEST_CASE("the showcase matching collapses the Taylor complex to 17 cells") {
    MorseComplex mc = showcase();
    CHECK(mc.cells() == m1_cells);
    CHECK(mc.f_vector() == std::vector<long long>{6, 8, 3});
    CHECK(mc.top_dim() == 2);
    CHECK(mc.size() == 18);
    CHECK(mc.index_of(fov({4, 5, 6})) == std::size_t{17});
    CHECK_FALSE(mc.index_of(fov({1, 3})).has_value());
    CHECK(mc.label(17) == mono(3, {{1, 1}, {2, 1}, {3, 2}}));
    CHECK(mc.label(0).is_one());
}

TEST_CASE("the hexagonal Scarf complex survives inside the collapse") {
    MorseComplex mc = showcase();
    LabeledComplex s = scarf_complex(xyz_square_ideal());
    for (Face f : s.faces()) CHECK(mc.index_of(f).has_value());
}

TEST_CASE("gradient paths give the non-simplex cell four boundary edges") {
    MorseComplex mc = showcase();
    const std::size_t cell = *mc.index_of(fov({4, 5, 6}));

    std::vector<std::pair<Face, long long>> got;
    for (std::size_t ci : mc.boundary_of(cell)) {
        const MorseComplex::Cover& cv = mc.covers()[ci];
        CHECK(cv.super == cell);
        got.push_back({mc.cells()[cv.sub], cv.coeff});
    }
    std::sort(got.begin(), got.end(),
              [](const auto& a, const auto& b) { return face_less(a.first, b.first); });
    const std::vector<std::pair<Face, long long>> expected = {
        {fov({2, 4}), 1}, {fov({2, 6}), -1}, {fov({4, 5}), 1}, {fov({5, 6}), 1}};
    CHECK(got == expected);
}

TEST_CASE("simplex flags and cover sets agree") {
    MorseComplex mc = showcase();
    CHECK_FALSE(mc.simplex_flag(*mc.index_of(fov({4, 5, 6}))));
    CHECK(mc.simplex_flag(*mc.index_of(fov({1, 2, 6}))));
    CHECK(mc.simplex_flag(*mc.index_of(fov({2, 3, 4}))));
    CHECK(mc.simplex_flag(0));

    // for a simplex cell the covers are exactly the facets
    for (std::size_t i = 1; i < mc.size(); ++i) {
        if (!mc.simplex_flag(i)) continue;
        Face c = mc.cells()[i];
        std::set<Face> covers;
        for (std::size_t ci : mc.boundary_of(i)) covers.insert(mc.cells()[mc.covers()[ci].sub]);
        std::set<Face> facets;
        for (int v : face_vertices(c)) facets.insert(c & ~(Face(1) << (v - 1)));
        CAPTURE(face_str(c));
        CHECK(covers == facets);
    }
}

TEST_CASE("down sets follow the cover relation") {
    MorseComplex mc = showcase();
    const std::size_t cell = *mc.index_of(fov({4, 5, 6}));
    // cells 2,4,5,6 are the vertices {2},{4},{5},{6}; 10,11,13,14 the edges
    // {2,4},{2,6},{4,5},{5,6}
    CHECK(mc.down_set(cell) ==
          std::vector<std::size_t>{2, 4, 5, 6, 10, 11, 13, 14, cell});
    CHECK(mc.down_set(1) == std::vector<std::size_t>{1});
    CHECK(mc.down_set(0).empty());
}

TEST_CASE("coboundary lists the covers from below") {
    MorseComplex mc = showcase();
    const std::size_t edge = *mc.index_of(fov({2, 4}));
    std::set<Face> ups;
    for (std::size_t ci : mc.coboundary_of(edge)) {
        CHECK(mc.covers()[ci].sub == edge);
        ups.insert(mc.cells()[mc.covers()[ci].super]);
    }
    CHECK(ups == std::set<Face>{fov({2, 3, 4}), fov({4, 5, 6})});
}

TEST_CASE("boundary maps of the collapsed complex square to zero") {
    MorseComplex mc = showcase();
    BoundaryMatrix aug = mc.boundary(0);
    REQUIRE(aug.m.rows() == 1);
    REQUIRE(aug.m.cols() == 6);
    for (int j = 0; j < 6; ++j) CHECK(aug.m.at(0, j) == 1);

    ChainComplex c = mc.chain();
    CHECK(c.cells == std::vector<int>{1, 6, 8, 3});
    for (std::size_t d = 1; d < c.boundaries.size(); ++d)
        CHECK(is_zero(multiply(c.boundaries[d - 1], c.boundaries[d])));
    CHECK(reduced_homology(mc).trivial());
}

TEST_CASE("restricted strands of the showcase collapse are exact") {
    MorseComplex mc = showcase();
    for (const Monomial& m : lcm_lattice(mc.ideal())) {
        CAPTURE(m.str());
        CHECK(reduced_homology(mc.chain_restricted(m)).trivial());
    }
}

TEST_CASE("the showcase collapse is minimal") {
    MorseComplex mc = showcase();
    MinimalityResult r = is_minimal_support(mc);
    CHECK(r.minimal);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("the empty matching reproduces the Taylor complex") {
    LabeledComplex t = taylor_complex(xyz_square_ideal());
    MorseComplex mc = morse_complex(t, {});
    CHECK(mc.cells() == t.faces());
    CHECK(mc.f_vector() == std::vector<long long>{6, 15, 20, 15, 6, 1});
    for (std::size_t i = 0; i < mc.size(); ++i) CHECK(mc.simplex_flag(i));

    BoundaryMatrix got = mc.boundary(2);
    BoundaryMatrix want = boundary_matrix(t, 2);
    REQUIRE(got.m.rows() == want.m.rows());
    REQUIRE(got.m.cols() == want.m.cols());
    CHECK(got.row_cells == want.row_cells);
    CHECK(got.col_cells == want.col_cells);
    for (int i = 0; i < got.m.rows(); ++i)
        for (int j = 0; j < got.m.cols(); ++j) CHECK(got.m.at(i, j) == want.m.at(i, j));

    MinimalityResult r = is_minimal_support(mc);
    CHECK_FALSE(r.minimal);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->first == fov({1, 3}));
    CHECK(r.witness->second == fov({1, 2, 3}));
}

TEST_CASE("morse_fvector shortcut") {
    LabeledComplex t = taylor_complex(xyz_square_ideal());
    CHECK(morse_fvector(t, xyz_square_showcase_matching()) == std::vector<long long>{6, 8, 3});
}

TEST_CASE("collapsing the six-generator ideal keeps Scarf plus one cell") {
    LabeledComplex t = taylor_complex(twelve_vars_ideal());
    LabeledComplex s = scarf_complex(twelve_vars_ideal());
    EnumerationResult res = enumerate_maximal_matchings(t);
    REQUIRE(res.matchings.size() == 4);

    const Face extra_a = fov({2, 3, 4, 5});
    const Face extra_b = fov({1, 2, 3, 5});
    int count_a = 0, count_b = 0;
    for (const Matching& m : res.matchings) {
        MorseComplex mc = morse_complex(t, m);
        CHECK(mc.f_vector() == std::vector<long long>{6, 15, 17, 7});

        std::set<Face> crit(mc.cells().begin(), mc.cells().end());
        std::set<Face> scarf_faces(s.faces().begin(), s.faces().end());
        std::vector<Face> extras;
        for (Face f : crit)
            if (!scarf_faces.count(f)) extras.push_back(f);
        REQUIRE(extras.size() == 1);
        const Face extra = extras[0];
        if (extra == extra_a) ++count_a;
        if (extra == extra_b) ++count_b;

        std::set<Face> covers;
        for (std::size_t ci : mc.boundary_of(*mc.index_of(extra)))
            covers.insert(mc.cells()[mc.covers()[ci].sub]);
        if (extra == extra_a) {
            CHECK(covers == std::set<Face>{fov({1, 2, 4}), fov({1, 2, 5}), fov({1, 4, 5}),
                                           fov({2, 3, 4}), fov({2, 3, 5}), fov({3, 4, 5})});
            CHECK_FALSE(covers.count(fov({1, 3, 4})));
        } else {
            CHECK(covers == std::set<Face>{fov({1, 2, 4}), fov({1, 2, 5}), fov({1, 3, 4}),
                                           fov({1, 3, 5}), fov({2, 3, 4}), fov({2, 3, 5})});
            CHECK_FALSE(covers.count(fov({1, 4, 5})));
        }

        ChainComplex c = mc.chain();
        for (std::size_t d = 1; d < c.boundaries.size(); ++d)
            CHECK(is_zero(multiply(c.boundaries[d - 1], c.boundaries[d])));
    }
    CHECK(count_a == 2);
    CHECK(count_b == 2);
}

TEST_CASE("building from a cyclic matching fails") {
    LabeledComplex t = taylor_complex(quad_ideal());
    CHECK_THROWS_AS(morse_complex(t, quad_cyclic_matching()), invalid_error);
    CHECK_THROWS_AS(morse_complex(t, {{fov({1}), fov({1, 2, 3})}}), invalid_error);
}

TEST_CASE("collapses of the one-class ideal are minimal resolutions") {
    LabeledComplex t = taylor_complex(quad_ideal());
    EnumerationResult res = enumerate_maximal_matchings(t);
    REQUIRE(res.matchings.size() == 64);
    for (std::size_t k = 0; k < res.matchings.size(); k += 9) {
        MorseComplex mc = morse_complex(t, res.matchings[k]);
        CHECK(mc.f_vector() == std::vector<long long>{4, 3});
        CHECK(is_minimal_support(mc).minimal);
        CHECK(reduced_homology(mc).trivial());
    }
}
