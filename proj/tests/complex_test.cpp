#include <doctest.h>

#include <algorithm>

#include "morseres/complex.hpp"
#include "smith_oracle.hpp"
#include "helpers.hpp"

using namespace morseres;

TEST_CASE("taylor complex of the degree-two ideal in three variables") {
    LabeledComplex t = taylor_complex(xyz_square_ideal());
    CHECK(t.size() == 64);
    CHECK(t.top_dim() == 5);
    CHECK(t.f_vector() == std::vector<long long>{1, 6, 15, 20, 15, 6, 1});
    CHECK(t.facets() == std::vector<Face>{fov({1, 2, 3, 4, 5, 6})});
    CHECK(t.label(0).is_one());
    CHECK(t.label_of(fov({2, 4, 6})) == mono(3, {{1, 1}, {2, 1}, {3, 1}}));
    CHECK(t.contains(fov({1, 5})));
    CHECK(t.index_of(0) == std::size_t{0});
    // the full simplex is contractible
    CHECK(reduced_homology(t).trivial());
}

TEST_CASE("faces come back in canonical order") {
    LabeledComplex t = taylor_complex(xyz_square_ideal());
    CHECK(std::is_sorted(t.faces().begin(), t.faces().end(), FaceLess{}));
    CHECK(t.faces()[0] == Face{0});
    CHECK(t.faces()[1] == fov({1}));
    CHECK(t.faces()[7] == fov({1, 2}));
    CHECK_FALSE(t.contains(fov({7})));
    CHECK_THROWS_AS(t.label_of(fov({7})), invalid_error);
}

TEST_CASE("scarf complex of the degree-two ideal is a hexagon") {
    LabeledComplex s = scarf_complex(xyz_square_ideal());
    CHECK(s.f_vector() == std::vector<long long>{1, 6, 6});
    std::vector<Face> edges = {fov({1, 2}), fov({1, 6}), fov({2, 3}),
                               fov({3, 4}), fov({4, 5}), fov({5, 6})};
    CHECK(s.facets() == edges);
    for (Face e : edges) CHECK(s.contains(e));
    CHECK_FALSE(s.contains(fov({2, 4})));

    HomologyProfile h = reduced_homology(s);
    CHECK(h.betti == std::vector<int>{0, 0, 1});
}

TEST_CASE("scarf complex of the six-generator showcase ideal") {
    LabeledComplex s = scarf_complex(twelve_vars_ideal());
    CHECK(s.f_vector() == std::vector<long long>{1, 6, 15, 17, 6});
    CHECK(s.facets() == std::vector<Face>{
        fov({2, 3, 5}),
        fov({1, 2, 4, 6}), fov({1, 2, 5, 6}), fov({1, 3, 4, 5}),
        fov({1, 3, 4, 6}), fov({1, 4, 5, 6}), fov({2, 3, 4, 6})});
    HomologyProfile h = reduced_homology(s);
    CHECK(h.betti == std::vector<int>{0, 0, 0, 1, 0});
}

TEST_CASE("scarf complex with non-unique pair labels keeps only vertices") {
    LabeledComplex s = scarf_complex(quad_ideal());
    CHECK(s.f_vector() == std::vector<long long>{1, 4});
    CHECK(reduced_homology(s).betti == std::vector<int>{0, 3});
}

TEST_CASE("scarf complex of a principal ideal is a point") {
    MonomialIdeal one_gen(2, {mono(2, {{1, 1}, {2, 2}})});
    LabeledComplex s = scarf_complex(one_gen);
    CHECK(s.f_vector() == std::vector<long long>{1, 1});
    CHECK(reduced_homology(s).trivial());
}

TEST_CASE("boundary matrices carry the simplicial signs") {
    LabeledComplex t = taylor_complex(xyz_square_ideal());
    BoundaryMatrix d1 = boundary_matrix(t, 1);
    REQUIRE(d1.m.rows() == 6);
    REQUIRE(d1.m.cols() == 15);
    // dropping vertex 1 (position 0) lands on {2} with sign +1, dropping
    // vertex 2 (position 1) lands on {1} with sign -1
    int col12 = static_cast<int>(std::find(d1.col_cells.begin(), d1.col_cells.end(), fov({1, 2})) -
                                 d1.col_cells.begin());
    int row1 = static_cast<int>(std::find(d1.row_cells.begin(), d1.row_cells.end(), fov({1})) -
                                d1.row_cells.begin());
    int row2 = static_cast<int>(std::find(d1.row_cells.begin(), d1.row_cells.end(), fov({2})) -
                                d1.row_cells.begin());
    CHECK(d1.m.at(row1, col12) == -1);
    CHECK(d1.m.at(row2, col12) == 1);

    BoundaryMatrix d0 = boundary_matrix(t, 0);
    REQUIRE(d0.m.rows() == 1);
    for (int j = 0; j < d0.m.cols(); ++j) CHECK(d0.m.at(0, j) == 1);

    CHECK_THROWS_AS(boundary_matrix(t, 6), invalid_error);
    CHECK_THROWS_AS(boundary_matrix(t, -1), invalid_error);
}

TEST_CASE("pinned boundary ranks") {
    CHECK(rational_rank(boundary_matrix(scarf_complex(xyz_square_ideal()), 1).m) == 5);
    BoundaryMatrix d2 = boundary_matrix(taylor_complex(xyz_square_ideal()), 2);
    REQUIRE(d2.m.rows() == 15);
    REQUIRE(d2.m.cols() == 20);
    CHECK(rational_rank(d2.m) == 10);
    CHECK(rational_rank(d2.m) == oracle_rank(d2.m));
}

TEST_CASE("chain boundary maps compose to zero") {
    ChainComplex c = taylor_complex(xyz_square_ideal()).chain();
    REQUIRE(c.boundaries.size() == 6);
    for (std::size_t d = 1; d < c.boundaries.size(); ++d)
        CHECK(is_zero(multiply(c.boundaries[d - 1], c.boundaries[d])));
}

TEST_CASE("complex_from_faces closes downward") {
    MonomialIdeal ideal = xyz_square_ideal();
    LabeledComplex c = complex_from_faces(ideal, {fov({1, 2, 3})});
    CHECK(c.f_vector() == std::vector<long long>{1, 3, 3, 1});
    CHECK(c.contains(fov({1, 3})));
    CHECK(reduced_homology(c).trivial());
}

TEST_CASE("taylor guard") {
    std::vector<Monomial> gens;
    for (int i = 1; i <= 13; ++i) gens.push_back(mono(13, {{i, 2}}));
    MonomialIdeal big(13, std::move(gens));
    CHECK_THROWS_AS(taylor_complex(big, 12), guard_error);
    CHECK(taylor_complex(big, 13).size() == std::size_t{1} << 13);
}
