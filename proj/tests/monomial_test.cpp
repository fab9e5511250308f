#include <doctest.h>

#include "morseres/monomial.hpp"
#include "morseres/util.hpp"
#include "helpers.hpp"

using namespace morseres;

TEST_CASE("monomial basics") {
    Monomial one(3);
    CHECK(one.is_one());
    CHECK(one.degree() == 0);
    CHECK(one.str() == "1");

    Monomial m({2, 0, 1});
    CHECK(m.nvars() == 3);
    CHECK(m.exp(1) == 2);
    CHECK(m.exp(2) == 0);
    CHECK(m.exp(3) == 1);
    CHECK(m.degree() == 3);
    CHECK_FALSE(m.is_one());
    CHECK(m.str() == "x1^2*x3");
    CHECK(mono(4, {{2, 1}, {4, 3}}).str() == "x2*x4^3");
}

TEST_CASE("monomial order is the exponent vector order") {
    // Sorting by exponent vectors is what fixes the label class order of the
    // matching enumeration, so pin the direction.
    CHECK(Monomial({0, 0, 2}) < Monomial({0, 1, 1}));
    CHECK(Monomial({0, 1, 1}) < Monomial({1, 0, 0}));
    CHECK(Monomial({1, 0, 0}) == mono(3, {{1, 1}}));
    CHECK_FALSE(Monomial({1, 0, 0}) < Monomial({1, 0, 0}));
}

TEST_CASE("lcm and divisibility") {
    Monomial a({2, 1, 0});
    Monomial b({1, 0, 3});
    CHECK(lcm(a, b) == Monomial({2, 1, 3}));
    CHECK(divides(a, lcm(a, b)));
    CHECK(divides(b, lcm(a, b)));
    CHECK_FALSE(divides(a, b));
    CHECK(divides(a, a));
    CHECK_FALSE(strictly_divides(a, a));
    CHECK(strictly_divides(Monomial({1, 0, 0}), a));
}

TEST_CASE("parse_monomial accepts the canonical forms") {
    CHECK(parse_monomial("1", 3).is_one());
    CHECK(parse_monomial("x2", 3) == mono(3, {{2, 1}}));
    CHECK(parse_monomial("x1^2*x3", 3) == mono(3, {{1, 2}, {3, 1}}));
    CHECK(parse_monomial("  x3*x1 ", 3) == mono(3, {{1, 1}, {3, 1}}));
    // repeated factors accumulate
    CHECK(parse_monomial("x1*x1*x1^2", 2) == mono(2, {{1, 4}}));
    // round trip through str()
    Monomial m = mono(5, {{1, 2}, {4, 1}, {5, 7}});
    CHECK(parse_monomial(m.str(), 5) == m);
}

TEST_CASE("parse_monomial rejects junk") {
    CHECK_THROWS_AS(parse_monomial("", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x0", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x4", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x1^0", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x1^-2", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("y1", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x1*", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x1**x2", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x", 3), parse_error);
    CHECK_THROWS_AS(parse_monomial("x1^99999999999999999999", 3), parse_error);
}

TEST_CASE("face helpers") {
    Face f = fov({1, 3, 4});
    CHECK(face_size(f) == 3);
    CHECK(face_dim(f) == 2);
    CHECK(face_vertices(f) == std::vector<int>{1, 3, 4});
    CHECK(face_str(f) == "{1,3,4}");
    CHECK(face_str(0) == "{}");
    CHECK(face_size(0) == 0);
    CHECK(face_dim(0) == -1);
    CHECK(face_subset(fov({1, 4}), f));
    CHECK_FALSE(face_subset(fov({1, 2}), f));
    CHECK(face_subset(0, f));
}

TEST_CASE("canonical face order is dimension first") {
    // {3} before {1,2} even though its bitmask is larger.
    CHECK(face_less(fov({3}), fov({1, 2})));
    CHECK(face_less(fov({1, 2}), fov({1, 3})));
    CHECK(face_less(fov({1, 3}), fov({2, 3})));
    CHECK(face_less(0, fov({1})));
    CHECK_FALSE(face_less(fov({1}), fov({1})));
}

TEST_CASE("incidence signs alternate along the vertex list") {
    Face t = fov({2, 4, 7});
    CHECK(incidence_sign(t, 2) == 1);
    CHECK(incidence_sign(t, 4) == -1);
    CHECK(incidence_sign(t, 7) == 1);
    CHECK(incidence_sign(fov({5}), 5) == 1);
}
