#include <doctest.h>

#include "morseres/random_ideal.hpp"
#include "helpers.hpp"

using namespace morseres;

TEST_CASE("random ideals are deterministic per seed") {
    MonomialIdeal a = random_ideal(4, 3, 3, 17);
    MonomialIdeal b = random_ideal(4, 3, 3, 17);
    CHECK(a.gens() == b.gens());

    bool any_different = false;
    for (std::uint32_t s = 1; s <= 5 && !any_different; ++s)
        any_different = random_ideal(4, 3, 3, s).gens() != a.gens();
    CHECK(any_different);
}

TEST_CASE("random ideals honor the requested shape") {
    for (std::uint32_t seed = 100; seed < 120; ++seed) {
        MonomialIdeal ideal = random_ideal(5, 4, 3, seed);
        CHECK(ideal.nvars() == 4);
        CHECK(ideal.ngens() == 5);
        for (const Monomial& g : ideal.gens()) {
            CHECK_FALSE(g.is_one());
            for (int e : g.exps()) {
                CHECK(e >= 0);
                CHECK(e <= 3);
            }
        }
        // already a minimal generating set
        CHECK(minimalize(ideal.gens()) == ideal.gens());
    }
}

TEST_CASE("degenerate requests are rejected") {
    CHECK_THROWS_AS(random_ideal(0, 3, 3, 1), invalid_error);
    CHECK_THROWS_AS(random_ideal(3, 0, 3, 1), invalid_error);
    CHECK_THROWS_AS(random_ideal(3, 3, 0, 1), invalid_error);
    // two generators cannot form an antichain with one variable
    CHECK_THROWS_AS(random_ideal(2, 1, 3, 1), guard_error);
}
