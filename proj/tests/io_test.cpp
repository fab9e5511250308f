#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "morseres/io.hpp"
#include "morseres/polyhedral.hpp"
#include "helpers.hpp"

using namespace morseres;

#ifndef MORSERES_FIXTURE_DIR
#error "MORSERES_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace {

const std::string fixture_dir = MORSERES_FIXTURE_DIR;

MonomialIdeal from_text(const std::string& text) {
    std::istringstream in(text);
    return read_ideal(in);
}

}  // namespace

TEST_CASE("read_ideal with explicit variable count") {
    MonomialIdeal ideal = from_text("n=3\n# comment\nx1^2\n\nx1*x2\nx2^2\n");
    CHECK(ideal.nvars() == 3);
    CHECK(ideal.ngens() == 3);
    CHECK(ideal.gen(1) == mono(3, {{1, 2}}));
    CHECK(ideal.gen(3) == mono(3, {{2, 2}}));
}

TEST_CASE("read_ideal infers the variable count without a header") {
    MonomialIdeal ideal = from_text("x1*x4\nx2^3\n");
    CHECK(ideal.nvars() == 4);
    CHECK(ideal.ngens() == 2);
}

TEST_CASE("read_ideal reports the offending line") {
    try {
        from_text("n=3\nx1\nx9\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(from_text("n=zero\nx1\n"), parse_error);
    CHECK_THROWS_AS(from_text("n=0\nx1\n"), parse_error);
    CHECK_THROWS_AS(from_text("# nothing here\n"), parse_error);
}

TEST_CASE("ideal_to_text round trip") {
    MonomialIdeal ideal = xyz_square_ideal();
    std::string text = ideal_to_text(ideal);
    MonomialIdeal back = from_text(text);
    CHECK(back.nvars() == ideal.nvars());
    CHECK(back.gens() == ideal.gens());
}

TEST_CASE("fixture files match the pinned ideals") {
    MonomialIdeal a = read_ideal_file(fixture_dir + "/xyz_squared.ideal");
    CHECK(a.nvars() == 3);
    CHECK(a.gens() == xyz_square_ideal().gens());

    MonomialIdeal b = read_ideal_file(fixture_dir + "/six_gen.ideal");
    CHECK(b.nvars() == 12);
    CHECK(b.gens() == twelve_vars_ideal().gens());

    Matching m = matching_from_json_file(fixture_dir + "/xyz_squared_matching.json");
    CHECK(m == xyz_square_showcase_matching());

    CHECK_THROWS_AS(read_ideal_file(fixture_dir + "/does_not_exist.ideal"), parse_error);
}

TEST_CASE("complex JSON round trip") {
    LabeledComplex s = scarf_complex(xyz_square_ideal());
    LabeledComplex back = complex_from_json(complex_to_json(s));
    CHECK(back.faces() == s.faces());
    CHECK(back.ideal().gens() == s.ideal().gens());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(back.label(i) == s.label(i));

    // tampered labels are rejected
    std::string text = complex_to_json(s);
    auto pos = text.find("\"label\": \"x1^2\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 15, "\"label\": \"x2^2\"");
    CHECK_THROWS_AS(complex_from_json(text), parse_error);

    // vertices beyond the generator list are rejected
    CHECK_THROWS_AS(
        complex_from_json("{\"n\": 2, \"generators\": [\"x1\"], \"faces\": "
                          "[{\"vertices\": [2], \"label\": \"x1\"}]}"),
        parse_error);
}

TEST_CASE("matching JSON round trip") {
    Matching m = xyz_square_showcase_matching();
    CHECK(matching_from_json(matching_to_json(m)) == m);

    // an array of matchings with index selection
    LabeledComplex t = taylor_complex(twelve_vars_ideal());
    auto res = enumerate_maximal_matchings(t);
    REQUIRE(res.matchings.size() == 4);
    std::string all = matchings_to_json(res.matchings);
    for (int i = 0; i < 4; ++i) CHECK(matching_from_json(all, i) == res.matchings[i]);
    CHECK_THROWS_AS(matching_from_json(all, 4), invalid_error);
    CHECK_THROWS_AS(matching_from_json(matching_to_json(m), 1), invalid_error);
    CHECK(matching_from_json("[]").empty());
    CHECK_THROWS_AS(matching_from_json("{\"from\": []}"), parse_error);
    CHECK_THROWS_AS(matching_from_json("not json"), parse_error);
    CHECK_THROWS_AS(matching_from_json("[{\"from\": [1,2,99], \"to\": [1]}]"), parse_error);
}

TEST_CASE("morse JSON carries cells, flags and covers") {
    MorseComplex mc =
        morse_complex(taylor_complex(xyz_square_ideal()), xyz_square_showcase_matching());
    auto j = nlohmann::json::parse(morse_to_json(mc));
    CHECK(j["n"] == 3);
    CHECK(j["generators"].size() == 6);
    REQUIRE(j["cells"].size() == 18);
    CHECK(j["cells"][0]["vertices"].empty());
    CHECK(j["cells"][17]["vertices"] == nlohmann::json::array({4, 5, 6}));
    CHECK(j["cells"][17]["simplex"] == false);
    CHECK(j["cells"][17]["label"] == "x1*x2*x3^2");
    CHECK(j["cells"][15]["simplex"] == true);
    // six augmentation covers plus the rest
    CHECK(j["covers"].size() == mc.covers().size());
    bool found = false;
    for (const auto& cv : j["covers"])
        if (cv["super"] == nlohmann::json::array({4, 5, 6}) &&
            cv["sub"] == nlohmann::json::array({2, 6}))
            found = cv["coeff"] == -1;
    CHECK(found);
}

TEST_CASE("chain and betti JSON shapes") {
    MorseComplex mc =
        morse_complex(taylor_complex(xyz_square_ideal()), xyz_square_showcase_matching());
    auto cj = nlohmann::json::parse(chain_to_json(mc.chain()));
    CHECK(cj["cells"] == nlohmann::json::array({1, 6, 8, 3}));
    REQUIRE(cj["boundaries"].size() == 3);
    CHECK(cj["boundaries"][0]["d"] == 0);
    CHECK(cj["boundaries"][0]["rows"] == 1);
    CHECK(cj["boundaries"][0]["cols"] == 6);
    CHECK(cj["boundaries"][2]["rows"] == 8);
    CHECK(cj["boundaries"][2]["cols"] == 3);

    auto bj = nlohmann::json::parse(betti_to_json(multigraded_betti(xyz_square_ideal())));
    REQUIRE(bj.size() == 16);
    CHECK(bj[0]["index"] == 0);
    CHECK(bj[0]["degree"] == "x3^2");
    CHECK(bj[0]["value"] == 1);
}

TEST_CASE("verdict JSON names the failed meets") {
    LabeledComplex t = taylor_complex(twelve_vars_ideal());
    auto res = enumerate_maximal_matchings(t);
    MorseComplex mc = morse_complex(t, res.matchings[0]);
    PolyhedralVerdict v = check_polyhedral(mc);
    auto j = nlohmann::json::parse(verdict_to_json(v));
    CHECK(j["status"] == "not_polyhedral");
    CHECK(j["witnesses"].size() == v.witnesses.size());
    CHECK(j["witnesses"][0]["cellA"].is_array());
    CHECK(j["witnesses"][0]["maximal_common"].size() == 2);
    CHECK(j["irregular_cells"].empty());

    PolyhedralVerdict ok = check_polyhedral(
        morse_complex(taylor_complex(xyz_square_ideal()), xyz_square_showcase_matching()));
    auto jok = nlohmann::json::parse(verdict_to_json(ok));
    CHECK(jok["status"] == "polyhedral");
    CHECK(jok["witnesses"].empty());
}

TEST_CASE("serialized output is deterministic") {
    LabeledComplex s = scarf_complex(twelve_vars_ideal());
    CHECK(complex_to_json(s) == complex_to_json(scarf_complex(twelve_vars_ideal())));
    Matching m = xyz_square_showcase_matching();
    CHECK(matching_to_json(m) == matching_to_json(xyz_square_showcase_matching()));
}

TEST_CASE("dot export reverses matched edges") {
    LabeledComplex t = taylor_complex(xyz_square_ideal());
    Matching m = xyz_square_showcase_matching();
    std::string dot = matching_graph_dot(t, m);
    CHECK(dot.find("digraph matching") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    // matched: sigma -> tau, highlighted
    CHECK(dot.find("\"{1,3}\" -> \"{1,2,3}\" [color=red, penwidth=2];") != std::string::npos);
    // unmatched covers point down
    CHECK(dot.find("\"{1,2}\" -> \"{1}\";") != std::string::npos);
    CHECK(dot.find("\"{1,2,3}\" -> \"{1,3}\"") == std::string::npos);

    CHECK_THROWS_AS(matching_graph_dot(t, {{fov({1}), fov({1, 2, 3})}}), invalid_error);
}
