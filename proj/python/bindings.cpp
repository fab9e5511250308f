// Python surface: thin, text-in structured-out wrappers around the core
// pipeline. Ideals travel as the same text format the CLI reads, faces as
// sorted vertex lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "morseres/betti.hpp"
#include "morseres/io.hpp"
#include "morseres/morse.hpp"
#include "morseres/polyhedral.hpp"
#include "morseres/random_ideal.hpp"
#include "morseres/reference_checks.hpp"

namespace py = pybind11;
using namespace morseres;

namespace {

MonomialIdeal parse_ideal(const std::string& text) {
    std::istringstream in(text);
    return read_ideal(in);
}

std::vector<std::vector<int>> vertex_lists(const std::vector<Face>& faces) {
    std::vector<std::vector<int>> out;
    out.reserve(faces.size());
    for (Face f : faces) out.push_back(face_vertices(f));
    return out;
}

}  // namespace

PYBIND11_MODULE(_morseres, m) {
    m.doc() = "cellular free resolutions of monomial ideals by discrete Morse theory";

    m.def(
        "total_betti", [](const std::string& t) { return total_betti(parse_ideal(t)); },
        py::arg("ideal_text"), "Total Betti numbers of the ideal, index 0 = generators.");

    m.def(
        "multigraded_betti",
        [](const std::string& t) {
            std::vector<std::tuple<int, std::string, int>> out;
            for (const BettiEntry& e : multigraded_betti(parse_ideal(t)))
                out.emplace_back(e.index, e.degree.str(), e.value);
            return out;
        },
        py::arg("ideal_text"), "Nonzero (index, degree, value) triples, sorted.");

    m.def(
        "scarf",
        [](const std::string& t) {
            const LabeledComplex s = scarf_complex(parse_ideal(t));
            py::dict out;
            out["f_vector"] = s.f_vector();
            out["facets"] = vertex_lists(s.facets());
            out["homology"] = reduced_homology(s).betti;
            return out;
        },
        py::arg("ideal_text"), "Scarf complex f-vector, facets, reduced homology from dim -1.");

    m.def(
        "taylor_fvector",
        [](const std::string& t) { return taylor_complex(parse_ideal(t)).f_vector(); },
        py::arg("ideal_text"));

    m.def(
        "maximal_matchings",
        [](const std::string& t, std::size_t limit) {
            const LabeledComplex taylor = taylor_complex(parse_ideal(t));
            std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> out;
            for (const Matching& match : enumerate_maximal_matchings(taylor, limit).matchings) {
                out.emplace_back();
                for (const HomogeneousPair& p : match)
                    out.back().emplace_back(face_vertices(p.sigma), face_vertices(p.tau));
            }
            return out;
        },
        py::arg("ideal_text"), py::arg("limit") = 1000,
        "Maximal homogeneous acyclic matchings as lists of (face, facet-of) pairs.");

    m.def(
        "morse_summary",
        [](const std::string& t, std::size_t index) {
            const LabeledComplex taylor = taylor_complex(parse_ideal(t));
            const EnumerationResult res = enumerate_maximal_matchings(taylor, index + 1);
            if (index >= res.matchings.size() && !res.truncated)
                throw invalid_error("matching index out of range");
            const MorseComplex mc = morse_complex(taylor, res.matchings[index]);
            const PolyhedralVerdict verdict = check_polyhedral(mc);
            const char* status = verdict.status == PolyhedralStatus::polyhedral ? "polyhedral"
                                 : verdict.status == PolyhedralStatus::inconclusive
                                     ? "inconclusive"
                                     : "not_polyhedral";
            py::dict out;
            out["f_vector"] = mc.f_vector();
            out["cells"] = vertex_lists(mc.cells());
            out["minimal"] = is_minimal_support(mc).minimal;
            out["polyhedral"] = std::string(status);
            return out;
        },
        py::arg("ideal_text"), py::arg("matching_index") = 0,
        "Morse complex of one enumerated matching: f-vector, cells, minimality, verdict.");

    m.def(
        "exists_polyhedral",
        [](const std::string& t, int max_gens) {
            return exists_polyhedral_maximal_matching(parse_ideal(t), max_gens);
        },
        py::arg("ideal_text"), py::arg("max_gens") = 6);

    m.def(
        "reference_checks",
        [] {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const ReferenceResult& r : run_reference_checks())
                out.emplace_back(r.name, r.pass, r.detail);
            return out;
        },
        "Re-runs the pinned worked examples; (name, pass, detail) per check.");

    m.def(
        "random_ideal_text",
        [](int gens, int vars, int max_exp, std::uint32_t seed) {
            return ideal_to_text(random_ideal(gens, vars, max_exp, seed));
        },
        py::arg("gens"), py::arg("vars"), py::arg("max_exp"), py::arg("seed"));

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<guard_error>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<invalid_error>(m, "InvalidError", PyExc_ValueError);
}
