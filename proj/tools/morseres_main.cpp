// Command line front end. One subcommand per invocation; exit code 0 on
// success, 1 on computational or guard errors, 2 on usage errors.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morseres/betti.hpp"
#include "morseres/io.hpp"
#include "morseres/morse.hpp"
#include "morseres/polyhedral.hpp"
#include "morseres/random_ideal.hpp"
#include "morseres/reference_checks.hpp"

using namespace morseres;

namespace {

std::string seq(const std::vector<long long>& v) {
    std::string out;
    for (long long x : v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(x);
    }
    return out;
}

std::string seq(const std::vector<int>& v) {
    return seq(std::vector<long long>(v.begin(), v.end()));
}

std::string pair_str(const HomogeneousPair& p) {
    return face_str(p.sigma) + " -> " + face_str(p.tau);
}

std::string count(long long n, const std::string& noun) {
    return std::to_string(n) + ' ' + noun + (n == 1 ? "" : "s");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write " + path);
    out << text;
}

// The enumeration guard is a generator count: past it the Taylor complex
// has too many homogeneous pairs to enumerate exhaustively.
void check_enum_guard(const MonomialIdeal& ideal, int enum_limit) {
    if (ideal.ngens() > enum_limit)
        throw guard_error("matching enumeration over " + std::to_string(ideal.ngens()) +
                          " generators exceeds the guard of " + std::to_string(enum_limit) +
                          " (raise --enum-limit)");
}

const char* status_str(PolyhedralStatus s) {
    switch (s) {
        case PolyhedralStatus::polyhedral: return "polyhedral";
        case PolyhedralStatus::inconclusive: return "inconclusive";
        default: return "not_polyhedral";
    }
}

void print_verdict(const PolyhedralVerdict& v) {
    for (const MeetWitness& w : v.witnesses) {
        std::cout << "  cells " << face_str(w.a) << " and " << face_str(w.b)
                  << " have maximal common cells";
        for (Face f : w.maximal_common) std::cout << ' ' << face_str(f);
        std::cout << '\n';
    }
    for (Face f : v.irregular_cells)
        std::cout << "  cell " << face_str(f) << " fails its local boundary test\n";
    for (Face f : v.uncertified_cells)
        std::cout << "  cell " << face_str(f) << " is beyond the implemented tests\n";
}

void run_betti(const std::string& path, int max_gens, const std::string& format) {
    const MonomialIdeal ideal = read_ideal_file(path);
    const std::vector<BettiEntry> entries = multigraded_betti(ideal, max_gens);
    if (format == "json") {
        std::cout << betti_to_json(entries) << '\n';
        return;
    }
    std::cout << "ideal: " << count(ideal.ngens(), "generator") << " in "
              << count(ideal.nvars(), "variable") << '\n';
    const std::vector<long long> total = total_betti(ideal, max_gens);
    std::vector<long long> quotient = {1};
    quotient.insert(quotient.end(), total.begin(), total.end());
    std::cout << "total Betti numbers of I:   " << seq(total) << '\n';
    std::cout << "total Betti numbers of S/I: " << seq(quotient) << '\n';
    std::cout << "nonzero multigraded Betti numbers:\n";
    std::size_t width = 6;
    for (const BettiEntry& e : entries) width = std::max(width, e.degree.str().size());
    std::printf("  %5s  %7s  %-*s  %s\n", "i(I)", "i(S/I)", static_cast<int>(width), "degree",
                "value");
    for (const BettiEntry& e : entries)
        std::printf("  %5d  %7d  %-*s  %5d\n", e.index, e.index + 1, static_cast<int>(width),
                    e.degree.str().c_str(), e.value);
}

void run_scarf(const std::string& path, int max_gens, const std::string& format) {
    const MonomialIdeal ideal = read_ideal_file(path);
    const LabeledComplex scarf = scarf_complex(ideal, max_gens);
    if (format == "json") {
        std::cout << complex_to_json(scarf) << '\n';
        return;
    }
    std::cout << "scarf complex of " << count(ideal.ngens(), "generator") << '\n';
    std::cout << "f-vector: " << seq(scarf.f_vector()) << '\n';
    std::cout << "facets:\n";
    for (Face f : scarf.facets())
        std::cout << "  " << face_str(f) << "  label " << scarf.label_of(f).str() << '\n';
    const HomologyProfile h = reduced_homology(scarf);
    std::cout << "reduced homology ranks, dimensions -1.." << scarf.top_dim() << ": "
              << seq(h.betti) << '\n';
}

void run_taylor(const std::string& path, int max_gens, const std::string& format) {
    const MonomialIdeal ideal = read_ideal_file(path);
    const LabeledComplex taylor = taylor_complex(ideal, max_gens);
    if (format == "json") {
        std::cout << complex_to_json(taylor) << '\n';
        return;
    }
    std::cout << "taylor complex on " << count(ideal.ngens(), "generator") << '\n';
    std::cout << "f-vector: " << seq(taylor.f_vector()) << '\n';
    std::cout << "lcm lattice size: " << lcm_lattice(ideal, max_gens).size() << '\n';
}

void run_matchings(const std::string& path, int max_gens, int enum_limit, std::size_t limit,
                   const std::string& format) {
    const MonomialIdeal ideal = read_ideal_file(path);
    check_enum_guard(ideal, enum_limit);
    const LabeledComplex taylor = taylor_complex(ideal, max_gens);
    const EnumerationResult res = enumerate_maximal_matchings(taylor, limit);
    if (format == "json") {
        std::cout << matchings_to_json(res.matchings) << '\n';
        return;
    }
    const auto pairs = homogeneous_pairs(taylor);
    const auto minimal = minimal_homogeneous_pairs(taylor);
    std::cout << "homogeneous pairs: " << pairs.size() << " (" << minimal.size()
              << " minimal)\n";
    std::cout << "minimal pairs:\n";
    for (const HomogeneousPair& p : minimal)
        std::cout << "  " << pair_str(p) << "  label " << taylor.label_of(p.sigma).str() << '\n';
    std::cout << "maximal acyclic matchings: " << res.matchings.size()
              << (res.truncated ? " (truncated)" : "") << '\n';
    for (std::size_t i = 0; i < res.matchings.size(); ++i) {
        const Matching& m = res.matchings[i];
        std::cout << "matching [" << i << "], " << m.size() << " pairs, critical f-vector "
                  << seq(morse_fvector(taylor, m)) << '\n';
        for (const HomogeneousPair& p : m) std::cout << "  " << pair_str(p) << '\n';
    }
}

// --matching is an index into the canonical enumeration order when it is
// all digits, otherwise a path to a matching JSON file.
Matching select_matching(const LabeledComplex& taylor, const std::string& selector, int index,
                         int enum_limit) {
    const bool digits =
        !selector.empty() && std::all_of(selector.begin(), selector.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
    if (digits) {
        check_enum_guard(taylor.ideal(), enum_limit);
        const std::size_t want = std::stoul(selector);
        const EnumerationResult res = enumerate_maximal_matchings(taylor, want + 1);
        if (want >= res.matchings.size() && !res.truncated)
            throw invalid_error("matching index " + selector + " out of range: only " +
                                std::to_string(res.matchings.size()) + " maximal matchings");
        return res.matchings[want];
    }
    return matching_from_json_file(selector, index);
}

void run_morse(const std::string& path, const std::string& matching_selector, int index, int max_gens,
               int enum_limit, const std::string& format, const std::string& json_out,
               const std::string& dot_out) {
    const MonomialIdeal ideal = read_ideal_file(path);
    const LabeledComplex taylor = taylor_complex(ideal, max_gens);
    const Matching m = select_matching(taylor, matching_selector, index, enum_limit);
    const MorseComplex mc = morse_complex(taylor, m);
    if (!json_out.empty()) write_file(json_out, morse_to_json(mc));
    if (!dot_out.empty()) write_file(dot_out, matching_graph_dot(taylor, m));
    if (format == "json") {
        std::cout << morse_to_json(mc) << '\n';
        return;
    }
    std::cout << "matching: " << m.size() << " pairs\n";
    std::cout << "morse complex: " << mc.size() << " cells, f-vector " << seq(mc.f_vector())
              << '\n';
    std::size_t width = 2;
    for (Face f : mc.cells()) width = std::max(width, face_str(f).size());
    std::cout << "cells:\n";
    for (std::size_t i = 0; i < mc.size(); ++i)
        std::printf("  [%2zu] %-*s  label %-14s %s\n", i, static_cast<int>(width),
                    face_str(mc.cells()[i]).c_str(), mc.label(i).str().c_str(),
                    mc.simplex_flag(i) ? "simplex" : "non-simplex");
    std::cout << "covers (cell -> covered cell, coefficient):\n";
    for (const MorseComplex::Cover& c : mc.covers())
        std::printf("  %-*s -> %-*s  %+lld\n", static_cast<int>(width),
                    face_str(mc.cells()[c.super]).c_str(), static_cast<int>(width),
                    face_str(mc.cells()[c.sub]).c_str(), c.coeff);
    const MinimalityResult min = is_minimal_support(mc);
    if (min.minimal) {
        std::cout << "minimal: yes\n";
    } else {
        std::cout << "minimal: no (label repeats on cover " << face_str(min.witness->first)
                  << " -> " << face_str(min.witness->second) << ")\n";
    }
}

void run_polyhedral(const std::string& path, bool all, int max_gens, int enum_limit,
                    std::size_t limit, const std::string& format) {
    const MonomialIdeal ideal = read_ideal_file(path);
    check_enum_guard(ideal, enum_limit);
    const LabeledComplex taylor = taylor_complex(ideal, max_gens);
    const EnumerationResult res = enumerate_maximal_matchings(taylor, limit);
    std::vector<PolyhedralVerdict> verdicts;
    verdicts.reserve(res.matchings.size());
    for (const Matching& m : res.matchings)
        verdicts.push_back(check_polyhedral(morse_complex(taylor, m)));
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const PolyhedralVerdict& v : verdicts)
            arr.push_back(nlohmann::ordered_json::parse(verdict_to_json(v)));
        if (all) {
            nlohmann::ordered_json out;
            out["verdicts"] = arr;
            out["exists_polyhedral"] = exists_polyhedral_maximal_matching(ideal, enum_limit);
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << arr.dump(2) << '\n';
        }
        return;
    }
    std::cout << "maximal acyclic matchings: " << res.matchings.size()
              << (res.truncated ? " (truncated)" : "") << '\n';
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        std::cout << "matching [" << i << "]: " << status_str(verdicts[i].status) << '\n';
        print_verdict(verdicts[i]);
    }
    if (all) {
        std::cout << "polyhedral maximal matching exists: "
                  << (exists_polyhedral_maximal_matching(ideal, enum_limit) ? "yes" : "no")
                  << '\n';
    }
}

int run_reproduce() {
    const std::vector<ReferenceResult> results = run_reference_checks();
    for (const ReferenceResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << '\n';
        if (!r.pass && !r.detail.empty()) std::cout << "      " << r.detail << '\n';
    }
    const bool ok = all_pass(results);
    std::cout << (ok ? "all claims reproduced\n" : "some claims failed\n");
    return ok ? 0 : 1;
}

void run_random(int gens, int vars, int max_exp, std::uint32_t seed) {
    std::cout << ideal_to_text(random_ideal(gens, vars, max_exp, seed));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cellular free resolutions of monomial ideals by discrete Morse theory"};
    app.require_subcommand(1);

    int max_gens = 12;
    int enum_limit = 8;
    std::string format = "text";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-gens", max_gens, "generator guard for complex construction")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--enum-limit", enum_limit, "generator guard for matching enumeration")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "output format")
            ->capture_default_str()
            ->check(CLI::IsMember({"text", "json"}));
    };

    std::string path;
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", path, "ideal file")->required();
    };

    CLI::App* betti = app.add_subcommand("betti", "total and multigraded Betti numbers");
    add_file(betti);
    add_common(betti);

    CLI::App* scarf = app.add_subcommand("scarf", "Scarf complex facets, f-vector, homology");
    add_file(scarf);
    add_common(scarf);

    CLI::App* taylor = app.add_subcommand("taylor", "Taylor complex f-vector and lcm lattice");
    add_file(taylor);
    add_common(taylor);

    std::size_t limit = 1000;
    CLI::App* matchings =
        app.add_subcommand("matchings", "maximal homogeneous acyclic matchings");
    add_file(matchings);
    add_common(matchings);
    matchings->add_option("--limit", limit, "stop after this many matchings")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::string matching_selector;
    int matching_index = 0;
    std::string json_out, dot_out;
    CLI::App* morse = app.add_subcommand("morse", "Morse complex of one matching");
    add_file(morse);
    add_common(morse);
    morse->add_option("--matching", matching_selector, "enumeration index or matching JSON file")
        ->required();
    morse->add_option("--index", matching_index, "matching index within a JSON file holding many")
        ->capture_default_str();
    morse->add_option("--json", json_out, "also write the complex as JSON to this path");
    morse->add_option("--dot", dot_out, "also write the matching graph as DOT to this path");

    bool all = false;
    CLI::App* polyhedral =
        app.add_subcommand("polyhedral", "polyhedrality verdict per maximal matching");
    add_file(polyhedral);
    add_common(polyhedral);
    polyhedral->add_flag("--all", all, "also report whether any matching is polyhedral");
    polyhedral->add_option("--limit", limit, "stop after this many matchings")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    CLI::App* reproduce =
        app.add_subcommand("reproduce-paper", "re-run every pinned worked example");

    int gens = 0, vars = 0, max_exp = 3;
    std::uint32_t seed = 0;
    CLI::App* random_cmd = app.add_subcommand("random-ideal", "emit a seeded random ideal");
    random_cmd->add_option("--gens", gens, "number of minimal generators")->required();
    random_cmd->add_option("--vars", vars, "number of variables")->required();
    random_cmd->add_option("--seed", seed, "rng seed")->required();
    random_cmd->add_option("--max-exp", max_exp, "largest exponent")->capture_default_str();

    int rc = 0;
    betti->callback([&] { run_betti(path, max_gens, format); });
    scarf->callback([&] { run_scarf(path, max_gens, format); });
    taylor->callback([&] { run_taylor(path, max_gens, format); });
    matchings->callback([&] { run_matchings(path, max_gens, enum_limit, limit, format); });
    morse->callback([&] {
        run_morse(path, matching_selector, matching_index, max_gens, enum_limit, format, json_out,
                  dot_out);
    });
    polyhedral->callback([&] { run_polyhedral(path, all, max_gens, enum_limit, limit, format); });
    reproduce->callback([&] { rc = run_reproduce(); });
    random_cmd->callback([&] { run_random(gens, vars, max_exp, seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
