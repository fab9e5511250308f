#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "morseres/polyhedral.hpp"

namespace morseres {

// Ideal text format: one generator per line ("x1^2*x3"), '#' comments and
// blank lines skipped, optional "n=<vars>" header line. Without the
// header the variable count is the largest index that occurs.
MonomialIdeal read_ideal(std::istream& in);
MonomialIdeal read_ideal_file(const std::string& path);
std::string ideal_to_text(const MonomialIdeal& ideal);

// JSON serializers. Output keys keep insertion order and arrays are in
// the library's canonical cell order, so the output is deterministic.
std::string complex_to_json(const LabeledComplex& complex);
std::string morse_to_json(const MorseComplex& complex);
std::string chain_to_json(const ChainComplex& chain);
std::string betti_to_json(const std::vector<BettiEntry>& entries);
std::string matching_to_json(const Matching& m);
std::string matchings_to_json(const std::vector<Matching>& ms);
std::string verdict_to_json(const PolyhedralVerdict& verdict);

// Accepts either one matching [{"from":[...],"to":[...]},...] or an array
// of matchings; `index` selects from the latter.
Matching matching_from_json(const std::string& text, int index = 0);
Matching matching_from_json_file(const std::string& path, int index = 0);

// Inverse of complex_to_json; the labels in the input are checked against
// the ones recomputed from the generators.
LabeledComplex complex_from_json(const std::string& text);

// Graphviz digraph of the codimension-1 face relation of the complex,
// with matched edges reversed (pointing up) and highlighted.
std::string matching_graph_dot(const LabeledComplex& complex, const Matching& m);

}  // namespace morseres
