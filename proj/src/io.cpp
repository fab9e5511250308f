#include "morseres/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace morseres {

namespace {

using json = nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Largest variable index mentioned as "x<k>"; 0 when none.
int max_var_index(const std::string& line) {
    int best = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] != 'x') continue;
        std::size_t j = i + 1;
        long k = 0;
        while (j < line.size() && line[j] >= '0' && line[j] <= '9') {
            k = k * 10 + (line[j] - '0');
            if (k > 1'000'000) throw parse_error("variable index out of range: " + line);
            ++j;
        }
        if (j > i + 1 && k > best) best = static_cast<int>(k);
    }
    return best;
}

json face_json(Face f) {
    json out = json::array();
    for (int v : face_vertices(f)) out.push_back(v);
    return out;
}

Face face_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("face must be an array of vertex numbers");
    std::vector<int> vs;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw parse_error("face vertex must be an integer");
        const long long k = v.get<long long>();
        if (k < 1 || k > 32) throw parse_error("face vertex out of range: " + std::to_string(k));
        vs.push_back(static_cast<int>(k));
    }
    return face_from_vertices(vs);
}

json pair_json(const HomogeneousPair& p) {
    json out = json::object();
    out["from"] = face_json(p.tau);
    out["to"] = face_json(p.sigma);
    return out;
}

json matching_json(const Matching& m) {
    json out = json::array();
    for (const HomogeneousPair& p : m) out.push_back(pair_json(p));
    return out;
}

Matching matching_from(const json& j) {
    if (!j.is_array()) throw parse_error("matching must be an array of {from, to} pairs");
    Matching m;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to"))
            throw parse_error("matching entry must be an object with \"from\" and \"to\"");
        HomogeneousPair p;
        p.tau = face_from_json(e["from"]);
        p.sigma = face_from_json(e["to"]);
        m.push_back(p);
    }
    return canonical_matching(std::move(m));
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad JSON: ") + e.what());
    }
}

}  // namespace

MonomialIdeal read_ideal(std::istream& in) {
    std::vector<std::pair<int, std::string>> lines;  // (line number, text)
    int nvars = -1;
    bool first = true;
    std::string raw;
    for (int lineno = 1; std::getline(in, raw); ++lineno) {
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trimmed(raw);
        if (line.empty()) continue;
        if (first && line.size() > 1 && line[0] == 'n') {
            const std::string rest = trimmed(line.substr(1));
            if (!rest.empty() && rest[0] == '=') {
                try {
                    nvars = std::stoi(trimmed(rest.substr(1)));
                } catch (const std::exception&) {
                    throw parse_error("line " + std::to_string(lineno) +
                                      ": bad variable count header: " + line);
                }
                if (nvars < 1)
                    throw parse_error("line " + std::to_string(lineno) +
                                      ": variable count must be positive: " + line);
                first = false;
                continue;
            }
        }
        first = false;
        lines.push_back({lineno, line});
    }
    if (nvars < 0) {
        for (const auto& [lineno, line] : lines) nvars = std::max(nvars, max_var_index(line));
        if (nvars < 1) throw parse_error("no generators and no n= header");
    }
    std::vector<Monomial> gens;
    gens.reserve(lines.size());
    for (const auto& [lineno, line] : lines) {
        try {
            gens.push_back(parse_monomial(line, nvars));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open ideal file: " + path);
    return read_ideal(in);
}

std::string ideal_to_text(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "n=" << ideal.nvars() << "\n";
    for (const Monomial& g : ideal.gens()) out << g.str() << "\n";
    return out.str();
}

std::string complex_to_json(const LabeledComplex& complex) {
    json out = json::object();
    out["n"] = complex.ideal().nvars();
    out["generators"] = json::array();
    for (const Monomial& g : complex.ideal().gens()) out["generators"].push_back(g.str());
    out["faces"] = json::array();
    for (std::size_t i = 0; i < complex.size(); ++i) {
        json f = json::object();
        f["vertices"] = face_json(complex.faces()[i]);
        f["label"] = complex.label(i).str();
        out["faces"].push_back(std::move(f));
    }
    return out.dump(2);
}

LabeledComplex complex_from_json(const std::string& text) {
    const json in = parse_json(text);
    if (!in.is_object() || !in.contains("n") || !in.contains("generators") || !in.contains("faces"))
        throw parse_error("complex_from_json: expected keys n, generators, faces");
    const int nvars = in["n"].get<int>();
    std::vector<Monomial> gens;
    for (const json& g : in["generators"]) gens.push_back(parse_monomial(g.get<std::string>(), nvars));
    MonomialIdeal ideal(nvars, std::move(gens));
    std::vector<Face> faces;
    for (const json& f : in["faces"]) {
        const Face face = face_from_json(f["vertices"]);
        for (int v : face_vertices(face))
            if (v > ideal.ngens())
                throw parse_error("face vertex " + std::to_string(v) + " exceeds the " +
                                  std::to_string(ideal.ngens()) + " generators");
        faces.push_back(face);
    }
    LabeledComplex out(ideal, std::move(faces));
    for (const json& f : in["faces"]) {
        const Face face = face_from_json(f["vertices"]);
        if (out.label_of(face).str() != f["label"].get<std::string>())
            throw parse_error("complex_from_json: label mismatch on face " + face_str(face));
    }
    return out;
}

std::string morse_to_json(const MorseComplex& complex) {
    json out = json::object();
    out["n"] = complex.ideal().nvars();
    out["generators"] = json::array();
    for (const Monomial& g : complex.ideal().gens()) out["generators"].push_back(g.str());
    out["cells"] = json::array();
    for (std::size_t i = 0; i < complex.size(); ++i) {
        json c = json::object();
        c["vertices"] = face_json(complex.cells()[i]);
        c["label"] = complex.label(i).str();
        c["simplex"] = complex.simplex_flag(i);
        out["cells"].push_back(std::move(c));
    }
    out["covers"] = json::array();
    for (const MorseComplex::Cover& cv : complex.covers()) {
        json c = json::object();
        c["sub"] = face_json(complex.cells()[cv.sub]);
        c["super"] = face_json(complex.cells()[cv.super]);
        c["coeff"] = cv.coeff;
        out["covers"].push_back(std::move(c));
    }
    return out.dump(2);
}

std::string chain_to_json(const ChainComplex& chain) {
    json out = json::object();
    out["cells"] = chain.cells;
    out["boundaries"] = json::array();
    for (std::size_t d = 0; d < chain.boundaries.size(); ++d) {
        const IntMat& m = chain.boundaries[d];
        json b = json::object();
        b["d"] = d;
        b["rows"] = m.rows();
        b["cols"] = m.cols();
        json entries = json::array();
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m.at(i, j) != 0) entries.push_back(json::array({i, j, m.at(i, j)}));
        b["entries"] = std::move(entries);
        out["boundaries"].push_back(std::move(b));
    }
    return out.dump(2);
}

std::string betti_to_json(const std::vector<BettiEntry>& entries) {
    json out = json::array();
    for (const BettiEntry& e : entries) {
        json o = json::object();
        o["index"] = e.index;
        o["degree"] = e.degree.str();
        o["value"] = e.value;
        out.push_back(std::move(o));
    }
    return out.dump(2);
}

std::string matching_to_json(const Matching& m) { return matching_json(m).dump(2); }

std::string matchings_to_json(const std::vector<Matching>& ms) {
    json out = json::array();
    for (const Matching& m : ms) out.push_back(matching_json(m));
    return out.dump(2);
}

std::string verdict_to_json(const PolyhedralVerdict& verdict) {
    json out = json::object();
    switch (verdict.status) {
        case PolyhedralStatus::polyhedral: out["status"] = "polyhedral"; break;
        case PolyhedralStatus::inconclusive: out["status"] = "inconclusive"; break;
        case PolyhedralStatus::not_polyhedral: out["status"] = "not_polyhedral"; break;
    }
    out["witnesses"] = json::array();
    for (const MeetWitness& w : verdict.witnesses) {
        json o = json::object();
        o["cellA"] = face_json(w.a);
        o["cellB"] = face_json(w.b);
        o["maximal_common"] = json::array();
        for (Face f : w.maximal_common) o["maximal_common"].push_back(face_json(f));
        out["witnesses"].push_back(std::move(o));
    }
    out["irregular_cells"] = json::array();
    for (Face f : verdict.irregular_cells) out["irregular_cells"].push_back(face_json(f));
    out["uncertified_cells"] = json::array();
    for (Face f : verdict.uncertified_cells) out["uncertified_cells"].push_back(face_json(f));
    return out.dump(2);
}

Matching matching_from_json(const std::string& text, int index) {
    const json j = parse_json(text);
    if (!j.is_array()) throw parse_error("matching JSON must be an array");
    if (j.empty()) {
        if (index != 0) throw invalid_error("matching index out of range");
        return {};
    }
    if (j.front().is_object()) {
        if (index != 0) throw invalid_error("matching index out of range for a single matching");
        return matching_from(j);
    }
    if (index < 0 || index >= static_cast<int>(j.size()))
        throw invalid_error("matching index out of range: " + std::to_string(index));
    return matching_from(j[index]);
}

Matching matching_from_json_file(const std::string& path, int index) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matching file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matching_from_json(buf.str(), index);
}

std::string matching_graph_dot(const LabeledComplex& complex, const Matching& m) {
    validate_matching(complex, m);
    std::map<Face, Face, FaceLess> matched_down;
    for (const HomogeneousPair& p : m) matched_down[p.tau] = p.sigma;

    std::ostringstream out;
    out << "digraph matching {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (Face f : complex.faces()) {
        if (f == 0) continue;
        out << "  \"" << face_str(f) << "\" [label=\"" << face_str(f) << "\\n"
            << complex.label_of(f).str() << "\"];\n";
    }
    for (Face tau : complex.faces()) {
        if (face_size(tau) < 2) continue;
        for (int v : face_vertices(tau)) {
            const Face sigma = tau & ~(Face(1) << (v - 1));
            if (!complex.contains(sigma)) continue;
            const auto it = matched_down.find(tau);
            if (it != matched_down.end() && it->second == sigma)
                out << "  \"" << face_str(sigma) << "\" -> \"" << face_str(tau)
                    << "\" [color=red, penwidth=2];\n";
            else
                out << "  \"" << face_str(tau) << "\" -> \"" << face_str(sigma) << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace morseres
