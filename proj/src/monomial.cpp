#include "morseres/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "morseres/util.hpp"

namespace morseres {

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

long long Monomial::degree() const {
    long long d = 0;
    for (int e : exps_) d += e;
    return d;
}

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (exps_[i] > 1) {
            out += '^';
            out += std::to_string(exps_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw invalid_error("lcm: monomials from different rings");
    std::vector<int> out(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) out[i] = std::max(a.exps()[i], b.exps()[i]);
    return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw invalid_error("divides: monomials from different rings");
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exps()[i] > b.exps()[i]) return false;
    return true;
}

bool strictly_divides(const Monomial& a, const Monomial& b) {
    return divides(a, b) && !(a == b);
}

namespace {

// Parses a positive integer starting at pos; advances pos past it.
long long parse_number(std::string_view text, std::size_t& pos, const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
        throw parse_error(std::string("expected ") + what + " in monomial '" + std::string(text) + "'");
    long long value = 0;
    auto res = std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc())
        throw parse_error(std::string("invalid ") + what + " in monomial '" + std::string(text) + "'");
    return value;
}

}  // namespace

Monomial parse_monomial(std::string_view text, int nvars) {
    std::string_view trimmed = text;
    while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t'))
        trimmed.remove_prefix(1);
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t' || trimmed.back() == '\r'))
        trimmed.remove_suffix(1);
    if (trimmed.empty())
        throw parse_error("empty monomial");
    if (trimmed == "1") return Monomial(nvars);

    std::vector<int> exps(nvars, 0);
    std::size_t pos = 0;
    while (true) {
        if (pos >= trimmed.size() || trimmed[pos] != 'x')
            throw parse_error("expected 'x' in monomial '" + std::string(trimmed) + "'");
        ++pos;
        long long index = parse_number(trimmed, pos, "variable index");
        if (index < 1 || index > nvars)
            throw parse_error("variable index " + std::to_string(index) + " out of range 1.." +
                              std::to_string(nvars) + " in monomial '" + std::string(trimmed) + "'");
        long long e = 1;
        if (pos < trimmed.size() && trimmed[pos] == '^') {
            ++pos;
            e = parse_number(trimmed, pos, "exponent");
            if (e < 1)
                throw parse_error("exponent must be >= 1 in monomial '" + std::string(trimmed) + "'");
        }
        long long total = static_cast<long long>(exps[index - 1]) + e;
        if (total > std::numeric_limits<int>::max())
            throw parse_error("exponent overflow in monomial '" + std::string(trimmed) + "'");
        exps[index - 1] = static_cast<int>(total);
        if (pos == trimmed.size()) break;
        if (trimmed[pos] != '*')
            throw parse_error("expected '*' in monomial '" + std::string(trimmed) + "'");
        ++pos;
    }
    return Monomial(std::move(exps));
}

}  // namespace morseres
