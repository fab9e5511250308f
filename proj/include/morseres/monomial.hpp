#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace morseres {

// A monomial in a fixed polynomial ring K[x1..xn], stored as its exponent
// vector. The coefficient is always 1; the ring has no grading beyond the
// multigrading by exponent vectors.
class Monomial {
public:
    explicit Monomial(int nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    int nvars() const { return static_cast<int>(exps_.size()); }

    // Exponent of x<k>, k in 1..nvars.
    int exp(int k) const { return exps_[k - 1]; }

    const std::vector<int>& exps() const { return exps_; }

    bool is_one() const;

    // Total degree (sum of exponents).
    long long degree() const;

    // Canonical form: factors by increasing variable index, "^e" omitted for
    // exponent 1, "1" for the constant monomial. Example: x1^2*x3.
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<int> exps_;
};

// Entrywise max. Both arguments must live in the same ring.
Monomial lcm(const Monomial& a, const Monomial& b);

// True when a divides b (entrywise <=).
bool divides(const Monomial& a, const Monomial& b);

// True when a divides b and a != b.
bool strictly_divides(const Monomial& a, const Monomial& b);

// Parses "1" or a '*'-separated product of factors "x<k>" / "x<k>^<e>" with
// 1 <= k <= nvars and e >= 1. Repeated mentions of a variable accumulate.
// Throws parse_error on syntax errors, out-of-range indices, exponents < 1,
// or exponent overflow.
Monomial parse_monomial(std::string_view text, int nvars);

}  // namespace morseres
