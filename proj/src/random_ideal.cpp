#include "morseres/random_ideal.hpp"

#include <random>

namespace morseres {

MonomialIdeal random_ideal(int gens, int vars, int max_exp, std::uint32_t seed) {
    if (gens < 1 || vars < 1 || max_exp < 1)
        throw invalid_error("random_ideal needs gens, vars and max_exp all positive");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, max_exp);

    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Monomial> cand;
        cand.reserve(gens);
        for (int g = 0; g < gens; ++g) {
            while (true) {
                std::vector<int> e(vars);
                bool nonzero = false;
                for (int& x : e) {
                    x = dist(rng);
                    nonzero = nonzero || x != 0;
                }
                if (nonzero) {
                    cand.emplace_back(std::move(e));
                    break;
                }
            }
        }
        if (static_cast<int>(minimalize(cand).size()) == gens)
            return MonomialIdeal(vars, std::move(cand));
    }
    throw guard_error("found no ideal with " + std::to_string(gens) + " minimal generators in " +
                      std::to_string(vars) + " variables (exponents up to " +
                      std::to_string(max_exp) + "); the target may be infeasible");
}

}  // namespace morseres
