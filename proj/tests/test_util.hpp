#ifndef DRL_TEST_UTIL_HPP
#define DRL_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "drl/cycle.hpp"
#include "drl/ideal.hpp"
#include "drl/ray_class.hpp"

namespace drl::test {

/* Deterministic RNG: every property test fixes its own seed. */
using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/* The first `count` prime ideals of the field in norm order. */
inline std::vector<PrimeIdeal> small_primes(const NumberField& k, int count) {
    std::vector<PrimeIdeal> out;
    for (Int n = 2; static_cast<int>(out.size()) < count; ++n)
        for (const auto& P : primes_of_norm(k, n)) {
            if (static_cast<int>(out.size()) < count) out.push_back(P);
        }
    return out;
}

/* Random product of small primes with small exponents. */
inline Ideal random_ideal(Rng& rng, const NumberField& k,
                          const std::vector<PrimeIdeal>& primes) {
    Ideal I = Ideal::one(k);
    int nfac = pick(rng, 1, 3);
    for (int i = 0; i < nfac; ++i) {
        const PrimeIdeal& P = primes[pick(rng, 0, (int)primes.size() - 1)];
        I = ideal_mul(I, ideal_pow(P.to_ideal(), pick(rng, 1, 2)));
    }
    return I;
}

}  // namespace drl::test

#endif
