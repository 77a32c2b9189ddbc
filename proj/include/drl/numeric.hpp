#ifndef DRL_NUMERIC_HPP
#define DRL_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drl {

using Int = mpz_class;
using Rat = mpq_class;

/* Error taxonomy; the CLI maps these to exit codes 2/3/4. */
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& m) : std::runtime_error(m) {}
};
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& m) : std::runtime_error(m) {}
};

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

/* Floor quotient/remainder; remainder has the sign of b (b > 0 everywhere below). */
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline Int powm(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

/* Trial-division factorization, smallest primes first.  Refuses inputs whose
 * unfactored cofactor exceeds the trial bound instead of silently stalling. */
std::vector<std::pair<Int, int>> factor_int(Int n);

bool is_squarefree(const Int& n);

/* Square root of a mod odd prime p (a a quadratic residue).  Tonelli-Shanks. */
Int sqrt_mod(const Int& a, const Int& p);

}  // namespace drl

#endif
