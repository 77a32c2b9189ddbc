#include "drl/numeric.hpp"

namespace drl {

std::vector<std::pair<Int, int>> factor_int(Int n) {
    if (n <= 0) throw validation_error("factor_int: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (divisible(n, p)) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    const Int trial_bound = 2000000;
    Int p = 5;
    int step = 2;  // 5,7,11,13,... wheel of 2/3
    while (p * p <= n && p <= trial_bound) {
        strip(p);
        p += step;
        step = 6 - step;
    }
    if (n > 1) {
        if (p * p > n || is_probable_prime(n)) {
            out.emplace_back(n, 1);
        } else {
            throw budget_error("factor_int: cofactor " + n.get_str() +
                               " exceeds trial-division bound");
        }
    }
    return out;
}

bool is_squarefree(const Int& n) {
    Int m = abs(n);
    if (m == 0) return false;
    for (const auto& [p, e] : factor_int(m))
        if (e > 1) return false;
    return true;
}

Int sqrt_mod(const Int& a0, const Int& p) {
    Int a = mod_floor(a0, p);
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powm(a, (p - 1) / 2, p) != 1)
        throw validation_error("sqrt_mod: not a quadratic residue");
    if (mod_floor(p, 4) == 3) return powm(a, (p + 1) / 4, p);
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned long s = 0;
    while (divisible(q, 2)) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
    Int m = s, c = powm(z, q, p), t = powm(a, q, p), r = powm(a, (q + 1) / 2, p);
    while (t != 1) {
        Int t2 = t;
        unsigned long i = 0;
        while (t2 != 1) {
            t2 = mod_floor(t2 * t2, p);
            ++i;
        }
        Int b = c;
        for (Int j = 0; j < m - Int(i) - 1; ++j) b = mod_floor(b * b, p);
        m = Int(i);
        c = mod_floor(b * b, p);
        t = mod_floor(t * c, p);
        r = mod_floor(r * b, p);
    }
    return r;
}

}  // namespace drl
