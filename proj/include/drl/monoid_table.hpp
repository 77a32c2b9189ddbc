#ifndef DRL_MONOID_TABLE_HPP
#define DRL_MONOID_TABLE_HPP

#include <optional>
#include <vector>

#include "drl/abelian.hpp"

namespace drl {

/* A finite commutative monoid as a multiplication table. */
struct MonoidTable {
    int n = 0;
    int id = 0;
    std::vector<int> tab;  // n * n, row-major

    int mul(int i, int j) const { return tab[i * n + j]; }
    void set(int i, int j, int v) { tab[i * n + j] = v; }

    std::vector<int> units() const;
    std::vector<int> idempotents() const;
    bool is_unit(int i) const;

    /* Throws validation_error unless the table is a commutative monoid with
     * the stated identity. */
    void validate() const;
};

MonoidTable mult_monoid_mod(long m);            // (Z/m, *)
MonoidTable mult_monoid_mod_negation(long m);   // (Z/m, *) / (x ~ -x)

/* Table-preserving bijection (identity to identity), or nullopt.  Backtracks
 * over generator images, pruned by element invariants. */
std::optional<std::vector<int>> monoid_isomorphism(const MonoidTable& A,
                                                   const MonoidTable& B);

/* Elementary divisors of a finite abelian group given by its table. */
std::vector<Int> abelian_invariants(const MonoidTable& g);

}  // namespace drl

#endif
