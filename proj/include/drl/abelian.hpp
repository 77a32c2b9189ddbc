#ifndef DRL_ABELIAN_HPP
#define DRL_ABELIAN_HPP

#include <vector>

#include "drl/numeric.hpp"

namespace drl {

/* Finite abelian group presented by generators and relations, normalized by
 * Smith reduction.  Elements are exponent vectors over the generators; their
 * canonical form is the coordinate vector over the elementary divisors. */
struct AbelianPresentation {
    int ngens = 0;
    std::vector<Int> divisors;               // nontrivial, d1 | d2 | ...
    std::vector<std::vector<Int>> transform; // ngens x ngens column transform
    std::vector<int> positions;              // coordinates carrying divisors

    Int order() const;
    std::vector<Int> canonical(const std::vector<Int>& raw) const;
};

/* rows are relation vectors over ngens generators; the quotient must be
 * finite. */
AbelianPresentation presentation_from_relations(
    int ngens, const std::vector<std::vector<Int>>& rows);

}  // namespace drl

#endif
