#ifndef DRL_F_EQUIV_HPP
#define DRL_F_EQUIV_HPP

#include <optional>

#include "drl/cycle.hpp"
#include "drl/residue.hpp"

namespace drl {

/* ord_P(x) for nonzero x in K^*, via the fractional ideal (x). */
int element_valuation(const FieldElement& x, const PrimeIdeal& P);

struct FEquivalence {
    enum class Failure { none, not_principal, no_unit };
    bool equivalent = false;
    std::optional<FieldElement> witness;
    Failure failure = Failure::none;
};

/* Decides whether x*a = b is solvable with x positive at the marked real
 * places and ord_P(x - 1) + ord_P(a) >= ord_P(f) at all finite P.  The
 * fundamental unit is enumerated modulo the order of its image in
 * (O/m')^* x {signs}, which makes the candidate set finite and complete. */
FEquivalence is_f_equivalent(const Ideal& a, const Ideal& b, const Cycle& f);

/* Independent witness re-check: x*a = b plus sign and valuation conditions. */
bool check_f_witness(const Ideal& a, const Ideal& b, const Cycle& f,
                     const FieldElement& x);

}  // namespace drl

#endif
