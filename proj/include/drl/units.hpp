#ifndef DRL_UNITS_HPP
#define DRL_UNITS_HPP

#include <optional>
#include <vector>

#include "drl/field.hpp"

namespace drl {

/* O^* = torsion x <fundamental> (the free part only for real quadratic K).
 * Torsion order is 2 except for Q(i) (4) and Q(sqrt -3) (6). */
struct UnitGroup {
    NumberField field;
    int torsion_order;
    FieldElement torsion_gen;
    std::optional<FieldElement> fundamental;

    std::vector<FieldElement> torsion_elements() const;
};

/* Fundamental unit found from the continued-fraction expansion of sqrt(d),
 * with the half-integral refinement for d = 1 mod 4. */
UnitGroup unit_group(const NumberField& k);

}  // namespace drl

#endif
