#include "drl/f_equiv.hpp"

#include "drl/units.hpp"

namespace drl {

int element_valuation(const FieldElement& x, const PrimeIdeal& P) {
    if (x.is_zero()) throw validation_error("valuation of zero element");
    const NumberField& k = x.field();
    Int den = lcm(Int(x.x().get_den()), Int(x.y().get_den()));
    Int nx = Int(x.x().get_num()) * (den / Int(x.x().get_den()));
    Int ny = Int(x.y().get_num()) * (den / Int(x.y().get_den()));
    int v = valuation(Ideal::principal(FieldElement(k, Rat(nx), Rat(ny))), P);
    if (den != 1) v -= valuation(Ideal::of_integer(k, den), P);
    return v;
}

/* The sign and congruence conditions on a candidate x (x*a = b assumed). */
static bool satisfies_conditions(const Ideal& a, const Cycle& f,
                                 const FieldElement& x) {
    for (int pl : f.real_places())
        if (x.sign_at(pl) <= 0) return false;
    FieldElement xm1 = x - FieldElement::one(x.field());
    if (xm1.is_zero()) return true;  // ord(0) = +infinity
    for (const auto& [P, e] : f.finite()) {
        int v = element_valuation(xm1, P) + valuation(a, P);
        if (v < e) return false;
    }
    return true;
}

bool check_f_witness(const Ideal& a, const Ideal& b, const Cycle& f,
                     const FieldElement& x) {
    if (x.is_zero()) return false;
    const NumberField& k = a.field();
    Int den = lcm(Int(x.x().get_den()), Int(x.y().get_den()));
    Int nx = Int(x.x().get_num()) * (den / Int(x.x().get_den()));
    Int ny = Int(x.y().get_num()) * (den / Int(x.y().get_den()));
    Ideal lhs = ideal_mul(Ideal::principal(FieldElement(k, Rat(nx), Rat(ny))), a);
    Ideal rhs = ideal_mul(Ideal::of_integer(k, den), b);
    if (lhs != rhs) return false;
    return satisfies_conditions(a, f, x);
}

FEquivalence is_f_equivalent(const Ideal& a, const Ideal& b, const Cycle& f) {
    const NumberField& k = a.field();
    if (b.field() != k || f.field() != k)
        throw validation_error("f-equivalence: mixed fields");

    Ideal num = ideal_mul(b, ideal_conj(a));
    auto g0 = is_principal(num);
    if (!g0)
        return {false, std::nullopt, FEquivalence::Failure::not_principal};
    FieldElement base =
        *g0 / FieldElement::integer(k, a.norm());  // generates b * a^{-1}

    UnitGroup U = unit_group(k);
    std::vector<FieldElement> torsion = U.torsion_elements();

    long eps_order = 1;
    std::optional<FieldElement> eps;
    if (k.is_real_quadratic()) {
        eps = U.fundamental;
        // Exponents large enough that multiplying x by a unit congruent to 1
        // preserves every condition: ord_P(f) + max(0, ord_P(a) - ord_P(b)).
        std::map<PrimeIdeal, int> fin;
        for (const auto& [P, e] : f.finite())
            fin[P] = e + std::max(0, valuation(a, P) - valuation(b, P));
        ResidueSystem sys(Cycle(k, fin, f.real_places()));
        eps_order = sys.order_of(sys.project(*eps));
    }

    FieldElement epow = FieldElement::one(k);
    for (long kk = 0; kk < eps_order; ++kk) {
        for (const auto& u : torsion) {
            FieldElement x = u * epow * base;
            if (satisfies_conditions(a, f, x))
                return {true, x, FEquivalence::Failure::none};
        }
        if (eps) epow = epow * *eps;
    }
    return {false, std::nullopt, FEquivalence::Failure::no_unit};
}

}  // namespace drl
