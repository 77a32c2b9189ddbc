#include "drl/units.hpp"

namespace drl {

std::vector<FieldElement> UnitGroup::torsion_elements() const {
    std::vector<FieldElement> out;
    FieldElement u = FieldElement::one(field);
    for (int i = 0; i < torsion_order; ++i) {
        out.push_back(u);
        u = u * torsion_gen;
    }
    return out;
}

/* Fundamental solution of p^2 - d q^2 = +-1 via the period of the continued
 * fraction of sqrt(d); returns (p, q). */
static std::pair<Int, Int> pell_pm1(const Int& d) {
    Int a0 = isqrt(d);
    Int P = 0, Q = 1, a = a0;
    Int pk = a0, pk1 = 1;  // p_{k}, p_{k-1}
    Int qk = 1, qk1 = 0;
    while (true) {
        P = a * Q - P;
        Q = (d - P * P) / Q;
        if (Q == 1) {
            // period closes after this step; the previous convergent solves it
            break;
        }
        a = (a0 + P) / Q;
        Int pn = a * pk + pk1, qn = a * qk + qk1;
        pk1 = pk;
        pk = pn;
        qk1 = qk;
        qk = qn;
    }
    return {pk, qk};
}

static FieldElement real_fundamental(const NumberField& k) {
    const Int& d = k.d();
    auto [u1, v1] = pell_pm1(d);
    if (mod_floor(d, 4) == 1) {
        // A half-integral unit (u + v sqrt d)/2 of norm e satisfies
        // 2 v1 = v (d v^2 + 3 e) and 2 u1 = u (d v^2 + e) when cubing to the
        // Z[sqrt d] fundamental solution.
        for (Int v = 1; v * (d * v * v - 3) <= 2 * v1; ++v) {
            for (int e : {-1, 1}) {
                if (v * (d * v * v + 3 * e) != 2 * v1) continue;
                Int u2 = d * v * v + 4 * e, u;
                if (!is_square(u2, &u)) continue;
                if (u * (d * v * v + e) != 2 * u1) continue;
                // (u + v sqrt d)/2 = (u - v)/2 + v*omega
                return FieldElement(k, Rat((u - v) / 2), Rat(v));
            }
        }
        // No half-integral unit: sqrt(d) = 2*omega - 1.
        return FieldElement(k, Rat(u1 - v1), Rat(2 * v1));
    }
    return FieldElement(k, Rat(u1), Rat(v1));
}

UnitGroup unit_group(const NumberField& k) {
    FieldElement minus_one = FieldElement::integer(k, -1);
    if (k.is_rational()) return {k, 2, minus_one, std::nullopt};
    if (k.is_real_quadratic()) return {k, 2, minus_one, real_fundamental(k)};

    // Imaginary quadratic: enumerate norm-1 integers, 4 = (2x+ty)^2 + |D| y^2.
    std::vector<FieldElement> tors;
    Int Dabs = -k.discriminant();
    Int t = k.omega_trace();
    for (Int y = -2; y <= 2; ++y) {
        Int rem = 4 - Dabs * y * y;
        if (rem < 0) continue;
        Int U;
        if (!is_square(rem, &U)) continue;
        for (int su : {1, -1}) {
            Int num = su * U - t * y;
            if (!divisible(num, 2)) continue;
            FieldElement cand(k, Rat(num / 2), Rat(y));
            if (cand.norm() != 1) continue;
            bool seen = false;
            for (const auto& e : tors) seen = seen || e == cand;
            if (!seen) tors.push_back(cand);
        }
    }
    int n = static_cast<int>(tors.size());
    if (n != 2 && n != 4 && n != 6)
        throw std::logic_error("imaginary quadratic torsion count");
    // generator: any element of full order, smallest (y, x) for determinism
    std::sort(tors.begin(), tors.end(), [](const auto& l, const auto& r) {
        if (l.y() != r.y()) return l.y() < r.y();
        return l.x() < r.x();
    });
    for (const auto& cand : tors) {
        FieldElement u = cand;
        int ord = 1;
        while (!u.is_one()) {
            u = u * cand;
            ++ord;
        }
        if (ord == n) return {k, n, cand, std::nullopt};
    }
    throw std::logic_error("imaginary quadratic torsion not cyclic");
}

}  // namespace drl
