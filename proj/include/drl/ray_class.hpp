#ifndef DRL_RAY_CLASS_HPP
#define DRL_RAY_CLASS_HPP

#include <memory>

#include "drl/f_equiv.hpp"
#include "drl/monoid_table.hpp"

namespace drl {

/* Cl(f): ideals coprime to f modulo f-equivalence.  Representatives are the
 * first ideals discovered in norm order; class 0 is the identity (1).
 * Completeness is certified exactly: for the trivial cycle by enumeration up
 * to the Minkowski bound, otherwise by the unit exact sequence
 *   O^* -> (O/f)^* x {signs} -> Cl(f) -> Cl(1) -> 1. */
class RayClassGroup {
  public:
    const NumberField& field() const { return field_; }
    const Cycle& cycle() const { return cycle_; }
    Int order() const { return Int(reps_.size()); }
    int size() const { return static_cast<int>(reps_.size()); }

    const std::vector<Ideal>& reps() const { return reps_; }
    const Ideal& rep(int i) const { return reps_[i]; }
    int identity() const { return 0; }
    int mul(int i, int j) const { return table_.mul(i, j); }
    const MonoidTable& table() const { return table_; }

    /* Elementary divisors d1 | d2 | ... and canonical exponent vectors. */
    const std::vector<Int>& divisors() const { return pres_.divisors; }
    const std::vector<Int>& canonical(int cls) const { return canon_[cls]; }

    /* Class of an ideal coprime to the finite part of f. */
    int class_of(const Ideal& a) const;

    /* Prime ideals whose classes generate the group, in norm order. */
    const std::vector<PrimeIdeal>& generating_primes() const {
        return gen_primes_;
    }

    friend RayClassGroup ray_class_group(const NumberField& k, const Cycle& f,
                                         const Int& prime_norm_budget);

  private:
    NumberField field_;
    Cycle cycle_;
    Ideal ffin_;
    std::vector<Ideal> reps_;
    MonoidTable table_;
    AbelianPresentation pres_;
    std::vector<std::vector<Int>> canon_;
    std::vector<PrimeIdeal> gen_primes_;

    RayClassGroup(const NumberField& k, const Cycle& f)
        : field_(k), cycle_(f), ffin_(f.finite_part()) {}
};

RayClassGroup ray_class_group(const NumberField& k, const Cycle& f,
                              const Int& prime_norm_budget = 0);

/* Cl(f) -> Cl(f'), f' | f, sending the class of an ideal to its class. */
struct RayClassProjection {
    std::shared_ptr<RayClassGroup> target;
    std::vector<int> map;  // source class -> target class
};
RayClassProjection ray_class_projection(const RayClassGroup& src,
                                        const Cycle& target_cycle);

/* Minimal cycle f0 | m such that the homomorphism `action` factors through
 * Cl(m) -> Cl(f0).  `action[c]` is the permutation of a finite set attached
 * to class c; the map must be a homomorphism. */
Cycle conductor_of_action(const RayClassGroup& rcg,
                          const std::vector<std::vector<int>>& action);

/* All primes of norm n in increasing (root) order; empty unless n is p or
 * p^2 for the right splitting type. */
std::vector<PrimeIdeal> primes_of_norm(const NumberField& k, const Int& n);

}  // namespace drl

#endif
