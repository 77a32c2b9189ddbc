#ifndef DRL_CYCLE_HPP
#define DRL_CYCLE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "drl/ideal.hpp"

namespace drl {

/* A cycle (modulus): finite part as prime-ideal exponents plus a set of real
 * places (0-based).  Real places carry exponent at most one. */
class Cycle {
  public:
    explicit Cycle(const NumberField& k) : field_(k) {}
    static Cycle trivial(const NumberField& k) { return Cycle(k); }
    Cycle(const NumberField& k, const std::map<PrimeIdeal, int>& fin,
          const std::set<int>& places);

    const NumberField& field() const { return field_; }
    const std::map<PrimeIdeal, int>& finite() const { return finite_; }
    const std::set<int>& real_places() const { return places_; }

    bool is_trivial() const { return finite_.empty() && places_.empty(); }
    int ord(const PrimeIdeal& P) const;
    bool marks(int place) const { return places_.count(place) > 0; }

    Ideal finite_part() const;
    Int finite_norm() const;

    Cycle with_finite_multiplied(const Ideal& d) const;
    Cycle divided_by_finite(const Ideal& d) const;  // requires d | finite part

    bool operator==(const Cycle& o) const {
        return field_ == o.field_ && finite_ == o.finite_ && places_ == o.places_;
    }
    bool operator!=(const Cycle& o) const { return !(*this == o); }

    std::string str() const;

  private:
    NumberField field_;
    std::map<PrimeIdeal, int> finite_;
    std::set<int> places_;
};

bool cycle_divides(const Cycle& a, const Cycle& b);  // a | b
Cycle cycle_gcd(const Cycle& a, const Cycle& b);
Cycle cycle_lcm(const Cycle& a, const Cycle& b);

/* All cycles dividing f, sorted by (finite norm, number of places, then a
 * deterministic tiebreak). */
std::vector<Cycle> cycle_divisors(const Cycle& f);

/* All ideals dividing the finite part of f, sorted by (norm, triple). */
std::vector<Ideal> finite_divisors(const Cycle& f);

/* Deterministic total order used for sorting divisor lists. */
bool cycle_less(const Cycle& a, const Cycle& b);

}  // namespace drl

#endif
