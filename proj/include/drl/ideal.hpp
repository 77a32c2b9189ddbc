#ifndef DRL_IDEAL_HPP
#define DRL_IDEAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drl/field.hpp"

namespace drl {

/* A nonzero integral ideal in canonical module normal form
 * c * (Z a + Z (b + omega)) with c >= 1, a >= 1, 0 <= b < a and
 * a | N(b + omega).  Equal ideals have identical triples.  Over Q the form
 * degenerates to (c) with a = 1, b = 0. */
class Ideal {
  public:
    static Ideal one(const NumberField& k);
    static Ideal of_integer(const NumberField& k, const Int& n);
    static Ideal principal(const FieldElement& g);
    static Ideal from_triple(const NumberField& k, const Int& c, const Int& a,
                             const Int& b);
    /* Canonicalize the Z-lattice spanned by (x, y) pairs meaning x + y*omega.
     * The span must be an O-module of full rank. */
    static Ideal from_generators(const NumberField& k,
                                 const std::vector<std::pair<Int, Int>>& gens);

    const NumberField& field() const { return field_; }
    const Int& c() const { return c_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    Int norm() const;
    bool is_one() const { return c_ == 1 && a_ == 1; }
    bool contains(const Int& x, const Int& y) const;
    bool contains(const FieldElement& e) const;

    /* Z-basis vectors (c*a, 0) and (c*b, c). */
    std::pair<Int, Int> basis1() const { return {c_ * a_, Int(0)}; }
    std::pair<Int, Int> basis2() const { return {c_ * b_, c_}; }

    bool operator==(const Ideal& o) const {
        return field_ == o.field_ && c_ == o.c_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const Ideal& o) const { return !(*this == o); }
    /* Deterministic order: by (norm, c, a, b). */
    bool operator<(const Ideal& o) const;

    std::string str() const;

  private:
    Ideal() = default;
    NumberField field_;
    Int c_ = 1, a_ = 1, b_ = 0;
};

enum class PrimeType { split, inert, ramified };

/* A maximal ideal of O.  Split and ramified primes store the root r of the
 * minimal polynomial of omega mod p, i.e. omega = r (mod P).  Over Q every
 * prime is recorded as inert. */
class PrimeIdeal {
  public:
    PrimeIdeal(const NumberField& k, const Int& p, PrimeType type,
               const Int& root);

    const NumberField& field() const { return field_; }
    const Int& p() const { return p_; }
    PrimeType type() const { return type_; }
    const Int& root() const { return root_; }

    Int norm() const;
    int residue_degree() const;
    int ramification_index() const { return type_ == PrimeType::ramified ? 2 : 1; }
    Ideal to_ideal() const;
    PrimeIdeal conj() const;

    bool operator==(const PrimeIdeal& o) const {
        return field_ == o.field_ && p_ == o.p_ && type_ == o.type_ &&
               root_ == o.root_;
    }
    bool operator!=(const PrimeIdeal& o) const { return !(*this == o); }
    bool operator<(const PrimeIdeal& o) const;

    std::string str() const;

  private:
    NumberField field_;
    Int p_;
    PrimeType type_;
    Int root_;  // 0 unless split/ramified over a quadratic field
};

/* Splitting of a rational prime: [(P, 2)] ramified, [(P, 1), (P', 1)] split,
 * [(P, 1)] inert; the product of the factors is (p). */
std::vector<std::pair<PrimeIdeal, int>> factor_rational_prime(
    const NumberField& k, const Int& p);

Ideal ideal_mul(const Ideal& x, const Ideal& y);
Ideal ideal_pow(const Ideal& x, unsigned long e);
Ideal ideal_conj(const Ideal& x);
/* gcd(x, y) = x + y; lcm(x, y) = x*y / gcd(x, y). */
Ideal ideal_gcd(const Ideal& x, const Ideal& y);
Ideal ideal_lcm(const Ideal& x, const Ideal& y);
/* Exact quotient x / y; throws validation_error unless y | x. */
Ideal ideal_div(const Ideal& x, const Ideal& y);
bool ideal_divides(const Ideal& x, const Ideal& y);  // x | y
bool ideal_coprime(const Ideal& x, const Ideal& y);

Int ideal_norm(const Ideal& x);

/* Exponent of P in x (exact, via repeated division). */
int valuation(const Ideal& x, const PrimeIdeal& P);

/* Unique factorization into primes, sorted; recombines to x exactly. */
std::vector<std::pair<PrimeIdeal, int>> ideal_factor(const Ideal& x);
Ideal ideal_from_factorization(
    const NumberField& k, const std::vector<std::pair<PrimeIdeal, int>>& f);

/* Bounded exhaustive lattice search for a generator.  Real quadratic fields
 * scan one fundamental-unit window, which always contains a generator of a
 * principal ideal. */
std::optional<FieldElement> is_principal(const Ideal& x);

/* All ideals of the given norm, ordered by (c, b). */
std::vector<Ideal> ideals_of_norm(const NumberField& k, const Int& n);

}  // namespace drl

#endif
