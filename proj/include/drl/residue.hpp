#ifndef DRL_RESIDUE_HPP
#define DRL_RESIDUE_HPP

#include <map>
#include <set>
#include <vector>

#include "drl/cycle.hpp"

namespace drl {

/* (O / p^e)^* for one prime power, with residues enumerated exhaustively in
 * the HNF transversal of the lattice p^e. */
class LocalResidue {
  public:
    LocalResidue(const PrimeIdeal& P, int e);

    int unit_count() const { return static_cast<int>(units_.size()); }
    /* Index of the residue of an element coprime to P; the element must be
     * integral. */
    int project(const FieldElement& v) const;
    int mul(int i, int j) const;
    int identity() const;

  private:
    std::pair<Int, Int> reduce(const Int& x, const Int& y) const;
    PrimeIdeal P_;
    Ideal mod_;
    Int c_, a_, b_;
    std::vector<std::pair<Int, Int>> units_;
    std::map<std::pair<Int, Int>, int> index_;
};

/* The group (O/m)^* x {+-1}^{marked places} for a cycle m, built by CRT over
 * the prime powers of the finite part. */
class ResidueSystem {
  public:
    explicit ResidueSystem(const Cycle& m);

    struct Elem {
        std::vector<int> local;
        unsigned signs = 0;
        bool operator<(const Elem& o) const {
            if (local != o.local) return local < o.local;
            return signs < o.signs;
        }
        bool operator==(const Elem& o) const {
            return local == o.local && signs == o.signs;
        }
    };

    const Cycle& modulus() const { return mod_; }
    Int group_order() const;

    Elem identity() const;
    Elem project(const FieldElement& v) const;
    Elem mul(const Elem& x, const Elem& y) const;
    long order_of(const Elem& x) const;
    Int subgroup_order(const std::vector<Elem>& gens) const;

  private:
    Cycle mod_;
    std::vector<LocalResidue> locals_;
    std::vector<int> marked_;
};

}  // namespace drl

#endif
