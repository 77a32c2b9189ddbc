#include "drl/residue.hpp"

namespace drl {

LocalResidue::LocalResidue(const PrimeIdeal& P, int e)
    : P_(P), mod_(ideal_pow(P.to_ideal(), static_cast<unsigned long>(e))) {
    if (e < 1) throw validation_error("local residue: exponent must be positive");
    c_ = mod_.c();
    a_ = mod_.a();
    b_ = mod_.b();
    Ideal pid = P.to_ideal();
    Int xmax = c_ * a_;
    for (Int y = 0; y < c_; ++y) {
        for (Int x = 0; x < xmax; ++x) {
            if (pid.contains(x, y)) continue;  // not a unit mod p^e
            int id = static_cast<int>(units_.size());
            units_.emplace_back(x, y);
            index_[{x, y}] = id;
        }
    }
}

std::pair<Int, Int> LocalResidue::reduce(const Int& x, const Int& y) const {
    Int yr = mod_floor(y, c_);
    Int kk = (y - yr) / c_;
    Int xr = mod_floor(x - kk * c_ * b_, c_ * a_);
    return {xr, yr};
}

int LocalResidue::project(const FieldElement& v) const {
    if (!v.is_integral())
        throw validation_error("residue projection of non-integral element");
    auto key = reduce(v.x().get_num(), v.y().get_num());
    auto it = index_.find(key);
    if (it == index_.end())
        throw validation_error("residue projection: element not coprime");
    return it->second;
}

int LocalResidue::mul(int i, int j) const {
    const auto& [x1, y1] = units_[i];
    const auto& [x2, y2] = units_[j];
    const NumberField& k = P_.field();
    Int yy = y1 * y2;
    auto key = reduce(x1 * x2 - k.omega_norm() * yy,
                      x1 * y2 + y1 * x2 + k.omega_trace() * yy);
    return index_.at(key);
}

int LocalResidue::identity() const { return index_.at(reduce(1, 0)); }

ResidueSystem::ResidueSystem(const Cycle& m) : mod_(m) {
    for (const auto& [P, e] : m.finite()) locals_.emplace_back(P, e);
    marked_.assign(m.real_places().begin(), m.real_places().end());
}

Int ResidueSystem::group_order() const {
    Int n = 1;
    for (const auto& l : locals_) n *= l.unit_count();
    for (size_t i = 0; i < marked_.size(); ++i) n *= 2;
    return n;
}

ResidueSystem::Elem ResidueSystem::identity() const {
    Elem e;
    for (const auto& l : locals_) e.local.push_back(l.identity());
    return e;
}

ResidueSystem::Elem ResidueSystem::project(const FieldElement& v) const {
    Elem e;
    for (const auto& l : locals_) e.local.push_back(l.project(v));
    for (size_t i = 0; i < marked_.size(); ++i)
        if (v.sign_at(marked_[i]) < 0) e.signs |= (1u << i);
    return e;
}

ResidueSystem::Elem ResidueSystem::mul(const Elem& x, const Elem& y) const {
    Elem e;
    for (size_t i = 0; i < locals_.size(); ++i)
        e.local.push_back(locals_[i].mul(x.local[i], y.local[i]));
    e.signs = x.signs ^ y.signs;
    return e;
}

long ResidueSystem::order_of(const Elem& x) const {
    Elem id = identity();
    Elem cur = x;
    long ord = 1;
    while (!(cur == id)) {
        cur = mul(cur, x);
        ++ord;
    }
    return ord;
}

Int ResidueSystem::subgroup_order(const std::vector<Elem>& gens) const {
    std::set<Elem> seen{identity()};
    std::vector<Elem> frontier{identity()};
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                Elem p = mul(e, g);
                if (seen.insert(p).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }
    return Int(seen.size());
}

}  // namespace drl
