#include "drl/cycle.hpp"

#include <algorithm>

namespace drl {

Cycle::Cycle(const NumberField& k, const std::map<PrimeIdeal, int>& fin,
             const std::set<int>& places)
    : field_(k), finite_(fin), places_(places) {
    for (const auto& [P, e] : finite_) {
        if (P.field() != k) throw validation_error("cycle: prime of wrong field");
        if (e <= 0) throw validation_error("cycle: exponents must be positive");
    }
    for (int pl : places_)
        if (pl < 0 || pl >= k.real_places())
            throw validation_error("cycle: no such real place");
}

int Cycle::ord(const PrimeIdeal& P) const {
    auto it = finite_.find(P);
    return it == finite_.end() ? 0 : it->second;
}

Ideal Cycle::finite_part() const {
    Ideal acc = Ideal::one(field_);
    for (const auto& [P, e] : finite_)
        acc = ideal_mul(acc, ideal_pow(P.to_ideal(), e));
    return acc;
}

Int Cycle::finite_norm() const {
    Int n = 1;
    for (const auto& [P, e] : finite_) {
        for (int i = 0; i < e; ++i) n *= P.norm();
    }
    return n;
}

Cycle Cycle::with_finite_multiplied(const Ideal& d) const {
    std::map<PrimeIdeal, int> fin = finite_;
    for (const auto& [P, e] : ideal_factor(d)) fin[P] += e;
    return Cycle(field_, fin, places_);
}

Cycle Cycle::divided_by_finite(const Ideal& d) const {
    std::map<PrimeIdeal, int> fin = finite_;
    for (const auto& [P, e] : ideal_factor(d)) {
        auto it = fin.find(P);
        if (it == fin.end() || it->second < e)
            throw validation_error("cycle division: not a divisor");
        it->second -= e;
        if (it->second == 0) fin.erase(it);
    }
    return Cycle(field_, fin, places_);
}

std::string Cycle::str() const {
    std::string s;
    if (finite_.empty()) {
        s = "1";
    } else if (field_.is_rational()) {
        s = finite_part().c().get_str();
    } else {
        s = "[";
        bool first = true;
        for (const auto& [P, e] : finite_) {
            if (!first) s += ",";
            first = false;
            s += P.str();
            if (e > 1) s += "^" + std::to_string(e);
        }
        s += "]";
    }
    for (int pl : places_)
        s += field_.is_rational() ? "*inf" : ("*inf" + std::to_string(pl + 1));
    return s;
}

bool cycle_divides(const Cycle& a, const Cycle& b) {
    if (a.field() != b.field()) throw validation_error("cycles of mixed fields");
    for (const auto& [P, e] : a.finite())
        if (b.ord(P) < e) return false;
    for (int pl : a.real_places())
        if (!b.marks(pl)) return false;
    return true;
}

Cycle cycle_gcd(const Cycle& a, const Cycle& b) {
    if (a.field() != b.field()) throw validation_error("cycles of mixed fields");
    std::map<PrimeIdeal, int> fin;
    for (const auto& [P, e] : a.finite()) {
        int m = std::min(e, b.ord(P));
        if (m > 0) fin[P] = m;
    }
    std::set<int> pl;
    for (int x : a.real_places())
        if (b.marks(x)) pl.insert(x);
    return Cycle(a.field(), fin, pl);
}

Cycle cycle_lcm(const Cycle& a, const Cycle& b) {
    if (a.field() != b.field()) throw validation_error("cycles of mixed fields");
    std::map<PrimeIdeal, int> fin = a.finite();
    for (const auto& [P, e] : b.finite()) {
        auto it = fin.find(P);
        fin[P] = it == fin.end() ? e : std::max(it->second, e);
    }
    std::set<int> pl = a.real_places();
    pl.insert(b.real_places().begin(), b.real_places().end());
    return Cycle(a.field(), fin, pl);
}

bool cycle_less(const Cycle& a, const Cycle& b) {
    Int na = a.finite_norm(), nb = b.finite_norm();
    if (na != nb) return na < nb;
    if (a.real_places().size() != b.real_places().size())
        return a.real_places().size() < b.real_places().size();
    Ideal fa = a.finite_part(), fb = b.finite_part();
    if (fa != fb) return fa < fb;
    return a.real_places() < b.real_places();
}

std::vector<Ideal> finite_divisors(const Cycle& f) {
    std::vector<std::pair<PrimeIdeal, int>> ps(f.finite().begin(),
                                               f.finite().end());
    std::vector<Ideal> out{Ideal::one(f.field())};
    for (const auto& [P, e] : ps) {
        std::vector<Ideal> next;
        Ideal pw = Ideal::one(f.field());
        for (int i = 0; i <= e; ++i) {
            for (const auto& d : out) next.push_back(ideal_mul(d, pw));
            if (i < e) pw = ideal_mul(pw, P.to_ideal());
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cycle> cycle_divisors(const Cycle& f) {
    std::vector<Cycle> out;
    std::vector<int> places(f.real_places().begin(), f.real_places().end());
    size_t nsub = size_t(1) << places.size();
    for (const auto& d : finite_divisors(f)) {
        Cycle base(f.field());
        std::map<PrimeIdeal, int> fin;
        for (const auto& [P, e] : ideal_factor(d)) fin[P] = e;
        for (size_t mask = 0; mask < nsub; ++mask) {
            std::set<int> pl;
            for (size_t i = 0; i < places.size(); ++i)
                if (mask & (size_t(1) << i)) pl.insert(places[i]);
            out.emplace_back(f.field(), fin, pl);
        }
    }
    std::sort(out.begin(), out.end(), cycle_less);
    return out;
}

}  // namespace drl
