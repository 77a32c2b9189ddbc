#include "drl/ray_class.hpp"

#include <algorithm>

#include "drl/units.hpp"

namespace drl {

std::vector<PrimeIdeal> primes_of_norm(const NumberField& k, const Int& n) {
    std::vector<PrimeIdeal> out;
    if (n < 2) return out;
    if (is_probable_prime(n)) {
        for (const auto& [P, e] : factor_rational_prime(k, n)) {
            (void)e;
            if (P.norm() == n) out.push_back(P);
        }
    } else {
        Int r;
        if (!k.is_rational() && is_square(n, &r) && is_probable_prime(r)) {
            for (const auto& [P, e] : factor_rational_prime(k, r)) {
                (void)e;
                if (P.norm() == n) out.push_back(P);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int RayClassGroup::class_of(const Ideal& a) const {
    if (a.field() != field_) throw validation_error("class_of: wrong field");
    if (!ideal_coprime(a, ffin_))
        throw validation_error("class_of: ideal not coprime to the modulus");
    for (size_t i = 0; i < reps_.size(); ++i)
        if (is_f_equivalent(a, reps_[i], cycle_).equivalent)
            return static_cast<int>(i);
    throw std::logic_error("class_of: ideal matched no class");
}

/* Exact rational over-approximations of the Minkowski bound (pi > 3). */
static Int minkowski_bound(const NumberField& k) {
    if (k.is_rational()) return 1;
    Int D = abs(k.discriminant());
    if (k.is_imaginary_quadratic()) return floor_div(2 * (isqrt(D) + 1), 3) + 1;
    return floor_div(isqrt(D) + 1, 2) + 1;
}

static int classify_against(const std::vector<Ideal>& reps, const Ideal& a,
                            const Cycle& f) {
    for (size_t i = 0; i < reps.size(); ++i)
        if (is_f_equivalent(a, reps[i], f).equivalent)
            return static_cast<int>(i);
    return -1;
}

RayClassGroup ray_class_group(const NumberField& k, const Cycle& f,
                              const Int& prime_norm_budget) {
    if (f.field() != k) throw validation_error("ray_class_group: wrong field");
    RayClassGroup G(k, f);
    Int budget = prime_norm_budget > 0 ? prime_norm_budget : Int(1000);

    if (f.is_trivial()) {
        // Every class contains an ideal of norm below the Minkowski bound.
        Int B = minkowski_bound(k);
        for (Int n = 1; n <= B; ++n) {
            for (const auto& I : ideals_of_norm(k, n))
                if (classify_against(G.reps_, I, f) < 0) G.reps_.push_back(I);
        }
    } else {
        Int h1 = k.is_rational()
                     ? Int(1)
                     : ray_class_group(k, Cycle::trivial(k), budget).order();
        ResidueSystem sys(f);
        UnitGroup U = unit_group(k);
        std::vector<ResidueSystem::Elem> unit_images{
            sys.project(U.torsion_gen)};
        if (U.fundamental) unit_images.push_back(sys.project(*U.fundamental));
        Int target = h1 * sys.group_order();
        Int uim = sys.subgroup_order(unit_images);
        if (!divisible(target, uim))
            throw std::logic_error("ray class order formula not integral");
        target /= uim;

        G.reps_.push_back(Ideal::one(k));
        for (Int n = 2; n <= budget && Int(G.reps_.size()) < target; ++n) {
            for (const auto& P : primes_of_norm(k, n)) {
                if (f.ord(P) > 0) continue;
                Ideal I = P.to_ideal();
                if (classify_against(G.reps_, I, f) < 0) G.reps_.push_back(I);
                if (Int(G.reps_.size()) == target) break;
            }
        }
        if (Int(G.reps_.size()) != target)
            throw budget_error(
                "ray class group over " + f.str() + ": found " +
                std::to_string(G.reps_.size()) + " of " + target.get_str() +
                " classes within prime norm budget " + budget.get_str());
    }

    int T = static_cast<int>(G.reps_.size());
    G.table_.n = T;
    G.table_.id = 0;
    G.table_.tab.assign(T * T, 0);
    for (int i = 0; i < T; ++i) {
        for (int j = i; j < T; ++j) {
            int c = classify_against(G.reps_, ideal_mul(G.reps_[i], G.reps_[j]),
                                     f);
            if (c < 0) throw std::logic_error("class table: product unmatched");
            G.table_.set(i, j, c);
            G.table_.set(j, i, c);
        }
    }

    // Structure: present the group on all class symbols.
    {
        std::vector<std::vector<Int>> rows;
        std::vector<Int> idrow(T, 0);
        idrow[0] = 1;
        rows.push_back(idrow);
        for (int i = 0; i < T; ++i)
            for (int j = i; j < T; ++j) {
                std::vector<Int> r(T, 0);
                r[i] += 1;
                r[j] += 1;
                r[G.table_.mul(i, j)] -= 1;
                rows.push_back(std::move(r));
            }
        G.pres_ = presentation_from_relations(T, rows);
        if (G.pres_.order() != T)
            throw std::logic_error("class presentation order mismatch");
        for (int i = 0; i < T; ++i) {
            std::vector<Int> e(T, 0);
            e[i] = 1;
            G.canon_.push_back(G.pres_.canonical(e));
        }
    }

    // Primes whose classes generate the group.
    {
        std::vector<char> closed(T, 0);
        closed[0] = 1;
        int covered = 1;
        auto close_with = [&](int cls) {
            std::vector<int> frontier;
            for (int i = 0; i < T; ++i)
                if (closed[i]) frontier.push_back(i);
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int x : frontier) {
                    int p = G.table_.mul(x, cls);
                    if (!closed[p]) {
                        closed[p] = 1;
                        ++covered;
                        next.push_back(p);
                    }
                }
                frontier = std::move(next);
            }
        };
        for (Int n = 2; n <= budget && covered < T; ++n) {
            for (const auto& P : primes_of_norm(k, n)) {
                if (f.ord(P) > 0) continue;
                int cls = G.class_of(P.to_ideal());
                if (!closed[cls]) {
                    G.gen_primes_.push_back(P);
                    close_with(cls);
                }
                if (covered == T) break;
            }
        }
        if (covered < T)
            throw budget_error("ray class group over " + f.str() +
                               ": no generating primes within budget " +
                               budget.get_str());
    }
    return G;
}

RayClassProjection ray_class_projection(const RayClassGroup& src,
                                        const Cycle& target_cycle) {
    if (!cycle_divides(target_cycle, src.cycle()))
        throw validation_error("projection target does not divide the modulus");
    RayClassProjection pr;
    pr.target = std::make_shared<RayClassGroup>(
        ray_class_group(src.field(), target_cycle));
    for (int i = 0; i < src.size(); ++i)
        pr.map.push_back(pr.target->class_of(src.rep(i)));
    return pr;
}

static std::vector<int> compose_perm(const std::vector<int>& s,
                                     const std::vector<int>& t) {
    std::vector<int> r(s.size());
    for (size_t i = 0; i < s.size(); ++i) r[i] = s[t[i]];
    return r;
}

static bool is_identity_perm(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

Cycle conductor_of_action(const RayClassGroup& rcg,
                          const std::vector<std::vector<int>>& action) {
    int T = rcg.size();
    if (static_cast<int>(action.size()) != T)
        throw validation_error("conductor: action size mismatch");
    size_t npts = action.empty() ? 0 : action[0].size();
    for (const auto& p : action) {
        if (p.size() != npts)
            throw validation_error("conductor: ragged permutation list");
        std::vector<char> seen(npts, 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(npts) || seen[v])
                throw validation_error("conductor: action is not by permutations");
            seen[v] = 1;
        }
    }
    for (int i = 0; i < T; ++i)
        for (int j = 0; j < T; ++j)
            if (action[rcg.mul(i, j)] != compose_perm(action[i], action[j]))
                throw validation_error("conductor: action is not a homomorphism");

    std::vector<char> in_kernel(T, 0);
    for (int i = 0; i < T; ++i) in_kernel[i] = is_identity_perm(action[i]);

    std::vector<Cycle> divs = cycle_divisors(rcg.cycle());
    std::vector<Cycle> working;
    for (const auto& f0 : divs) {
        RayClassProjection pr = ray_class_projection(rcg, f0);
        bool ok = true;
        for (int i = 0; i < T && ok; ++i)
            if (pr.map[i] == 0 && !in_kernel[i]) ok = false;
        if (ok) working.push_back(f0);
    }
    if (working.empty())
        throw std::logic_error("conductor: no divisor works (m itself must)");
    // Divisor-minimality: the first in sorted order must divide all others.
    for (const auto& w : working)
        if (!cycle_divides(working.front(), w))
            throw std::logic_error("conductor: minimal cycle is not unique");
    return working.front();
}

}  // namespace drl
