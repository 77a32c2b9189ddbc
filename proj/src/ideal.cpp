#include "drl/ideal.hpp"

#include <algorithm>

#include "drl/units.hpp"

namespace drl {

Ideal Ideal::one(const NumberField& k) { return from_triple(k, 1, 1, 0); }

Ideal Ideal::of_integer(const NumberField& k, const Int& n) {
    if (n == 0) throw validation_error("zero ideal");
    return from_triple(k, abs(n), 1, 0);
}

Ideal Ideal::from_triple(const NumberField& k, const Int& c, const Int& a,
                         const Int& b) {
    if (c < 1 || a < 1 || b < 0 || b >= a)
        throw validation_error("ideal triple out of canonical range");
    if (k.is_rational()) {
        if (a != 1 || b != 0)
            throw validation_error("rational ideal must have a = 1, b = 0");
    } else {
        Int nb = b * b + k.omega_trace() * b + k.omega_norm();
        if (!divisible(nb, a))
            throw validation_error("ideal triple: a does not divide N(b + omega)");
    }
    Ideal I;
    I.field_ = k;
    I.c_ = c;
    I.a_ = a;
    I.b_ = b;
    return I;
}

Ideal Ideal::principal(const FieldElement& g) {
    if (g.is_zero()) throw validation_error("zero ideal");
    if (!g.is_integral())
        throw validation_error("principal ideal of a non-integral element");
    const NumberField& k = g.field();
    Int x = g.x().get_num(), y = g.y().get_num();
    if (k.is_rational()) return of_integer(k, x);
    const Int& t = k.omega_trace();
    const Int& n = k.omega_norm();
    return from_generators(k, {{x, y}, {-n * y, x + t * y}});
}

Ideal Ideal::from_generators(const NumberField& k,
                             const std::vector<std::pair<Int, Int>>& gens) {
    if (k.is_rational()) {
        Int g = 0;
        for (const auto& [x, y] : gens) {
            if (y != 0) throw validation_error("rational lattice with omega part");
            g = gcd(g, x);
        }
        if (g == 0) throw validation_error("zero ideal");
        return of_integer(k, g);
    }
    Int A = 0, wx = 0, wy = 0;
    for (const auto& [x, y] : gens) {
        if (y == 0) {
            A = gcd(A, x);
        } else if (wy == 0) {
            wx = x;
            wy = y;
        } else {
            Int g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                       wy.get_mpz_t(), y.get_mpz_t());
            Int comp = (y / g) * wx - (wy / g) * x;  // y-component cancels
            A = gcd(A, comp);
            wx = s * wx + t * x;
            wy = g;
        }
    }
    if (wy < 0) {
        wy = -wy;
        wx = -wx;
    }
    A = abs(A);
    if (wy == 0 || A == 0)
        throw validation_error("lattice does not have full rank");
    if (!divisible(A, wy) || !divisible(wx, wy))
        throw validation_error("lattice is not an O-module");
    Int a = A / wy;
    return from_triple(k, wy, a, mod_floor(wx / wy, a));
}

Int Ideal::norm() const {
    if (field_.is_rational()) return c_;
    return c_ * c_ * a_;
}

bool Ideal::contains(const Int& x, const Int& y) const {
    if (field_.is_rational()) return y == 0 && divisible(x, c_);
    return divisible(y, c_) && divisible(x - y * b_, c_ * a_);
}

bool Ideal::contains(const FieldElement& e) const {
    if (e.field() != field_) throw validation_error("mixed-field membership");
    if (!e.is_integral()) return false;
    return contains(e.x().get_num(), e.y().get_num());
}

bool Ideal::operator<(const Ideal& o) const {
    Int n1 = norm(), n2 = o.norm();
    if (n1 != n2) return n1 < n2;
    if (c_ != o.c_) return c_ < o.c_;
    if (a_ != o.a_) return a_ < o.a_;
    return b_ < o.b_;
}

std::string Ideal::str() const {
    if (field_.is_rational() || a_ == 1) return "(" + c_.get_str() + ")";
    std::string inner = "(" + a_.get_str() + ", " + b_.get_str() + "+w)";
    if (c_ == 1) return inner;
    return c_.get_str() + "*" + inner;
}

/* ---------------- prime ideals ---------------- */

PrimeIdeal::PrimeIdeal(const NumberField& k, const Int& p, PrimeType type,
                       const Int& root)
    : field_(k), p_(p), type_(type), root_(root) {
    if (p < 2 || !is_probable_prime(p))
        throw validation_error("prime ideal over non-prime " + p.get_str());
    if (k.is_rational() && type != PrimeType::inert)
        throw validation_error("rational primes are recorded as inert");
    if (type == PrimeType::split || type == PrimeType::ramified) {
        Int f = root * root - k.omega_trace() * root + k.omega_norm();
        if (root < 0 || root >= p || !divisible(f, p))
            throw validation_error("prime ideal root is not a root mod p");
    }
}

Int PrimeIdeal::norm() const {
    if (field_.is_rational()) return p_;
    return type_ == PrimeType::inert ? p_ * p_ : p_;
}

int PrimeIdeal::residue_degree() const {
    return (!field_.is_rational() && type_ == PrimeType::inert) ? 2 : 1;
}

Ideal PrimeIdeal::to_ideal() const {
    if (field_.is_rational() || type_ == PrimeType::inert)
        return Ideal::of_integer(field_, p_);
    return Ideal::from_triple(field_, 1, p_, mod_floor(-root_, p_));
}

PrimeIdeal PrimeIdeal::conj() const {
    if (type_ != PrimeType::split) return *this;
    return PrimeIdeal(field_, p_, type_,
                      mod_floor(field_.omega_trace() - root_, p_));
}

bool PrimeIdeal::operator<(const PrimeIdeal& o) const {
    Int n1 = norm(), n2 = o.norm();
    if (n1 != n2) return n1 < n2;
    if (p_ != o.p_) return p_ < o.p_;
    if (type_ != o.type_) return static_cast<int>(type_) < static_cast<int>(o.type_);
    return root_ < o.root_;
}

std::string PrimeIdeal::str() const {
    std::string s = "p" + p_.get_str();
    if (type_ == PrimeType::split) s += "r" + root_.get_str();
    return s;
}

std::vector<std::pair<PrimeIdeal, int>> factor_rational_prime(
    const NumberField& k, const Int& p) {
    if (p < 2 || !is_probable_prime(p))
        throw validation_error("factor_rational_prime: " + p.get_str() +
                               " is not prime");
    if (k.is_rational())
        return {{PrimeIdeal(k, p, PrimeType::inert, 0), 1}};

    const Int& d = k.d();
    const Int& t = k.omega_trace();
    if (divisible(k.discriminant(), p)) {
        Int r;
        if (p == 2)
            r = mod_floor(d, 2);
        else if (t == 1)
            r = (p + 1) / 2;  // double root 1/2 of x^2 - x - (d-1)/4
        else
            r = 0;
        return {{PrimeIdeal(k, p, PrimeType::ramified, r), 2}};
    }
    if (p == 2) {
        // d = 1 mod 4 here; split iff d = 1 mod 8, with roots 0 and 1.
        if (mod_floor(d, 8) == 1) {
            PrimeIdeal a(k, 2, PrimeType::split, 0);
            PrimeIdeal b(k, 2, PrimeType::split, 1);
            return {{a, 1}, {b, 1}};
        }
        return {{PrimeIdeal(k, 2, PrimeType::inert, 0), 1}};
    }
    Int dm = mod_floor(d, p);
    if (powm(dm, (p - 1) / 2, p) != 1)
        return {{PrimeIdeal(k, p, PrimeType::inert, 0), 1}};
    Int s = sqrt_mod(dm, p);
    Int r1, r2;
    if (t == 0) {
        r1 = s;
        r2 = mod_floor(-s, p);
    } else {
        Int inv2 = (p + 1) / 2;
        r1 = mod_floor((1 + s) * inv2, p);
        r2 = mod_floor((1 - s) * inv2, p);
    }
    if (r2 < r1) std::swap(r1, r2);
    PrimeIdeal a(k, p, PrimeType::split, r1);
    PrimeIdeal b(k, p, PrimeType::split, r2);
    return {{a, 1}, {b, 1}};
}

/* ---------------- ideal arithmetic ---------------- */

static void require_same_field(const Ideal& x, const Ideal& y) {
    if (x.field() != y.field())
        throw validation_error("ideal operands from different fields");
}

static std::pair<Int, Int> mul_vec(const NumberField& k,
                                   const std::pair<Int, Int>& u,
                                   const std::pair<Int, Int>& v) {
    const Int& t = k.omega_trace();
    const Int& n = k.omega_norm();
    Int yy = u.second * v.second;
    return {u.first * v.first - n * yy,
            u.first * v.second + u.second * v.first + t * yy};
}

Ideal ideal_mul(const Ideal& x, const Ideal& y) {
    require_same_field(x, y);
    const NumberField& k = x.field();
    if (k.is_rational()) return Ideal::of_integer(k, x.c() * y.c());
    std::vector<std::pair<Int, Int>> gens;
    for (const auto& u : {x.basis1(), x.basis2()})
        for (const auto& v : {y.basis1(), y.basis2()})
            gens.push_back(mul_vec(k, u, v));
    return Ideal::from_generators(k, gens);
}

Ideal ideal_pow(const Ideal& x, unsigned long e) {
    Ideal acc = Ideal::one(x.field());
    Ideal base = x;
    while (e) {
        if (e & 1) acc = ideal_mul(acc, base);
        e >>= 1;
        if (e) base = ideal_mul(base, base);
    }
    return acc;
}

Ideal ideal_conj(const Ideal& x) {
    const NumberField& k = x.field();
    if (k.is_rational()) return x;
    const Int& t = k.omega_trace();
    auto cj = [&](std::pair<Int, Int> v) -> std::pair<Int, Int> {
        return {v.first + t * v.second, -v.second};
    };
    return Ideal::from_generators(k, {cj(x.basis1()), cj(x.basis2())});
}

Ideal ideal_gcd(const Ideal& x, const Ideal& y) {
    require_same_field(x, y);
    const NumberField& k = x.field();
    if (k.is_rational()) return Ideal::of_integer(k, gcd(x.c(), y.c()));
    return Ideal::from_generators(
        k, {x.basis1(), x.basis2(), y.basis1(), y.basis2()});
}

Ideal ideal_div(const Ideal& x, const Ideal& y) {
    require_same_field(x, y);
    const NumberField& k = x.field();
    if (k.is_rational()) {
        if (!divisible(x.c(), y.c()))
            throw validation_error("ideal_div: not divisible");
        return Ideal::of_integer(k, x.c() / y.c());
    }
    Ideal num = ideal_mul(x, ideal_conj(y));
    Int ny = y.norm();
    if (!divisible(num.c(), ny))
        throw validation_error("ideal_div: not divisible");
    return Ideal::from_triple(k, num.c() / ny, num.a(), num.b());
}

Ideal ideal_lcm(const Ideal& x, const Ideal& y) {
    return ideal_div(ideal_mul(x, y), ideal_gcd(x, y));
}

bool ideal_divides(const Ideal& x, const Ideal& y) {
    require_same_field(x, y);
    if (x.field().is_rational()) return divisible(y.c(), x.c());
    auto [x1, y1] = y.basis1();
    auto [x2, y2] = y.basis2();
    return x.contains(x1, y1) && x.contains(x2, y2);
}

bool ideal_coprime(const Ideal& x, const Ideal& y) {
    return ideal_gcd(x, y).is_one();
}

Int ideal_norm(const Ideal& x) { return x.norm(); }

int valuation(const Ideal& x, const PrimeIdeal& P) {
    if (x.field() != P.field())
        throw validation_error("valuation: mixed fields");
    Ideal pi = P.to_ideal();
    Ideal cur = x;
    int v = 0;
    while (ideal_divides(pi, cur)) {
        cur = ideal_div(cur, pi);
        ++v;
    }
    return v;
}

std::vector<std::pair<PrimeIdeal, int>> ideal_factor(const Ideal& x) {
    std::vector<std::pair<PrimeIdeal, int>> out;
    if (x.is_one()) return out;
    for (const auto& [p, e] : factor_int(x.norm())) {
        for (const auto& [P, mult] : factor_rational_prime(x.field(), p)) {
            (void)mult;
            int v = valuation(x, P);
            if (v > 0) out.emplace_back(P, v);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    if (ideal_from_factorization(x.field(), out) != x)
        throw std::logic_error("ideal_factor: recombination mismatch");
    return out;
}

Ideal ideal_from_factorization(
    const NumberField& k, const std::vector<std::pair<PrimeIdeal, int>>& f) {
    Ideal acc = Ideal::one(k);
    for (const auto& [P, e] : f)
        acc = ideal_mul(acc, ideal_pow(P.to_ideal(), e));
    return acc;
}

/* ---------------- principality ---------------- */

static std::optional<FieldElement> check_candidate(const NumberField& k,
                                                   const Int& x, const Int& y,
                                                   const Ideal& target) {
    if (x == 0 && y == 0) return std::nullopt;
    FieldElement g(k, Rat(x), Rat(y));
    if (Ideal::principal(g) == target) return g;
    return std::nullopt;
}

std::optional<FieldElement> is_principal(const Ideal& I) {
    const NumberField& k = I.field();
    if (k.is_rational()) return FieldElement::integer(k, I.c());
    const Int N = I.norm();
    const Int& t = k.omega_trace();
    const Int D = k.discriminant();

    if (k.is_imaginary_quadratic()) {
        Int Dabs = -D;
        Int ymax = isqrt(4 * N / Dabs);
        for (Int y = 0; y <= ymax; ++y) {
            Int rem = 4 * N - Dabs * y * y;
            Int U;
            if (!is_square(rem, &U)) continue;
            for (int sy : {1, -1}) {
                if (y == 0 && sy < 0) continue;
                for (int su : {1, -1}) {
                    if (U == 0 && su < 0) continue;
                    Int num = su * U - t * sy * y;
                    if (!divisible(num, 2)) continue;
                    if (auto g = check_candidate(k, num / 2, sy * y, I)) return g;
                }
            }
        }
        return std::nullopt;
    }

    // Real quadratic: a principal ideal has a generator in one unit window,
    // |sigma_i(g)| <= 2*sqrt(N*eps); bound eps by rationals from above.
    UnitGroup U = unit_group(k);
    const FieldElement& eps = *U.fundamental;
    Rat eps_up = eps.x() + eps.y() * Rat(t + isqrt(D) + 1, 2);
    Rat ybound = 4 * Rat(N) * eps_up / Rat(D);
    Int ymax = isqrt(ybound.get_num() / ybound.get_den()) + 1;
    for (Int y = 0; y <= ymax; ++y) {
        for (int nsign : {1, -1}) {
            Int rem = D * y * y + nsign * 4 * N;
            if (rem < 0) continue;
            Int Uu;
            if (!is_square(rem, &Uu)) continue;
            for (int sy : {1, -1}) {
                if (y == 0 && sy < 0) continue;
                for (int su : {1, -1}) {
                    if (Uu == 0 && su < 0) continue;
                    Int num = su * Uu - t * sy * y;
                    if (!divisible(num, 2)) continue;
                    if (auto g = check_candidate(k, num / 2, sy * y, I)) return g;
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<Ideal> ideals_of_norm(const NumberField& k, const Int& n) {
    std::vector<Ideal> out;
    if (n < 1) return out;
    if (k.is_rational()) {
        out.push_back(Ideal::of_integer(k, n));
        return out;
    }
    const Int& t = k.omega_trace();
    const Int& nn = k.omega_norm();
    for (Int c = 1; c * c <= n; ++c) {
        if (!divisible(n, c * c)) continue;
        Int a = n / (c * c);
        for (Int b = 0; b < a; ++b)
            if (divisible(b * b + t * b + nn, a))
                out.push_back(Ideal::from_triple(k, c, a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace drl
