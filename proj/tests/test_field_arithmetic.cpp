#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "drl/f_equiv.hpp"
#include "drl/units.hpp"
#include "test_util.hpp"

using namespace drl;

static NumberField Q = NumberField::rationals();
static NumberField Qm5 = NumberField::quadratic(-5);
static NumberField Qi = NumberField::quadratic(-1);
static NumberField Q2 = NumberField::quadratic(2);

TEST_CASE("field invariants") {
    CHECK(Q.discriminant() == 1);
    CHECK(Q.r1() == 1);
    CHECK(Qm5.discriminant() == -20);
    CHECK(Qm5.r1() == 0);
    CHECK(Qm5.r2() == 1);
    CHECK(Q2.discriminant() == 8);
    CHECK(Q2.r1() == 2);
    NumberField Q5 = NumberField::quadratic(5);
    CHECK(Q5.discriminant() == 5);  // d = 1 mod 4
    CHECK_THROWS_AS(NumberField::quadratic(12), validation_error);
    CHECK_THROWS_AS(NumberField::quadratic(1), validation_error);
    CHECK_THROWS_AS(NumberField::quadratic(0), validation_error);
}

TEST_CASE("element arithmetic is exact") {
    FieldElement w(Qm5, Rat(0), Rat(1));  // sqrt(-5)
    CHECK((w * w).x() == -5);
    CHECK((w * w).y() == 0);
    FieldElement z(Qm5, Rat(1, 2), Rat(1, 3));
    CHECK(!z.is_integral());
    CHECK((z * z.inverse()).is_one());
    CHECK(z.norm() == z.conj().norm());
    CHECK(z + (-z) == FieldElement::zero(Qm5));
}

TEST_CASE("signs at real places") {
    // sigma1(sqrt 2) > 0 > sigma2(sqrt 2)
    FieldElement s2(Q2, Rat(0), Rat(1));
    CHECK(s2.sign_at(0) == 1);
    CHECK(s2.sign_at(1) == -1);
    // 3 - 2*sqrt(2) is positive at both places (norm 1, trace > 0)
    FieldElement u(Q2, Rat(3), Rat(-2));
    CHECK(u.sign_at(0) == 1);
    CHECK(u.sign_at(1) == 1);
    // 1 + sqrt(2): positive, negative
    FieldElement e(Q2, Rat(1), Rat(1));
    CHECK(e.sign_at(0) == 1);
    CHECK(e.sign_at(1) == -1);
    FieldElement m3(Q, Rat(-3), Rat(0));
    CHECK(m3.sign_at(0) == -1);
}

TEST_CASE("prime splitting in Q(sqrt -5)") {
    // oracle: trial squaring mod 3 -> roots of x^2 + 5 are 1, 2
    std::vector<Int> roots;
    for (Int r = 0; r < 3; ++r)
        if (mod_floor(r * r + 5, 3) == 0) roots.push_back(r);
    REQUIRE(roots.size() == 2);

    auto f3 = factor_rational_prime(Qm5, 3);
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].first.type() == PrimeType::split);
    CHECK(f3[0].first.root() == roots[0]);
    CHECK(f3[1].first.root() == roots[1]);

    // oracle: 2 | disc(-20)
    CHECK(divisible(Qm5.discriminant(), 2));
    auto f2 = factor_rational_prime(Qm5, 2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first.type() == PrimeType::ramified);
    CHECK(f2[0].second == 2);

    // oracle: -5 is a non-residue mod 11 (exhaustive check)
    bool residue = false;
    for (Int r = 0; r < 11; ++r)
        if (mod_floor(r * r + 5, 11) == 0) residue = true;
    CHECK(!residue);
    auto f11 = factor_rational_prime(Qm5, 11);
    REQUIRE(f11.size() == 1);
    CHECK(f11[0].first.type() == PrimeType::inert);

    // every factorization multiplies back to (p)
    for (Int p : {2, 3, 5, 7, 11, 13}) {
        Ideal prod = Ideal::one(Qm5);
        for (const auto& [P, e] : factor_rational_prime(Qm5, p))
            prod = ideal_mul(prod, ideal_pow(P.to_ideal(), e));
        CHECK(prod == Ideal::of_integer(Qm5, p));
    }
}

TEST_CASE("prime splitting at 2 for d = 1 mod 4") {
    NumberField Q17 = NumberField::quadratic(17);  // 17 = 1 mod 8: split
    auto f = factor_rational_prime(Q17, 2);
    CHECK(f.size() == 2);
    NumberField Q13 = NumberField::quadratic(13);  // 13 = 5 mod 8: inert
    auto g = factor_rational_prime(Q13, 2);
    REQUIRE(g.size() == 1);
    CHECK(g[0].first.type() == PrimeType::inert);
    NumberField Q5 = NumberField::quadratic(5);
    auto h = factor_rational_prime(Q5, 5);  // ramified, root of x^2-x-1 mod 5
    REQUIRE(h.size() == 1);
    CHECK(h[0].first.type() == PrimeType::ramified);
    Int r = h[0].first.root();
    CHECK(mod_floor(r * r - r - 1, 5) == 0);
}

TEST_CASE("ideal multiplication: ramified square") {
    // [2, 1+w]^2 = (2) in Q(sqrt -5); frozen from the module-generator
    // oracle: {4, 2+2w, -4+2w} spans 2*(Z + Zw).
    Ideal p2 = Ideal::from_triple(Qm5, 1, 2, 1);
    Ideal sq = ideal_mul(p2, p2);
    CHECK(sq == Ideal::of_integer(Qm5, 2));
    CHECK(ideal_mul(p2, Ideal::one(Qm5)) == p2);
}

TEST_CASE("rational gcd/lcm") {
    Ideal a = Ideal::of_integer(Q, 18), b = Ideal::of_integer(Q, 12);
    CHECK(ideal_gcd(a, b) == Ideal::of_integer(Q, 6));
    CHECK(ideal_lcm(a, b) == Ideal::of_integer(Q, 36));
    CHECK_THROWS_AS(ideal_mul(a, Ideal::of_integer(Qm5, 2)), validation_error);
}

TEST_CASE("ideal factorization") {
    // (6) = p2^2 * p3 * p3' in Q(sqrt -5)
    auto f = ideal_factor(Ideal::of_integer(Qm5, 6));
    REQUIRE(f.size() == 3);
    CHECK(f[0].first.p() == 2);
    CHECK(f[0].first.type() == PrimeType::ramified);
    CHECK(f[0].second == 2);
    CHECK(f[1].first.p() == 3);
    CHECK(f[1].first.type() == PrimeType::split);
    CHECK(f[1].second == 1);
    CHECK(f[2].first.p() == 3);
    CHECK(f[2].second == 1);
    CHECK(f[1].first.root() != f[2].first.root());

    CHECK(ideal_factor(Ideal::one(Qm5)).empty());

    auto g = ideal_factor(Ideal::of_integer(Q, 12));
    REQUIRE(g.size() == 2);
    CHECK(g[0].first.p() == 2);
    CHECK(g[0].second == 2);
    CHECK(g[1].first.p() == 3);
    CHECK(g[1].second == 1);
}

TEST_CASE("canonicality under refactor/remultiply") {
    test::Rng rng(20240801);
    for (const auto& k : {Qm5, Qi, Q2}) {
        auto primes = test::small_primes(k, 6);
        for (int trial = 0; trial < 40; ++trial) {
            Ideal I = test::random_ideal(rng, k, primes);
            Ideal J = ideal_from_factorization(k, ideal_factor(I));
            CHECK(I == J);
            CHECK(I.c() == J.c());
            CHECK(I.a() == J.a());
            CHECK(I.b() == J.b());
        }
    }
}

TEST_CASE("norm multiplicativity and gcd*lcm = product") {
    test::Rng rng(77);
    for (const auto& k : {Q, Qm5, Q2}) {
        auto primes = test::small_primes(k, 6);
        for (int trial = 0; trial < 40; ++trial) {
            Ideal a = test::random_ideal(rng, k, primes);
            Ideal b = test::random_ideal(rng, k, primes);
            CHECK(ideal_mul(a, b).norm() == a.norm() * b.norm());
            CHECK(ideal_mul(ideal_gcd(a, b), ideal_lcm(a, b)) == ideal_mul(a, b));
        }
    }
}

TEST_CASE("principality searches") {
    // x^2 + 5 y^2 = 2 is insoluble
    Ideal p2 = Ideal::from_triple(Qm5, 1, 2, 1);
    CHECK(!is_principal(p2));
    auto g2 = is_principal(Ideal::of_integer(Qm5, 2));
    REQUIRE(g2.has_value());
    CHECK(Ideal::principal(*g2) == Ideal::of_integer(Qm5, 2));

    // prime above 5 in Q(i) is generated by 2+i (or an associate)
    auto f5 = factor_rational_prime(Qi, 5);
    REQUIRE(f5.size() == 2);
    auto g5 = is_principal(f5[0].first.to_ideal());
    REQUIRE(g5.has_value());
    CHECK(g5->norm() == 5);
    CHECK(Ideal::principal(*g5) == f5[0].first.to_ideal());

    // real quadratic: p7 = (3 + sqrt 2)(3 - sqrt 2)
    auto f7 = factor_rational_prime(Q2, 7);
    REQUIRE(f7.size() == 2);
    auto g7 = is_principal(f7[0].first.to_ideal());
    REQUIRE(g7.has_value());
    CHECK(abs(g7->norm()) == 7);
}

TEST_CASE("unit groups") {
    auto ui = unit_group(Qi);
    CHECK(ui.torsion_order == 4);
    CHECK(ui.torsion_gen.norm() == 1);

    auto um5 = unit_group(Qm5);
    CHECK(um5.torsion_order == 2);

    NumberField Qm3 = NumberField::quadratic(-3);
    CHECK(unit_group(Qm3).torsion_order == 6);

    auto u2 = unit_group(Q2);
    REQUIRE(u2.fundamental.has_value());
    CHECK(*u2.fundamental == FieldElement(Q2, Rat(1), Rat(1)));  // 1 + sqrt 2

    // golden ratio for d = 5; 1 + omega for d = 13; 2 + sqrt(3) for d = 3
    auto u5 = unit_group(NumberField::quadratic(5));
    CHECK(*u5.fundamental ==
          FieldElement(NumberField::quadratic(5), Rat(0), Rat(1)));
    auto u13 = unit_group(NumberField::quadratic(13));
    CHECK(*u13.fundamental ==
          FieldElement(NumberField::quadratic(13), Rat(1), Rat(1)));
    auto u3 = unit_group(NumberField::quadratic(3));
    CHECK(*u3.fundamental ==
          FieldElement(NumberField::quadratic(3), Rat(2), Rat(1)));
    // |N(eps)| = 1 across a range of d
    for (Int d : {2, 3, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 29, 94}) {
        auto u = unit_group(NumberField::quadratic(d));
        REQUIRE(u.fundamental.has_value());
        CHECK(abs(u.fundamental->norm()) == 1);
        CHECK(u.fundamental->is_integral());
    }
}

static Cycle q_cycle(const Int& m, bool inf) {
    std::map<PrimeIdeal, int> fin;
    if (m > 1)
        for (const auto& [p, e] : factor_int(m))
            fin[factor_rational_prime(Q, p)[0].first] = e;
    std::set<int> places;
    if (inf) places.insert(0);
    return Cycle(Q, fin, places);
}

TEST_CASE("f-equivalence over Q with f = 4*inf") {
    Cycle f = q_cycle(4, true);
    Ideal i3 = Ideal::of_integer(Q, 3), i7 = Ideal::of_integer(Q, 7);
    Ideal i5 = Ideal::of_integer(Q, 5);

    auto r = is_f_equivalent(i3, i7, f);
    CHECK(r.equivalent);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == FieldElement(Q, Rat(7, 3), Rat(0)));
    CHECK(check_f_witness(i3, i7, f, *r.witness));

    auto s = is_f_equivalent(i3, i5, f);
    CHECK(!s.equivalent);
    CHECK(s.failure == FEquivalence::Failure::no_unit);

    auto t = is_f_equivalent(i3, i3, f);
    CHECK(t.equivalent);
    CHECK(t.witness->is_one());
}

TEST_CASE("f-equivalence distinguishes non-principal from unit failures") {
    Cycle f = Cycle::trivial(Qm5);
    Ideal p2 = Ideal::from_triple(Qm5, 1, 2, 1);
    auto r = is_f_equivalent(p2, Ideal::one(Qm5), f);
    CHECK(!r.equivalent);
    CHECK(r.failure == FEquivalence::Failure::not_principal);
}

TEST_CASE("f-equivalence is a congruence and equivalence relation") {
    test::Rng rng(424242);
    for (const auto& k : {Q, Qm5, Q2}) {
        auto primes = test::small_primes(k, 5);
        Cycle f = [&] {
            if (k == Q) return q_cycle(12, true);
            // quadratic: use p2-part and all real places
            std::map<PrimeIdeal, int> fin;
            fin[factor_rational_prime(k, 2)[0].first] = 1;
            std::set<int> places;
            for (int i = 0; i < k.real_places(); ++i) places.insert(i);
            return Cycle(k, fin, places);
        }();
        std::vector<Ideal> sample;
        for (int i = 0; i < 8; ++i)
            sample.push_back(test::random_ideal(rng, k, primes));
        for (const auto& a : sample) {
            CHECK(is_f_equivalent(a, a, f).equivalent);
            for (const auto& b : sample) {
                auto ab = is_f_equivalent(a, b, f);
                auto ba = is_f_equivalent(b, a, f);
                CHECK(ab.equivalent == ba.equivalent);
                if (ab.equivalent) {
                    // symmetry witness is the inverse
                    CHECK(check_f_witness(b, a, f, ab.witness->inverse()));
                    for (const auto& c : sample) {
                        auto bc = is_f_equivalent(b, c, f);
                        if (bc.equivalent) {
                            // transitivity witness is the product
                            CHECK(check_f_witness(a, c, f,
                                                  *ab.witness * *bc.witness));
                        }
                        // congruence: a ~ b implies ac ~ bc
                        CHECK(is_f_equivalent(ideal_mul(a, c), ideal_mul(b, c), f)
                                  .equivalent);
                    }
                }
            }
        }
    }
}

TEST_CASE("f-equivalence over Q matches residues mod m") {
    for (Int m : {1, 2, 3, 4, 6, 8, 12, 24}) {
        Cycle f = q_cycle(m, true);
        for (Int a = 1; a <= 40; ++a) {
            for (Int b = a; b <= 40; ++b) {
                bool eq = is_f_equivalent(Ideal::of_integer(Q, a),
                                          Ideal::of_integer(Q, b), f)
                              .equivalent;
                CHECK(eq == (mod_floor(a, m) == mod_floor(b, m)));
            }
        }
    }
}

TEST_CASE("valuations of field elements") {
    auto p2 = factor_rational_prime(Q, 2)[0].first;
    FieldElement x(Q, Rat(4, 3), Rat(0));
    CHECK(element_valuation(x, p2) == 2);
    auto P2 = factor_rational_prime(Qm5, 2)[0].first;  // ramified
    FieldElement w(Qm5, Rat(1), Rat(1));               // 1 + w, norm 6
    CHECK(element_valuation(w, P2) == 1);
    CHECK(element_valuation(FieldElement(Qm5, Rat(1, 2), Rat(0)), P2) == -2);
}
