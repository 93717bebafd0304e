#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catalan/periods.hpp"

#include <random>

using namespace catalan;

namespace {

// truncated expansions only agree away from the window boundary; compare
// coefficients of lambda^e (or s^e) for e >= floor
bool agree_above(const TruncatedSeries& a, const TruncatedSeries& b, VarId v, int floor) {
    const TruncatedSeries diff = a - b;
    for (const auto& [m, c] : diff.terms())
        if (m.exponent(v) >= floor && !c.is_zero()) return false;
    return true;
}

bool agree_above(const PeriodPair& a, const PeriodPair& b, VarId v, int floor) {
    return agree_above(a.c1.main, b.c1.main, v, floor) &&
           agree_above(a.c1.logpart, b.c1.logpart, v, floor) &&
           agree_above(a.c2.main, b.c2.main, v, floor) &&
           agree_above(a.c2.logpart, b.c2.logpart, v, floor);
}

bool vanishes_above(const TruncatedSeries& a, VarId v, int floor) {
    for (const auto& [m, c] : a.terms())
        if (m.exponent(v) >= floor && !c.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("level zero expansion at infinity") {
    PeriodRing pr = make_period_ring(12, 2);
    PeriodPair I = period_formal(pr, 0);
    CHECK(I.c1.logpart.is_zero());
    CHECK(I.c2.logpart.is_zero());
    CHECK(I.c1.main.coeff(Monomial::single(pr.lambda, -1)) == Qir(1));
    CHECK(I.c1.main.coeff(Monomial::single(pr.lambda, -3)) == Qir(2));
    CHECK(I.c1.main.coeff(Monomial::single(pr.lambda, -5)) == Qir(6));
    CHECK(I.c2.main.constant_term() == Qir(Rat(1, 2)));
    CHECK(I.c2.main.coeff(Monomial::single(pr.lambda, -2)) == Qir(1));
    CHECK(I.c2.main.coeff(Monomial::single(pr.lambda, -4)) == Qir(3));
    CHECK(I.c1.main.coeff(Monomial::single(pr.lambda, -2)).is_zero());
}

TEST_CASE("derivative and integration routes match the printed coefficients") {
    PeriodRing pr = make_period_ring(30, 6);
    for (int l = -4; l <= 4; ++l) {
        PeriodPair a = period_formal(pr, l);
        PeriodPair b = period_formal_explicit(pr, l);
        CHECK(agree_above(a, b, pr.lambda, -30 + std::abs(l) + 1));
    }
}

TEST_CASE("polynomial parts") {
    PeriodRing pr = make_period_ring(10, 6);

    PeriodPair P1 = period_polynomial_part(pr, 1, -1);
    CHECK(P1.c1.is_zero());
    CHECK(P1.c2.is_zero());

    PeriodPair P2 = period_polynomial_part(pr, 2, -1);
    Monomial pim = Monomial::single(pr.pi, 1);
    CHECK(P2.c1.main.coeff(pim) == Qir::unit_i());
    CHECK(P2.c1.main.term_count() == 1);
    CHECK(P2.c2.is_zero());

    // d/dlambda P^(l) = P^(l+1)
    for (int i : {1, 2})
        for (int l = -4; l <= -1; ++l) {
            PeriodPair P = period_polynomial_part(pr, i, l);
            PeriodPair Q = period_polynomial_part(pr, i, l + 1);
            CHECK(P.c1.d_lambda() == Q.c1);
            CHECK(P.c2.d_lambda() == Q.c2);
        }

    // the level -1 periods with the two basepoints differ by (-pi i, 0)
    PeriodPair a = period_at_infinity(pr, 1, -1);
    PeriodPair b = period_at_infinity(pr, 2, -1);
    TruncatedSeries d1 = a.c1.main - b.c1.main;
    CHECK(d1.term_count() == 1);
    CHECK(d1.coeff(pim) == -Qir::unit_i());
    CHECK((a.c1.logpart - b.c1.logpart).is_zero());
    CHECK((a.c2.main - b.c2.main).is_zero());
    CHECK((a.c2.logpart - b.c2.logpart).is_zero());
}

TEST_CASE("spectral ODE at infinity") {
    PeriodRing pr = make_period_ring(26, 7);
    for (int i : {1, 2})
        for (int l = -4; l <= 4; ++l) {
            PeriodPair I = period_at_infinity(pr, i, l);
            PeriodPair r = period_ode_residual(pr, I, l);
            // exact above the degraded zone lo + |l| at the window bottom
            const int floor = -26 + std::abs(l) + 1;
            for (const LambdaObject* c : {&r.c1, &r.c2}) {
                CHECK(vanishes_above(c->main, pr.lambda, floor));
                CHECK(vanishes_above(c->logpart, pr.lambda, floor));
            }
        }
}

TEST_CASE("puiseux expansions near the critical values") {
    for (int i : {1, 2})
        for (int l = -3; l <= 3; ++l) {
            PuiseuxPeriod P = period_near_ui(i, l, 9);
            const int lead = -2 * l - 1;

            // normalization of the leading coefficient
            Rat ph = pochhammer_half(l) * Rat(1, 2);
            if (l % 2 != 0) ph = -ph;
            const Qir c1 = P.c1.coeff(Monomial::single(P.s, lead));
            const Qir c2 = P.c2.coeff(Monomial::single(P.s, lead));
            if (i == 1) {
                CHECK(c1 == Qir(ph));
                CHECK(c2 == Qir(ph));
            } else {
                CHECK(c1 == Qir::unit_i() * Qir(ph));
                CHECK(c2 == -(Qir::unit_i() * Qir(ph)));
            }

            // only odd powers of the local root appear
            for (const auto& [m, c] : P.c1.terms()) {
                CHECK(m.exponent(P.s) % 2 != 0);
                (void)c;
            }

            // ODE residual in the local variable, lambda = u^i + s^2
            const Qir u = (i == 1) ? Qir(2) : Qir(-2);
            auto dlam = [&](const TruncatedSeries& f) {
                return f.derivative(P.s).times_monomial(Monomial::single(P.s, -1),
                                                        Qir(Rat(1, 2)));
            };
            const TruncatedSeries d1 = dlam(P.c1), d2 = dlam(P.c2);
            const Monomial s2 = Monomial::single(P.s, 2);
            TruncatedSeries r1 = d2 * Qir(2) - d1 * u - d1.times_monomial(s2) -
                                 P.c1 * Qir(Rat(l) + 1);
            TruncatedSeries r2 = d1 * Qir(2) - d2 * u - d2.times_monomial(s2) -
                                 P.c2 * Qir(Rat(l));
            const int floor = lead + 1; // interior of the window
            const int ceil_ok = lead + 2 * 9 - 3;
            for (const auto& [m, c] : r1.terms()) {
                const int e = m.exponent(P.s);
                if (e >= floor && e <= ceil_ok) CHECK(c.is_zero());
            }
            for (const auto& [m, c] : r2.terms()) {
                const int e = m.exponent(P.s);
                if (e >= floor && e <= ceil_ok) CHECK(c.is_zero());
            }
        }
}

TEST_CASE("derivative ladder near the critical values") {
    for (int i : {1, 2}) {
        PuiseuxPeriod A = period_near_ui(i, -1, 8);
        PuiseuxPeriod B = period_near_ui(i, 0, 8);
        auto dlam = [&](const TruncatedSeries& f) {
            return f.derivative(A.s).times_monomial(Monomial::single(A.s, -1),
                                                    Qir(Rat(1, 2)));
        };
        // expansions live in distinct rings with identical variable layout,
        // so compare coefficient lists
        TruncatedSeries d1 = dlam(A.c1), d2 = dlam(A.c2);
        for (int e = -1; e <= 9; e += 2) {
            CHECK(d1.coeff(Monomial::single(A.s, e)) == B.c1.coeff(Monomial::single(B.s, e)));
            CHECK(d2.coeff(Monomial::single(A.s, e)) == B.c2.coeff(Monomial::single(B.s, e)));
        }
    }
}

TEST_CASE("pairing of level zero periods") {
    PeriodRing pr = make_period_ring(20, 3);
    const Vec2<Qir> e1{Qir(1), Qir(0)}, e2{Qir(0), Qir(1)};

    LambdaObject W = w_function(pr, e1, e1);
    CHECK(W.logpart.is_zero());
    // lambda/(lambda^2 - 4) = sum 4^s lambda^{-2s-1}
    Rat p4 = 1;
    for (int s = 0; 2 * s + 1 <= 15; ++s, p4 *= 4)
        CHECK(W.main.coeff(Monomial::single(pr.lambda, -2 * s - 1)) == Qir(p4));
    CHECK(W.main.coeff(Monomial::single(pr.lambda, -2)).is_zero());

    // multiplying by (lambda^2 - 4) recovers lambda away from the boundary
    TruncatedSeries t = W.main.times_monomial(Monomial::single(pr.lambda, 2)) -
                        W.main * Qir(4);
    TruncatedSeries expected =
        TruncatedSeries::var(pr.ring, pr.lambda);
    CHECK(agree_above(t, expected, pr.lambda, -17));

    // the invariant direction pairs to zero
    const Vec2<Qir> inv{Qir(1), Qir(-1)};
    CHECK(w_function(pr, inv, inv).is_zero());
    CHECK(w_function(pr, inv, e2).is_zero());

    // bilinearity
    const Vec2<Qir> a{Qir(2), Qir(0)};
    LambdaObject W4 = w_function(pr, a, a);
    CHECK(W4.main == W.main * Qir(4));
}

TEST_CASE("monodromy reflections") {
    const Mat2<Rat> g1 = monodromy_gamma(1), g2 = monodromy_gamma(2);
    const Mat2<Rat> id{Rat(1), Rat(0), Rat(0), Rat(1)};

    CHECK(g1 * g1 == id);
    CHECK(g2 * g2 == id);
    CHECK(g1.a == Rat(-1));
    CHECK(g1.b == Rat(-2));
    CHECK(g2.c == Rat(-2));

    // matrix action agrees with the reflection formula
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> dist(-5, 5);
    const Vec2<Qir> e1{Qir(1), Qir(0)}, e2{Qir(0), Qir(1)};
    for (int round = 0; round < 100; ++round) {
        Vec2<Qir> v{Qir(Rat(dist(rng), 3)) + Qir::unit_i() * Qir(dist(rng)),
                    Qir(dist(rng)) + Qir::sqrt2() * Qir(Rat(dist(rng), 2))};
        Vec2<Qir> r1 = reflection_along(v, e1);
        CHECK(r1.x == Qir(g1.a) * v.x + Qir(g1.b) * v.y);
        CHECK(r1.y == Qir(g1.c) * v.x + Qir(g1.d) * v.y);
        Vec2<Qir> r2 = reflection_along(v, e2);
        CHECK(r2.x == Qir(g2.a) * v.x + Qir(g2.b) * v.y);
        CHECK(r2.y == Qir(g2.c) * v.x + Qir(g2.d) * v.y);

        // the pairing is invariant
        CHECK(intersection_pairing(r1, r1) == intersection_pairing(v, v));
        CHECK(intersection_pairing(r2, r2) == intersection_pairing(v, v));

        // gamma2 gamma1 translates along the invariant direction
        const Mat2<Rat> m = monodromy_matrix({2, 1});
        Vec2<Qir> w{Qir(m.a) * v.x + Qir(m.b) * v.y, Qir(m.c) * v.x + Qir(m.d) * v.y};
        const Qir shift = (v.x + v.y) * Qir(2);
        CHECK(w.x == v.x - shift);
        CHECK(w.y == v.y + shift);
    }

    CHECK_THROWS_AS(reflection_along(e1, Vec2<Qir>{Qir(1), Qir(-1)}), std::domain_error);
    CHECK_THROWS_AS(monodromy_gamma(3), std::domain_error);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(make_period_ring(1, 2), std::domain_error);
    CHECK_THROWS_AS(period_near_ui(3, 0, 5), std::domain_error);
    CHECK_THROWS_AS(period_near_ui(1, 0, 0), std::domain_error);
}
