#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalan/lambda_object.hpp"
#include "catalan/series.hpp"

#include <random>

using namespace catalan;

namespace {

struct Fixture {
    std::shared_ptr<Ring> ring = Ring::make();
    VarId t, q, eps, lam;
    Fixture() {
        int fam_t = ring->add_family("t", 4);
        int fam_aux = ring->add_family("aux");
        t = ring->add_var("t", fam_t, {0, 4});
        q = ring->add_var("q", fam_t, {0, 4});
        eps = ring->add_var("eps", fam_aux, {-3, 3});
        lam = ring->add_var("lam", fam_aux, {-6, 6});
    }
    TruncatedSeries S(const Qir& c) const { return TruncatedSeries::constant(ring, c); }
    TruncatedSeries V(VarId v, int e = 1) const { return TruncatedSeries::var(ring, v, e); }
};

} // namespace

TEST_CASE("basic arithmetic and truncation") {
    Fixture F;
    auto f = F.V(F.t) + F.S(Qir(1));
    auto g = f.pow(6); // t-degree capped at 4
    CHECK(g.coeff(Monomial::single(F.t, 4)) == Qir(15)); // C(6,4)
    CHECK(g.coeff(Monomial::single(F.t, 5)).is_zero());
    CHECK(g.coeff(Monomial::one()) == Qir(1));

    auto h = F.V(F.eps, -3) * F.V(F.eps, -1); // falls out of the window
    CHECK(h.is_zero());
    CHECK((F.V(F.eps, -3) * F.V(F.eps, 3)).constant_term() == Qir(1));
}

TEST_CASE("exponential with joint window: exp(t/eps)") {
    Fixture F;
    auto arg = F.V(F.t) * F.V(F.eps, -1);
    auto e = arg.exp();
    // window eps >= -3, t <= 4 keeps exactly orders 0..3
    CHECK(e.constant_term() == Qir(1));
    CHECK(e.coeff(Monomial::single(F.t, 1).times(Monomial::single(F.eps, -1))) == Qir(1));
    CHECK(e.coeff(Monomial::single(F.t, 2).times(Monomial::single(F.eps, -2))) == Qir(Rat(1, 2)));
    CHECK(e.coeff(Monomial::single(F.t, 3).times(Monomial::single(F.eps, -3))) == Qir(Rat(1, 6)));
    CHECK(e.coeff(Monomial::single(F.t, 4).times(Monomial::single(F.eps, -4))).is_zero());
    CHECK(e.term_count() == 4);
}

TEST_CASE("exp, log, inverse round trips") {
    Fixture F;
    auto u = F.V(F.t) + Qir(Rat(1, 3)) * F.V(F.q, 2) + Qir(Rat(-2)) * F.V(F.t) * F.V(F.eps, 1);
    CHECK(u.exp().log() == u);
    auto f = F.S(Qir(1)) + u;
    CHECK((f.log()).exp() == f);
    CHECK(f * f.inverse() == TruncatedSeries::one(F.ring));
    auto g = F.S(Qir(Rat(-3, 7))) + u;
    CHECK(g * g.inverse() == TruncatedSeries::one(F.ring));
}

TEST_CASE("non-nilpotent exponent is detected, not looped") {
    Fixture F;
    auto s = F.V(F.eps, 1) + F.V(F.eps, -1);
    CHECK_THROWS_AS(s.exp(), std::domain_error);
    auto one_plus = F.S(Qir(1)) + s;
    CHECK_THROWS_AS(one_plus.log(), std::domain_error);
    CHECK_THROWS_AS(one_plus.inverse(), std::domain_error);
}

TEST_CASE("multiplication matches the naive reference on random inputs") {
    Fixture F;
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> pick_e(0, 3), pick_eps(-2, 2), pick_lam(-3, 3);
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), nterms(1, 10);

    auto random_series = [&]() {
        TruncatedSeries s(F.ring);
        int n = nterms(rng);
        for (int k = 0; k < n; ++k) {
            Monomial m = Monomial::single(F.t, pick_e(rng));
            m = m.times(Monomial::single(F.q, pick_e(rng)));
            m = m.times(Monomial::single(F.eps, pick_eps(rng)));
            m = m.times(Monomial::single(F.lam, pick_lam(rng)));
            s.add_term(std::move(m), Qir(Rat(coef(rng), den(rng))));
        }
        return s;
    };

    for (int round = 0; round < 200; ++round) {
        auto a = random_series();
        auto b = random_series();
        auto fast = a * b;
        TruncatedSeries slow(F.ring);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms())
                slow.add_term(ma.times(mb), ca * cb);
        CHECK(fast == slow);
    }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    Fixture F;
    // degrees chosen so no product leaves the family cap: truncation at the
    // cap boundary would legitimately break Leibniz
    auto f = (F.S(Qir(1)) + F.V(F.t) * F.V(F.eps, -1)).pow(2);
    auto g = F.V(F.q, 2) + F.V(F.t) + F.S(Qir(5));
    auto lhs = (f * g).derivative(F.t);
    auto rhs = f.derivative(F.t) * g + f * g.derivative(F.t);
    CHECK(lhs == rhs);
    // negative powers too
    auto h = F.V(F.lam, -2) * F.V(F.t);
    CHECK(h.derivative(F.lam) == Qir(-2) * F.V(F.lam, -3) * F.V(F.t));
}

TEST_CASE("substitution: spectral shift of a square") {
    Fixture F;
    // q := q - eps/lam applied to q^2
    auto image = F.V(F.q) - F.V(F.eps) * F.V(F.lam, -1);
    auto f = F.V(F.q, 2);
    auto sub = f.substitute(F.q, image);
    auto expect = F.V(F.q, 2) - Qir(2) * F.V(F.q) * F.V(F.eps) * F.V(F.lam, -1) +
                  F.V(F.eps, 2) * F.V(F.lam, -2);
    CHECK(sub == expect);

    CHECK_THROWS_AS(F.V(F.lam, -1).substitute(F.lam, image), std::domain_error);
}

TEST_CASE("taylor shift agrees with substitution") {
    Fixture F;
    auto delta = Qir(Rat(1, 2)) * F.V(F.eps);
    auto f = F.V(F.q, 3) + F.V(F.q) * F.V(F.t) + F.S(Qir(2));
    auto shifted = f.taylor_shift(F.q, delta);
    auto expect = f.substitute(F.q, F.V(F.q) + delta);
    CHECK(shifted == expect);
    CHECK_THROWS_AS(f.taylor_shift(F.q, F.V(F.q)), std::domain_error);
}

TEST_CASE("map_vars relabels across rings") {
    Fixture F;
    auto target = Ring::make();
    int fam = target->add_family("x", 8);
    VarId x = target->add_var("x", fam, {0, 8});
    VarId y = target->add_var("y", fam, {0, 8});
    auto f = F.V(F.t, 2) * F.V(F.q) + Qir(3) * F.V(F.q, 2);
    TruncatedSeries ix = TruncatedSeries::var(target, x);
    TruncatedSeries iy = TruncatedSeries::var(target, y) + TruncatedSeries::one(target);
    std::vector<const TruncatedSeries*> images(F.ring->var_count(), nullptr);
    images[F.t] = &ix;
    images[F.q] = &iy;
    auto g = f.map_vars(target, images);
    // t^2 q + 3 q^2 -> x^2 (y+1) + 3 (y+1)^2
    auto expect = TruncatedSeries::var(target, x, 2) * iy + Qir(3) * iy * iy;
    CHECK(g == expect);
}

TEST_CASE("pure part extraction") {
    Fixture F;
    auto f = F.V(F.eps, -2) + Qir(2) * F.V(F.eps) * F.V(F.t) + F.S(Qir(7)) + F.V(F.q);
    auto pure = f.part_supported_on({F.eps});
    CHECK(pure == F.V(F.eps, -2) + F.S(Qir(7)));
    auto stripped = f - pure;
    CHECK(stripped == Qir(2) * F.V(F.eps) * F.V(F.t) + F.V(F.q));
}

TEST_CASE("lambda residues at infinity") {
    Fixture F;
    auto L = [&](TruncatedSeries s) { return LambdaObject(F.ring, F.lam, std::move(s)); };
    // polynomial: zero residue
    CHECK(L(F.V(F.lam, 2) + Qir(3) * F.V(F.lam)).residue_at_infinity().is_zero());
    // 5/lam -> -5
    CHECK(L(Qir(5) * F.V(F.lam, -1)).residue_at_infinity().constant_term() == Qir(-5));
    // (1+lam)^3 / lam^2 -> -3
    auto f = (TruncatedSeries::one(F.ring) + F.V(F.lam)).pow(3) * F.V(F.lam, -2);
    CHECK(L(f).residue_at_infinity().constant_term() == Qir(-3));
}

TEST_CASE("lambda antiderivative inverts the derivative") {
    Fixture F;
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pow(-4, 4), coef(-6, 6), den(1, 5);
    for (int round = 0; round < 100; ++round) {
        LambdaObject obj(F.ring, F.lam);
        for (int k = 0; k < 5; ++k) {
            obj.main.add_term(Monomial::single(F.lam, pow(rng)), Qir(Rat(coef(rng), den(rng))));
            int p = pow(rng);
            if (p != -1)
                obj.logpart.add_term(Monomial::single(F.lam, p), Qir(Rat(coef(rng), den(rng))));
        }
        auto anti = obj.antiderivative();
        CHECK(anti.d_lambda() == obj);
    }
}

TEST_CASE("lambda log rules") {
    Fixture F;
    LambdaObject inv_lam(F.ring, F.lam, TruncatedSeries::var(F.ring, F.lam, -1));
    auto lg = inv_lam.antiderivative(); // log(lam)
    CHECK(lg.main.is_zero());
    CHECK(lg.logpart.constant_term() == Qir(1));
    CHECK_THROWS_AS(lg.residue_at_infinity(), std::domain_error);

    // d/dlam log(lam) = 1/lam
    CHECK(lg.d_lambda() == inv_lam);

    // antiderivative of lam^p log(lam) checked against its derivative
    LambdaObject obj(F.ring, F.lam);
    obj.logpart.add_term(Monomial::single(F.lam, 2), Qir(1));
    CHECK(obj.antiderivative().d_lambda() == obj);

    // lam^{-1} log(lam) cannot be integrated at log-degree one
    LambdaObject bad(F.ring, F.lam);
    bad.logpart.add_term(Monomial::single(F.lam, -1), Qir(1));
    CHECK_THROWS_AS(bad.antiderivative(), std::domain_error);
}
