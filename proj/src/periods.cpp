#include "catalan/periods.hpp"

namespace catalan {

PeriodRing make_period_ring(int depth, int height) {
    if (depth < 2 || height < 0) throw std::domain_error("period window too small");
    auto ring = Ring::make();
    int fam = ring->add_family("period");
    VarId lambda = ring->add_var("lambda", fam, {-depth, height});
    VarId pi = ring->add_var("pi", fam, {0, 1});
    return {ring, lambda, pi};
}

namespace {

// closed-form level-0 expansion at infinity:
//   (1/2) sum_s binom(2s, s) lambda^{-2s-1} (2, lambda)
PeriodPair level_zero(const PeriodRing& pr) {
    const auto& w = pr.ring->caps().window[pr.lambda];
    PeriodPair out{LambdaObject(pr.ring, pr.lambda), LambdaObject(pr.ring, pr.lambda)};
    for (int s = 0; -2 * s - 1 >= w.lo; ++s) {
        const Qir c{binomial(2 * s, s)};
        out.c1.main.add_term(Monomial::single(pr.lambda, -2 * s - 1), c);
        out.c2.main.add_term(Monomial::single(pr.lambda, -2 * s), c * Qir(Rat(1, 2)));
    }
    return out;
}

} // namespace

PeriodPair period_formal(const PeriodRing& pr, int l) {
    PeriodPair I = level_zero(pr);
    for (int j = 0; j < l; ++j) {
        I.c1 = I.c1.d_lambda();
        I.c2 = I.c2.d_lambda();
    }
    for (int j = 0; j > l; --j) {
        I.c1 = I.c1.antiderivative();
        I.c2 = I.c2.antiderivative();
    }
    return I;
}

PeriodPair period_formal_explicit(const PeriodRing& pr, int l) {
    const auto& w = pr.ring->caps().window[pr.lambda];
    PeriodPair out{LambdaObject(pr.ring, pr.lambda), LambdaObject(pr.ring, pr.lambda)};
    if (l >= 0) {
        // (-1)^l sum_s (2s+l)!/(s!(s+1)!) (s+1, (2s+l+1)/lambda) lambda^{-2s-l-1}
        for (int s = 0; -2 * s - l - 1 >= w.lo; ++s) {
            Rat base = factorial(2 * s + l) / (factorial(s) * factorial(s + 1));
            if (l % 2 == 1) base = -base;
            out.c1.main.add_term(Monomial::single(pr.lambda, -2 * s - l - 1),
                                 Qir(base * Rat(s + 1)));
            out.c2.main.add_term(Monomial::single(pr.lambda, -2 * s - l - 2),
                                 Qir(base * Rat(2 * s + l + 1)));
        }
        if (l == 0) // the formula loses the constant killed by the derivative
            out.c2.main.add_term(Monomial::one(), Qir(Rat(1, 2)));
        return out;
    }

    const int n = -l; // printed formulas are indexed by the integration depth
    const Rat sgn = (n % 2 == 0) ? Rat(1) : Rat(-1);
    // first component
    for (int s = 0; 2 * s <= n - 1; ++s) {
        const int p = n - 2 * s - 1;
        const Rat c = 1 / (factorial(s) * factorial(s) * factorial(p));
        out.c1.logpart.add_term(Monomial::single(pr.lambda, p), Qir(c));
        out.c1.main.add_term(Monomial::single(pr.lambda, p), Qir(-c * harmonic(p)));
    }
    for (int s = (n + 1) / 2; n - 2 * s - 1 >= w.lo; ++s) {
        if (n - 2 * s - 1 >= 0) continue;
        const Rat c = factorial(2 * s - n) / (factorial(s) * factorial(s)) * sgn;
        out.c1.main.add_term(Monomial::single(pr.lambda, n - 2 * s - 1), Qir(c));
    }
    // second component
    out.c2.main.add_term(Monomial::single(pr.lambda, n), Qir(1 / (2 * factorial(n))));
    for (int s = 1; 2 * s <= n; ++s) {
        const int p = n - 2 * s;
        const Rat c = 1 / (factorial(s) * factorial(s - 1) * factorial(p));
        out.c2.logpart.add_term(Monomial::single(pr.lambda, p), Qir(-c));
        out.c2.main.add_term(Monomial::single(pr.lambda, p), Qir(c * harmonic(p)));
    }
    for (int s = (n + 1) / 2; n - 2 * s >= w.lo; ++s) {
        if (n - 2 * s >= 0) continue;
        const Rat c = factorial(2 * s - n - 1) / (factorial(s) * factorial(s - 1)) * sgn;
        out.c2.main.add_term(Monomial::single(pr.lambda, n - 2 * s), Qir(c));
    }
    return out;
}

PeriodPair period_polynomial_part(const PeriodRing& pr, int i, int l) {
    if (i != 1 && i != 2) throw std::domain_error("basepoint index out of range");
    PeriodPair out{LambdaObject(pr.ring, pr.lambda), LambdaObject(pr.ring, pr.lambda)};
    if (l >= 0) return out;
    const int n = -l - 1;
    for (int j = 0; 2 * 0 + j <= n; ++j) {
        // first component: sum over 2a + j = n of (h(a) [+ pi i]) / a!^2 * lambda^j / j!
        if ((n - j) % 2 != 0) continue;
        const int a = (n - j) / 2;
        const Rat base = 1 / (factorial(a) * factorial(a) * factorial(j));
        out.c1.main.add_term(Monomial::single(pr.lambda, j), Qir(harmonic(a) * base));
        if (i == 2) {
            Monomial m = Monomial::single(pr.lambda, j);
            m.bump(pr.pi, 1);
            out.c1.main.add_term(std::move(m), Qir::unit_i() * Qir(base));
        }
    }
    for (int j = 0; 2 * 0 + 1 + j <= n; ++j) {
        // second component: sum over 2a + 1 + j = n, weight
        // -(1/2)(h(a) + h(a+1) [+ 2 pi i]) / (a!(a+1)!) * lambda^j / j!
        if ((n - 1 - j) % 2 != 0) continue;
        const int a = (n - 1 - j) / 2;
        const Rat base =
            Rat(-1, 2) / (factorial(a) * factorial(a + 1) * factorial(j));
        out.c2.main.add_term(Monomial::single(pr.lambda, j),
                             Qir((harmonic(a) + harmonic(a + 1)) * base));
        if (i == 2) {
            Monomial m = Monomial::single(pr.lambda, j);
            m.bump(pr.pi, 1);
            out.c2.main.add_term(std::move(m), Qir::unit_i() * Qir(base * 2));
        }
    }
    return out;
}

PeriodPair period_at_infinity(const PeriodRing& pr, int i, int l) {
    PeriodPair I = period_formal(pr, l);
    if (l < 0) {
        PeriodPair P = period_polynomial_part(pr, i, l);
        I.c1 += P.c1;
        I.c2 += P.c2;
    }
    return I;
}

PuiseuxPeriod period_near_ui(int i, int l, int order) {
    if (i != 1 && i != 2) throw std::domain_error("basepoint index out of range");
    if (order < 1) throw std::domain_error("puiseux order too small");
    auto ring = Ring::make();
    int fam = ring->add_family("puiseux");
    const int lead = -2 * l - 1;
    VarId s = ring->add_var("s", fam, {std::min(lead, -1) - 2, lead + 2 * order});

    PuiseuxPeriod out{ring, s, i, l, TruncatedSeries(ring), TruncatedSeries(ring)};

    // d^m/dlambda^m sqrt(lambda -+ 2) = c_m s^{1-2m} in the local root s
    auto droot = [](int m) {
        Rat c = 1;
        for (int j = 0; j < m; ++j) c *= Rat(1, 2) - j;        // descend
        for (int j = 0; j > m; --j) c /= Rat(1, 2) - (j - 1);  // integrate
        return c;
    };

    Rat pow4 = 1; // 4^k
    for (int k = 0;; ++k, pow4 *= 4) {
        const int e = 1 - 2 * (l - k + 1); // s-power of the k-th term
        if (e > lead + 2 * order) break;
        const Rat base = droot(l - k + 1) / (factorial(k) * pow4);
        const Rat a1 = pochhammer_half(k) * pochhammer_half(k);
        const Rat a2 = Rat(2) / Rat(2 * k - 1) * pochhammer_half(k + 1) * pochhammer_half(k);
        Qir c1, c2;
        if (i == 1) {
            const Rat sg = (k % 2 == 0) ? Rat(1) : Rat(-1); // (-4)^{-k}
            c1 = Qir(sg * base * a1);
            c2 = Qir(-sg * base * a2);
        } else {
            c1 = Qir::unit_i() * Qir(base * a1);
            c2 = Qir::unit_i() * Qir(base * a2);
        }
        out.c1.add_term(Monomial::single(s, e), c1);
        out.c2.add_term(Monomial::single(s, e), c2);
    }
    return out;
}

LambdaObject w_function(const PeriodRing& pr, const Vec2<Qir>& a, const Vec2<Qir>& b) {
    const PeriodPair I = period_formal(pr, 0);
    const LambdaObject Ia1 = I.c1 * (a.x + a.y), Ia2 = I.c2 * (a.x + a.y);
    const LambdaObject Ib1 = I.c1 * (b.x + b.y), Ib2 = I.c2 * (b.x + b.y);
    return Ia1 * Ib2 + Ia2 * Ib1; // eta-pairing of the two solutions
}

PeriodPair period_ode_residual(const PeriodRing& pr, const PeriodPair& I, int l) {
    const LambdaObject d1 = I.c1.d_lambda(), d2 = I.c2.d_lambda();
    const Monomial lam = Monomial::single(pr.lambda, 1);
    // U = [[0,2],[2,0]] at the special point; mu = diag(1/2, -1/2)
    auto shift = [&](const LambdaObject& v) {
        return LambdaObject{pr.ring, pr.lambda, v.main.times_monomial(lam),
                            v.logpart.times_monomial(lam)};
    };
    const Qir m1{Rat(l) + Rat(1)};      // mu_1 + l + 1/2
    const Qir m2{Rat(l)};               // mu_2 + l + 1/2
    PeriodPair out{LambdaObject(pr.ring, pr.lambda), LambdaObject(pr.ring, pr.lambda)};
    out.c1 = d2 * Qir(2) - shift(d1) - I.c1 * m1;
    out.c2 = d1 * Qir(2) - shift(d2) - I.c2 * m2;
    return out;
}

Mat2<Rat> monodromy_gamma(int i) {
    if (i == 1) return {Rat(-1), Rat(-2), Rat(0), Rat(1)};
    if (i == 2) return {Rat(1), Rat(0), Rat(-2), Rat(-1)};
    throw std::domain_error("monodromy generator index out of range");
}

Mat2<Rat> monodromy_matrix(const std::vector<int>& word) {
    Mat2<Rat> m{Rat(1), Rat(0), Rat(0), Rat(1)};
    for (int g : word) m = m * monodromy_gamma(g);
    return m;
}

Qir intersection_pairing(const Vec2<Qir>& v, const Vec2<Qir>& w) {
    // G = -(1/2) [[1,1],[1,1]]
    return (v.x + v.y) * (w.x + w.y) * Qir(Rat(-1, 2));
}

Vec2<Qir> reflection_along(const Vec2<Qir>& v, const Vec2<Qir>& w) {
    const Qir ww = intersection_pairing(w, w);
    if (ww.is_zero()) throw std::domain_error("reflection along an isotropic vector");
    const Qir f = intersection_pairing(v, w) * ww.inverse() * Qir(2);
    return {v.x - f * w.x, v.y - f * w.y};
}

} // namespace catalan
