#pragma once

#include "catalan/lambda_object.hpp"
#include "catalan/matrix2.hpp"

#include <vector>

namespace catalan {

// All period computations are pinned to the special point (0,1), canonical
// coordinates u^1 = 2, u^2 = -2. Downstream consumers are formulated there.

// Expansion ring at lambda ~ infinity: Laurent polynomials in lambda with an
// optional formal symbol pi (entering the polynomial parts of negative-level
// periods as pi*i).
struct PeriodRing {
    RingPtr ring;
    VarId lambda;
    VarId pi;
};

PeriodRing make_period_ring(int depth, int height);

// A two-component period expansion; components carry log lambda parts.
struct PeriodPair {
    LambdaObject c1, c2;
};

// Level-l formal expansion at infinity (l >= 0 asymptotic series; l < 0 the
// iterated constant-free antiderivative). No basepoint-dependent part.
PeriodPair period_formal(const PeriodRing& pr, int l);

// Same object built from the printed coefficient formulas instead of
// differentiation/integration; independent route used as an oracle.
PeriodPair period_formal_explicit(const PeriodRing& pr, int l);

// Basepoint polynomial part P_i^{(l)}; zero for l >= 0.
PeriodPair period_polynomial_part(const PeriodRing& pr, int i, int l);

// Full infinity-expansion of the level-l period with basepoint e_i.
PeriodPair period_at_infinity(const PeriodRing& pr, int i, int l);

// Puiseux expansion near u^i in the local root s, s^2 = lambda - u^i.
struct PuiseuxPeriod {
    RingPtr ring;
    VarId s;
    int i = 1;
    int l = 0;
    TruncatedSeries c1, c2;
};

// `order` counts the retained powers of s above the leading term s^{-2l-1}.
PuiseuxPeriod period_near_ui(int i, int l, int order);

// Pairing of two level-0 periods with labels a, b: bilinear, expanded at
// infinity; equals (a1+a2)(b1+b2) * lambda/(lambda^2-4).
LambdaObject w_function(const PeriodRing& pr, const Vec2<Qir>& a, const Vec2<Qir>& b);

// ODE residual (U - lambda) dI/dlambda - (mu + l + 1/2) I at the special
// point; exact vanishing holds away from the truncation boundary.
PeriodPair period_ode_residual(const PeriodRing& pr, const PeriodPair& I, int l);

// Monodromy of the lambda-plane: reflections along e_1, e_2 with respect to
// the intersection pairing G = -(1/2) [[1,1],[1,1]].
Mat2<Rat> monodromy_gamma(int i);
// Product of generators in the order given, acting on column vectors; the
// rightmost entry acts first.
Mat2<Rat> monodromy_matrix(const std::vector<int>& word);
Qir intersection_pairing(const Vec2<Qir>& v, const Vec2<Qir>& w);
Vec2<Qir> reflection_along(const Vec2<Qir>& v, const Vec2<Qir>& w);

} // namespace catalan
