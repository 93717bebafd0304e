#include "catalan/frobenius.hpp"

namespace catalan {

namespace {

bool integer_fourth_root(const Int& n, Int& root) {
    if (n < 0) return false;
    Int s = sqrt(n);
    Int r = sqrt(s);
    // floor(sqrt(floor(sqrt(n)))) = floor(n^{1/4}); confirm exactness
    for (Int cand = r; cand <= r + 1; ++cand)
        if (cand * cand * cand * cand == n) {
            root = cand;
            return true;
        }
    return false;
}

bool rational_fourth_root(const Rat& r, Rat& root) {
    if (r <= 0) return false;
    Int pn, pd;
    if (!integer_fourth_root(numerator(r), pn)) return false;
    if (!integer_fourth_root(denominator(r), pd)) return false;
    root = Rat(pn) / Rat(pd);
    return true;
}

} // namespace

Qir exact_fourth_root(const Rat& r) {
    Rat s;
    if (rational_fourth_root(r, s)) return Qir(s);
    // r = 4 s^4: fourth root is s * sqrt2
    if (rational_fourth_root(r / 4, s)) return Qir(0, 0, s, 0);
    throw std::domain_error("no exact fourth root");
}

FrobeniusPoint make_point(const ExactScalar& t1, const ExactScalar& t2) {
    if (!t1.is_constant() || !t2.is_constant())
        throw std::domain_error("evaluation point must be constant");
    Qir t1v = t1.at_psi_zero();
    Qir t2v = t2.at_psi_zero();
    if (!t1v.is_rational() || !t2v.is_rational())
        throw std::domain_error("evaluation point must be rational");
    if (t2v.is_zero()) throw std::domain_error("t2 must be nonzero");

    FrobeniusPoint p;
    p.t1 = t1;
    p.t2 = t2;
    p.t1v = t1v;
    p.t2v = t2v;
    p.quarter_root_t2 = exact_fourth_root(t2v.rational_part());
    p.sqrt_t2 = p.quarter_root_t2 * p.quarter_root_t2;

    if (Qir(4) * t2v == t1v * t1v) throw std::domain_error("semisimplicity lost");

    p.u1 = t1v + Qir(2) * p.sqrt_t2;
    p.u2 = t1v - Qir(2) * p.sqrt_t2;
    Qir inv_quarter = p.quarter_root_t2.inverse();
    p.delta_root_1 = Qir::sqrt2() * inv_quarter;
    p.delta_root_2 = Qir::unit_i() * Qir::sqrt2() * inv_quarter;
    return p;
}

FrobeniusPoint make_point(const Rat& t1, const Rat& t2) {
    return make_point(ExactScalar(t1), ExactScalar(t2));
}

ProductConstants product_constants(const FrobeniusPoint& p) {
    ProductConstants pc;
    for (auto& plane : pc.c)
        for (auto& row : plane)
            for (auto& v : row) v = Qir(0);
    // unit axiom c_{1 beta}^gamma = delta, and d/dt2 . d/dt2 = (1/t2) d/dt1
    pc.c[0][0][0] = Qir(1);
    pc.c[0][1][1] = Qir(1);
    pc.c[1][0][1] = Qir(1);
    pc.c[1][1][0] = p.t2v.inverse();
    return pc;
}

Mat2<Qir> intersection_form(const FrobeniusPoint& p) {
    return {Qir(2), p.t1v, p.t1v, Qir(2) * p.t2v};
}

FrameMatrices frame_matrices(const FrobeniusPoint& p) {
    FrameMatrices f;
    f.eta = {Qir(0), Qir(1), Qir(1), Qir(0)};
    f.mu = {Qir(Rat(1, 2)), Qir(0), Qir(0), Qir(Rat(-1, 2))};
    f.U = {p.t1v, Qir(2), Qir(2) * p.t2v, p.t1v};
    Qir half_i = Qir(Rat(0), Rat(1, 2), 0, 0);
    f.V = {Qir(0), half_i, -half_i, Qir(0)};

    Qir inv_sqrt2 = Qir::sqrt2() * Qir(Rat(1, 2)); // 1/sqrt2
    Qir q = p.quarter_root_t2;
    Qir qi = q.inverse();
    Qir i = Qir::unit_i();
    f.psi = {inv_sqrt2 * q, inv_sqrt2 * qi, -(i * inv_sqrt2 * q), i * inv_sqrt2 * qi};
    f.psi_inv = {inv_sqrt2 * qi, i * inv_sqrt2 * qi, inv_sqrt2 * q, -(i * inv_sqrt2 * q)};
    return f;
}

} // namespace catalan
