#include "catalan/calibration.hpp"
#include "catalan/series.hpp"

#include <sstream>

namespace catalan {

std::string CalScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << c[j].str();
        } else {
            os << "(" << c[j].str() << ")*Lg";
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

CalMat cal_adjoint(const CalMat& m) { return {m.d, m.b, m.c, m.a}; }

// ---------------------------------------------------------------------------
// S-matrix by the defining recursion.

SMatrixTable s_matrix(const FrobeniusPoint& p, int K) {
    if (K < 0) throw std::domain_error("negative calibration order");
    const CalMat U{CalScalar(p.t1v), CalScalar(2), CalScalar(p.t2v * Qir(2)),
                   CalScalar(p.t1v)};
    const CalMat Reuler{CalScalar(0), CalScalar(2), CalScalar(0), CalScalar(0)};

    SMatrixTable table{p, {}};
    table.S.reserve(static_cast<size_t>(K) + 1);
    table.S.push_back(CalMat{CalScalar(1), CalScalar(0), CalScalar(0), CalScalar(1)});

    for (int k = 1; k <= K; ++k) {
        const CalMat rhs = U * table.S.back() - table.S.back() * Reuler;
        // entrywise divisor k + mu_beta - mu_alpha; mu = diag(1/2, -1/2)
        CalMat next;
        next.a = rhs.a * CalScalar(rat(1, k));
        next.d = rhs.d * CalScalar(rat(1, k));
        next.c = rhs.c * CalScalar(rat(1, k + 1));
        if (k == 1) {
            // resonant entry: the recursion leaves it free, the RHS must vanish
            if (!rhs.b.is_zero())
                throw std::logic_error("calibration resonance violated at order 1");
            next.b = CalScalar(ExactScalar::psi()) + CalScalar::logt2();
        } else {
            next.b = rhs.b * CalScalar(rat(1, k - 1));
        }
        table.S.push_back(next);
    }
    return table;
}

// ---------------------------------------------------------------------------
// S-matrix through superpotential residues.

namespace {

struct ResidueRing {
    RingPtr ring;
    VarId z, psi, L;
    TruncatedSeries f;    // zeta + t1 + t2/zeta
    TruncatedSeries tlog; // formal log of the superpotential, split at 0/infinity
};

// Ring sized so that products f^k * (log tail) keep every contribution to the
// zeta^{-1} and zeta^0 coefficients for k <= K.
ResidueRing make_residue_ring(const FrobeniusPoint& p, int K) {
    auto ring = Ring::make();
    int fam = ring->add_family("cal");
    int span = K + 3;
    VarId z = ring->add_var("zeta", fam, {-span, span});
    VarId psi = ring->add_var("psi", fam, {0, 1});
    VarId L = ring->add_var("Lg", fam, {0, 1});

    auto zeta = TruncatedSeries::var(ring, z);
    auto zeta_inv = TruncatedSeries::var(ring, z, -1);
    TruncatedSeries f = zeta + TruncatedSeries::constant(ring, p.t1v) +
                        zeta_inv * p.t2v;

    // log f at the two ends of the zeta-line:
    //   near 0:        (1/2) log(f zeta)   = (1/2)(L + log(1+u)),
    //   near infinity: (1/2) log(f/zeta)   = (1/2) log(1+v),
    // with u = (t1 zeta + zeta^2)/t2 and v = t1/zeta + t2/zeta^2.
    const Qir inv_t2 = p.t2v.inverse();
    TruncatedSeries u =
        (zeta * p.t1v + TruncatedSeries::var(ring, z, 2)) * inv_t2;
    TruncatedSeries v = zeta_inv * p.t1v + TruncatedSeries::var(ring, z, -2) * p.t2v;
    const Qir half = Qir(Rat(1, 2));
    TruncatedSeries one = TruncatedSeries::one(ring);
    TruncatedSeries tlog = TruncatedSeries::var(ring, L) * half +
                           (one + u).log() * half + (one + v).log() * half;
    return {ring, z, psi, L, std::move(f), std::move(tlog)};
}

CalScalar zeta_coefficient(const ResidueRing& rr, const TruncatedSeries& s, int e) {
    CalScalar out;
    for (const auto& [m, cf] : s.terms()) {
        if (m.exponent(rr.z) != e) continue;
        int lp = m.exponent(rr.L);
        int pp = m.exponent(rr.psi);
        while (static_cast<int>(out.c.size()) <= lp) out.c.emplace_back();
        ExactScalar& tgt = out.c[static_cast<size_t>(lp)];
        while (static_cast<int>(tgt.a.size()) <= pp) tgt.a.emplace_back();
        tgt.a[static_cast<size_t>(pp)] += cf;
    }
    for (auto& es : out.c) es.normalize();
    out.normalize();
    return out;
}

} // namespace

SMatrixTable s_matrix_residue_form(const FrobeniusPoint& p, int K) {
    if (K < 0) throw std::domain_error("negative calibration order");
    ResidueRing rr = make_residue_ring(p, K);
    const TruncatedSeries psi_half =
        TruncatedSeries::var(rr.ring, rr.psi) * Qir(Rat(1, 2));

    SMatrixTable table{p, {}};
    table.S.reserve(static_cast<size_t>(K) + 1);

    // running f^k / k!
    TruncatedSeries fk = TruncatedSeries::one(rr.ring);
    table.S.push_back(CalMat{CalScalar(1), CalScalar(0), CalScalar(0), CalScalar(1)});
    for (int k = 1; k <= K; ++k) {
        // second column density: 2 f^{k-1}/(k-1)! (tlog + psi/2 - h(k-1))
        TruncatedSeries col2 =
            fk * (rr.tlog + psi_half -
                  TruncatedSeries::constant(rr.ring, Qir(harmonic(k - 1)))) *
            Qir(2);
        fk = fk * rr.f;
        fk *= Qir(rat(1, k));

        CalMat Sk;
        Sk.a = zeta_coefficient(rr, fk, 0);
        Sk.c = zeta_coefficient(rr, fk, -1);
        Sk.b = zeta_coefficient(rr, col2, 0);
        Sk.d = zeta_coefficient(rr, col2, -1);
        table.S.push_back(Sk);
    }
    return table;
}

// ---------------------------------------------------------------------------
// R-matrix.

RMatrixTable r_matrix(const FrobeniusPoint& p, int K) {
    if (K < 0) throw std::domain_error("negative calibration order");
    const Qir i = Qir::unit_i();
    const Qir half_i = i * Qir(Rat(1, 2));
    const Mat2<Qir> V{Qir(0), half_i, -half_i, Qir(0)};
    const Qir w = p.u2 - p.u1;
    const Qir w_inv = w.inverse();

    RMatrixTable table{p, {}};
    table.R.reserve(static_cast<size_t>(K) + 1);
    table.R.push_back(Mat2<Qir>{Qir(1), Qir(0), Qir(0), Qir(1)});

    for (int k = 0; k < K; ++k) {
        const Mat2<Qir> M = V * table.R.back() + Qir(k) * table.R.back();
        // [R_{k+1}, U] has zero diagonal, so the diagonal of (V+k)R_k must too
        if (!M.a.is_zero() || !M.d.is_zero())
            throw std::logic_error("R-matrix recursion lost its diagonal constraint");
        Mat2<Qir> next;
        next.b = M.b * w_inv;        // entry (1,2): divisor u2 - u1
        next.c = -(M.c * w_inv);     // entry (2,1): divisor u1 - u2
        const Qir s = half_i * Qir(rat(1, k + 1));
        next.a = -(s * next.c);      // diagonal fixed by the next-order constraint
        next.d = s * next.b;
        table.R.push_back(next);
    }
    return table;
}

Mat2<Qir> r_matrix_closed(const FrobeniusPoint& p, int k) {
    if (k < 0) throw std::domain_error("negative calibration order");
    const Rat pref = pochhammer_half(k - 1) * pochhammer_half(k) / factorial(k);
    const Qir i = Qir::unit_i();
    const Rat sign = (k % 2 == 0) ? Rat(-1) : Rat(1); // (-1)^{k+1}
    Mat2<Qir> core{Qir(sign * Rat(1, 2)), i * Qir(k), i * Qir(sign * Rat(k)),
                   Qir(Rat(-1, 2))};
    const Qir w_inv = (p.u2 - p.u1).inverse();
    Qir scale = Qir(pref);
    for (int j = 0; j < k; ++j) scale = scale * w_inv;
    return scale * core;
}

std::vector<Mat2<Qir>> r_matrix_log(const RMatrixTable& table) {
    const int K = static_cast<int>(table.R.size()) - 1;
    const Mat2<Qir> zero{Qir(0), Qir(0), Qir(0), Qir(0)};
    std::vector<Mat2<Qir>> out(static_cast<size_t>(K) + 1, zero);
    if (K <= 0) return out;

    // X = R - Id has no z^0 term; log(1+X) = sum (-1)^{m+1} X^m / m
    std::vector<Mat2<Qir>> X(table.R.begin(), table.R.end());
    X[0] = zero;
    std::vector<Mat2<Qir>> power = X; // X^m, coefficient list
    for (int m = 1; m <= K; ++m) {
        const Rat c = (m % 2 == 1) ? rat(1, m) : rat(-1, m);
        for (int n = m; n <= K; ++n)
            out[static_cast<size_t>(n)] =
                out[static_cast<size_t>(n)] + Qir(c) * power[static_cast<size_t>(n)];
        if (m == K) break;
        std::vector<Mat2<Qir>> next(static_cast<size_t>(K) + 1, zero);
        for (int n = m + 1; n <= K; ++n)
            for (int j = 1; n - j >= m; ++j)
                next[static_cast<size_t>(n)] =
                    next[static_cast<size_t>(n)] +
                    power[static_cast<size_t>(n - j)] * X[static_cast<size_t>(j)];
        power = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Prefactor.

CalScalar c_prefactor(const FrobeniusPoint&) {
    return CalScalar::logt2() * CalScalar(Rat(-1, 16));
}

Rat c_prefactor_integral_coefficient() {
    // Integrate (R1)^1_1 du1 + (R1)^2_2 du2 with the ansatz c*log(u1-u2);
    // consistency across sample points pins c, and log(u1-u2) contributes
    // (1/2) log t2.
    const FrobeniusPoint p1 = make_point(Rat(0), Rat(1));
    const FrobeniusPoint p2 = make_point(Rat(0), Rat(16));
    Rat c;
    bool have = false;
    for (const FrobeniusPoint* p : {&p1, &p2}) {
        const Mat2<Qir> R1 = r_matrix_closed(*p, 1);
        const Qir w = p->u1 - p->u2;
        const Qir a = R1.a * w;   // d/du1 [c log(u1-u2)] = c/(u1-u2)
        const Qir d = R1.d * w;   // d/du2 [c log(u1-u2)] = -c/(u1-u2)
        if (!a.is_rational() || !(d + a).is_zero())
            throw std::logic_error("R1 diagonal is not a closed log-derivative");
        if (!have) {
            c = a.rational_part();
            have = true;
        } else if (a.rational_part() != c) {
            throw std::logic_error("R1 diagonal integral is not point-independent");
        }
    }
    return c / 2;
}

// ---------------------------------------------------------------------------
// Hamiltonian densities.

CalScalar hamiltonian_density(const FrobeniusPoint& p, int alpha, int p_index) {
    if (alpha != 1 && alpha != 2) throw std::domain_error("density index out of range");
    if (p_index < -1) throw std::domain_error("density level below -1");
    ResidueRing rr = make_residue_ring(p, p_index + 3);

    if (alpha == 1) {
        // res f^{p+2}/(p+2)! dzeta
        TruncatedSeries g = TruncatedSeries::one(rr.ring);
        for (int j = 1; j <= p_index + 2; ++j) {
            g = g * rr.f;
            g *= Qir(rat(1, j));
        }
        return zeta_coefficient(rr, g, -1);
    }
    // res 2 f^{p+1}/(p+1)! (tlog + psi/2 - h(p+1)) dzeta
    TruncatedSeries g = rr.tlog +
                        TruncatedSeries::var(rr.ring, rr.psi) * Qir(Rat(1, 2)) -
                        TruncatedSeries::constant(rr.ring, Qir(harmonic(p_index + 1)));
    for (int j = 1; j <= p_index + 1; ++j) {
        g = g * rr.f;
        g *= Qir(rat(1, j));
    }
    g *= Qir(2);
    return zeta_coefficient(rr, g, -1);
}

} // namespace catalan
