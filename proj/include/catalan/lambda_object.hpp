#pragma once

#include "catalan/series.hpp"

namespace catalan {

// Expansion in the spectral variable with an optional single logarithmic
// term:  value = main + logpart * log(lambda).  Log-degree two is never
// needed by any pipeline, so products and antiderivatives that would create
// it are rejected.
struct LambdaObject {
    RingPtr ring;
    VarId lambda = 0;
    TruncatedSeries main;
    TruncatedSeries logpart;

    LambdaObject() = default;
    LambdaObject(RingPtr r, VarId lam)
        : ring(std::move(r)), lambda(lam), main(ring), logpart(ring) {}
    LambdaObject(RingPtr r, VarId lam, TruncatedSeries m)
        : ring(std::move(r)), lambda(lam), main(std::move(m)), logpart(ring) {}
    LambdaObject(RingPtr r, VarId lam, TruncatedSeries m, TruncatedSeries lp)
        : ring(std::move(r)), lambda(lam), main(std::move(m)), logpart(std::move(lp)) {}

    bool is_zero() const { return main.is_zero() && logpart.is_zero(); }
    bool log_free() const { return logpart.is_zero(); }

    LambdaObject& operator+=(const LambdaObject& o) {
        main += o.main;
        logpart += o.logpart;
        return *this;
    }
    LambdaObject& operator-=(const LambdaObject& o) {
        main -= o.main;
        logpart -= o.logpart;
        return *this;
    }
    friend LambdaObject operator+(LambdaObject a, const LambdaObject& b) { return a += b; }
    friend LambdaObject operator-(LambdaObject a, const LambdaObject& b) { return a -= b; }
    friend LambdaObject operator-(const LambdaObject& a) {
        return {a.ring, a.lambda, -a.main, -a.logpart};
    }
    LambdaObject& operator*=(const Qir& c) {
        main *= c;
        logpart *= c;
        return *this;
    }
    friend LambdaObject operator*(LambdaObject a, const Qir& c) { return a *= c; }
    friend LambdaObject operator*(const Qir& c, LambdaObject a) { return a *= c; }

    friend LambdaObject operator*(const LambdaObject& a, const LambdaObject& b) {
        if (!a.logpart.is_zero() && !b.logpart.is_zero())
            throw std::domain_error("log-degree overflow in lambda product");
        LambdaObject out(a.ring, a.lambda);
        out.main = a.main * b.main;
        out.logpart = a.main * b.logpart + a.logpart * b.main;
        return out;
    }

    friend bool operator==(const LambdaObject& a, const LambdaObject& b) {
        return a.main == b.main && a.logpart == b.logpart;
    }
    friend bool operator!=(const LambdaObject& a, const LambdaObject& b) { return !(a == b); }

    LambdaObject d_lambda() const {
        LambdaObject out(ring, lambda);
        out.main = main.derivative(lambda) + logpart.times_monomial(Monomial::single(lambda, -1));
        out.logpart = logpart.derivative(lambda);
        return out;
    }

    // Formal antiderivative in lambda:
    //   lam^p          -> lam^{p+1}/(p+1)            (p != -1)
    //   lam^{-1}       -> log(lam)
    //   lam^p log(lam) -> lam^{p+1}/(p+1) (log(lam) - 1/(p+1))   (p != -1)
    // The remaining case lam^{-1} log(lam) would need log-degree two.
    LambdaObject antiderivative() const {
        LambdaObject out(ring, lambda);
        for (const auto& [m, c] : main.terms()) {
            int p = m.exponent(lambda);
            if (p == -1) {
                Monomial m2 = m;
                m2.bump(lambda, 1);
                out.logpart.add_term(std::move(m2), c);
            } else {
                Monomial m2 = m;
                m2.bump(lambda, 1);
                out.main.add_term(std::move(m2), c * Qir(rat(1, p + 1)));
            }
        }
        for (const auto& [m, c] : logpart.terms()) {
            int p = m.exponent(lambda);
            if (p == -1)
                throw std::domain_error("log-degree overflow in lambda antiderivative");
            Monomial m2 = m;
            m2.bump(lambda, 1);
            Qir scaled = c * Qir(rat(1, p + 1));
            out.logpart.add_term(m2, scaled);
            out.main.add_term(std::move(m2), scaled * Qir(rat(-1, p + 1)));
        }
        return out;
    }

    // Residue at infinity, minus the lam^{-1} coefficient.
    TruncatedSeries residue_at_infinity() const {
        if (!logpart.is_zero())
            throw std::domain_error("logarithmic residue undefined");
        TruncatedSeries r = main.coeff_of(lambda, -1);
        r *= Qir(-1);
        return r;
    }
};

} // namespace catalan
