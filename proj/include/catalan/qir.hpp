#pragma once

#include "catalan/rational.hpp"

#include <array>
#include <ostream>

namespace catalan {

// Element of Q(i, sqrt2) = Q[i, r]/(i^2 + 1, r^2 - 2), stored on the basis
// {1, i, r, i r}. This is the coefficient field for all geometric data:
// it houses the imaginary unit of the normalized canonical frame and the
// sqrt(2) of the Delta^{1/2} normalizations.
struct Qir {
    std::array<Rat, 4> c{}; // c[0] + c[1] i + c[2] r + c[3] i r

    Qir() = default;
    Qir(long n) { c[0] = n; } // NOLINT: implicit by design
    Qir(const Rat& r0) { c[0] = r0; } // NOLINT
    Qir(Rat r0, Rat r1, Rat r2, Rat r3) : c{std::move(r0), std::move(r1), std::move(r2), std::move(r3)} {}

    static Qir unit_i() { return Qir(0, 1, 0, 0); }
    static Qir sqrt2() { return Qir(0, 0, 1, 0); }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

    const Rat& rational_part() const { return c[0]; }

    friend Qir operator+(const Qir& a, const Qir& b) {
        return Qir(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]);
    }
    friend Qir operator-(const Qir& a, const Qir& b) {
        return Qir(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]);
    }
    friend Qir operator-(const Qir& a) { return Qir(-a.c[0], -a.c[1], -a.c[2], -a.c[3]); }

    Qir& operator+=(const Qir& b) {
        for (int k = 0; k < 4; ++k) c[k] += b.c[k];
        return *this;
    }
    Qir& operator-=(const Qir& b) {
        for (int k = 0; k < 4; ++k) c[k] -= b.c[k];
        return *this;
    }

    friend Qir operator*(const Qir& a, const Qir& b) {
        // Fast paths: the overwhelming majority of coefficients are rational.
        if (a.is_rational()) {
            if (a.c[0] == 0) return Qir();
            return Qir(a.c[0] * b.c[0], a.c[0] * b.c[1], a.c[0] * b.c[2], a.c[0] * b.c[3]);
        }
        if (b.is_rational()) {
            if (b.c[0] == 0) return Qir();
            return Qir(a.c[0] * b.c[0], a.c[1] * b.c[0], a.c[2] * b.c[0], a.c[3] * b.c[0]);
        }
        // (a0 + a1 i + a2 r + a3 ir)(b0 + b1 i + b2 r + b3 ir), i^2 = -1, r^2 = 2
        const Rat& a0 = a.c[0];
        const Rat& a1 = a.c[1];
        const Rat& a2 = a.c[2];
        const Rat& a3 = a.c[3];
        const Rat& b0 = b.c[0];
        const Rat& b1 = b.c[1];
        const Rat& b2 = b.c[2];
        const Rat& b3 = b.c[3];
        return Qir(a0 * b0 - a1 * b1 + 2 * (a2 * b2 - a3 * b3),
                   a0 * b1 + a1 * b0 + 2 * (a2 * b3 + a3 * b2),
                   a0 * b2 + a2 * b0 - (a1 * b3 + a3 * b1),
                   a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1);
    }

    Qir& operator*=(const Qir& b) { return *this = *this * b; }

    // Conjugations generate Gal(Q(i,r)/Q); the product of the three nontrivial
    // conjugates over the norm gives the inverse.
    Qir conj_i() const { return Qir(c[0], -c[1], c[2], -c[3]); }
    Qir conj_r() const { return Qir(c[0], c[1], -c[2], -c[3]); }

    Qir inverse() const {
        if (is_rational()) {
            if (c[0] == 0) throw std::domain_error("division by zero in Q(i,r)");
            return Qir(1 / c[0]);
        }
        Qir prod = conj_i() * conj_r() * conj_i().conj_r();
        Qir norm = *this * prod; // rational by Galois theory
        if (!norm.is_rational() || norm.c[0] == 0)
            throw std::domain_error("division by zero in Q(i,r)");
        Rat inv = 1 / norm.c[0];
        return Qir(prod.c[0] * inv, prod.c[1] * inv, prod.c[2] * inv, prod.c[3] * inv);
    }

    friend Qir operator/(const Qir& a, const Qir& b) { return a * b.inverse(); }

    friend bool operator==(const Qir& a, const Qir& b) { return a.c == b.c; }
    friend bool operator!=(const Qir& a, const Qir& b) { return !(a == b); }

    // Rendering like "3/2+1/2i-r": compact, for reports and debugging.
    std::string str() const {
        static const char* tags[4] = {"", "i", "r", "ir"};
        std::string out;
        for (int k = 0; k < 4; ++k) {
            if (c[k] == 0) continue;
            std::string piece = c[k].str();
            if (!out.empty() && piece[0] != '-') out += "+";
            if (k > 0 && (c[k] == 1 || c[k] == -1))
                piece = (c[k] == 1) ? "" : "-";
            out += piece + tags[k];
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Qir& q) { return os << q.str(); }
};

} // namespace catalan
