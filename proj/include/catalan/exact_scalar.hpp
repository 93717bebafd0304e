#pragma once

#include "catalan/qir.hpp"

#include <vector>

namespace catalan {

// Polynomial in the calibration log-variable psi with coefficients in Q(i,r).
// Scalar entries of the calibration matrices live here: psi enters those
// matrices polynomially and never in a denominator, so a polynomial is the
// exact closure needed at the scalar level.
struct ExactScalar {
    std::vector<Qir> a; // a[k] * psi^k, trailing zeros stripped

    ExactScalar() = default;
    ExactScalar(long n) { // NOLINT
        if (n != 0) a.assign(1, Qir(n));
    }
    ExactScalar(const Rat& r) { // NOLINT
        if (r != 0) a.assign(1, Qir(r));
    }
    ExactScalar(const Qir& q) { // NOLINT
        if (!q.is_zero()) a.assign(1, q);
    }

    static ExactScalar psi(int power = 1) {
        ExactScalar s;
        s.a.assign(power + 1, Qir());
        s.a[power] = Qir(1);
        return s;
    }

    void normalize() {
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }

    bool is_zero() const { return a.empty(); }
    bool is_constant() const { return a.size() <= 1; }
    int psi_degree() const { return a.empty() ? -1 : static_cast<int>(a.size()) - 1; }

    Qir coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(a.size())) return Qir();
        return a[static_cast<size_t>(k)];
    }

    Qir at_psi_zero() const { return coeff(0); }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        ExactScalar out;
        out.a.resize(std::max(x.a.size(), y.a.size()));
        for (size_t k = 0; k < out.a.size(); ++k) {
            if (k < x.a.size()) out.a[k] += x.a[k];
            if (k < y.a.size()) out.a[k] += y.a[k];
        }
        out.normalize();
        return out;
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        ExactScalar out;
        out.a.resize(std::max(x.a.size(), y.a.size()));
        for (size_t k = 0; k < out.a.size(); ++k) {
            if (k < x.a.size()) out.a[k] += x.a[k];
            if (k < y.a.size()) out.a[k] -= y.a[k];
        }
        out.normalize();
        return out;
    }
    friend ExactScalar operator-(const ExactScalar& x) {
        ExactScalar out = x;
        for (auto& q : out.a) q = -q;
        return out;
    }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        if (x.is_zero() || y.is_zero()) return {};
        ExactScalar out;
        out.a.assign(x.a.size() + y.a.size() - 1, Qir());
        for (size_t j = 0; j < x.a.size(); ++j) {
            if (x.a[j].is_zero()) continue;
            for (size_t k = 0; k < y.a.size(); ++k)
                out.a[j + k] += x.a[j] * y.a[k];
        }
        out.normalize();
        return out;
    }

    ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
    ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }
    ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }

    // Exact inverse of a psi-free scalar; psi-dependent denominators do not
    // occur in any pipeline, so demanding constancy is an invariant check.
    ExactScalar inverse() const {
        if (!is_constant())
            throw std::domain_error("inverse of psi-dependent scalar");
        if (is_zero()) throw std::domain_error("division by zero scalar");
        return ExactScalar(a[0].inverse());
    }

    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
        return x * y.inverse();
    }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) { return x.a == y.a; }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    std::string str() const {
        if (a.empty()) return "0";
        std::string out;
        for (size_t k = 0; k < a.size(); ++k) {
            if (a[k].is_zero()) continue;
            std::string piece = a[k].str();
            bool needs_parens = piece.find('+') != std::string::npos ||
                                piece.find('-', 1) != std::string::npos;
            if (!out.empty()) out += piece[0] == '-' && !needs_parens ? "" : "+";
            if (needs_parens && k > 0) piece = "(" + piece + ")";
            if (k == 0) {
                out += piece;
            } else {
                if (piece == "1")
                    out += "psi";
                else if (piece == "-1")
                    out += "-psi";
                else
                    out += piece + "*psi";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }
};

} // namespace catalan
