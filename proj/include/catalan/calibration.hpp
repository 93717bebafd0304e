#pragma once

#include "catalan/frobenius.hpp"
#include "catalan/matrix2.hpp"

#include <vector>

namespace catalan {

// Polynomial in the opaque symbol L = log(t2) with ExactScalar (psi-polynomial)
// coefficients. L is annihilated at the special point t2 = 1; calibration
// matrices are stored with both psi and L symbolic.
struct CalScalar {
    std::vector<ExactScalar> c; // c[j] * L^j

    CalScalar() = default;
    CalScalar(long n) { // NOLINT
        if (n != 0) c.assign(1, ExactScalar(n));
    }
    CalScalar(const Rat& r) { // NOLINT
        if (r != 0) c.assign(1, ExactScalar(r));
    }
    CalScalar(const Qir& q) { // NOLINT
        if (!q.is_zero()) c.assign(1, ExactScalar(q));
    }
    CalScalar(const ExactScalar& s) { // NOLINT
        if (!s.is_zero()) c.assign(1, s);
    }

    static CalScalar logt2(int power = 1) {
        CalScalar s;
        s.c.assign(power + 1, ExactScalar());
        s.c[power] = ExactScalar(1);
        return s;
    }

    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int log_degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }

    ExactScalar coeff(int j) const {
        if (j < 0 || j >= static_cast<int>(c.size())) return {};
        return c[static_cast<size_t>(j)];
    }
    // evaluation at the special point, where the symbol vanishes
    ExactScalar at_log_zero() const { return coeff(0); }

    friend CalScalar operator+(const CalScalar& x, const CalScalar& y) {
        CalScalar out;
        out.c.resize(std::max(x.c.size(), y.c.size()));
        for (size_t j = 0; j < out.c.size(); ++j) {
            if (j < x.c.size()) out.c[j] += x.c[j];
            if (j < y.c.size()) out.c[j] += y.c[j];
        }
        out.normalize();
        return out;
    }
    friend CalScalar operator-(const CalScalar& x, const CalScalar& y) {
        CalScalar out;
        out.c.resize(std::max(x.c.size(), y.c.size()));
        for (size_t j = 0; j < out.c.size(); ++j) {
            if (j < x.c.size()) out.c[j] += x.c[j];
            if (j < y.c.size()) out.c[j] -= y.c[j];
        }
        out.normalize();
        return out;
    }
    friend CalScalar operator-(const CalScalar& x) {
        CalScalar out = x;
        for (auto& s : out.c) s = -s;
        return out;
    }
    friend CalScalar operator*(const CalScalar& x, const CalScalar& y) {
        if (x.is_zero() || y.is_zero()) return {};
        CalScalar out;
        out.c.assign(x.c.size() + y.c.size() - 1, ExactScalar());
        for (size_t j = 0; j < x.c.size(); ++j) {
            if (x.c[j].is_zero()) continue;
            for (size_t k = 0; k < y.c.size(); ++k) out.c[j + k] += x.c[j] * y.c[k];
        }
        out.normalize();
        return out;
    }
    CalScalar& operator+=(const CalScalar& y) { return *this = *this + y; }
    CalScalar& operator-=(const CalScalar& y) { return *this = *this - y; }
    CalScalar& operator*=(const CalScalar& y) { return *this = *this * y; }

    CalScalar inverse() const {
        if (log_degree() > 0) throw std::domain_error("inverse of log-dependent scalar");
        if (is_zero()) throw std::domain_error("division by zero scalar");
        return CalScalar(c[0].inverse());
    }

    friend bool operator==(const CalScalar& x, const CalScalar& y) { return x.c == y.c; }
    friend bool operator!=(const CalScalar& x, const CalScalar& y) { return !(x == y); }

    std::string str() const;
};

using CalMat = Mat2<CalScalar>;

struct SMatrixTable {
    FrobeniusPoint point;
    std::vector<CalMat> S; // S[0..K]
};

struct RMatrixTable {
    FrobeniusPoint point;
    std::vector<Mat2<Qir>> R; // R[0..K], normalized canonical frame
};

// Calibration by the defining recursion
//   k S_k + S_k mu - mu S_k = U S_{k-1} - S_{k-1} Reuler,  S_0 = Id,
// with the resonant entry (S_1)_{1,2} fixed to psi + log t2.
SMatrixTable s_matrix(const FrobeniusPoint& p, int K);

// Independent construction through superpotential residues; oracle for the
// recursion.
SMatrixTable s_matrix_residue_form(const FrobeniusPoint& p, int K);

// R-matrix by raising the defining relation [R_{k+1}, U] = (V+k) R_k.
RMatrixTable r_matrix(const FrobeniusPoint& p, int K);

// Closed form for a single coefficient.
Mat2<Qir> r_matrix_closed(const FrobeniusPoint& p, int k);

// Matrix logarithm of 1 + R_1 z + R_2 z^2 + ... ; coefficient list r_1..r_K.
std::vector<Mat2<Qir>> r_matrix_log(const RMatrixTable& table);

// The stated prefactor value -(1/16) log t2 (normalized to 0 at t2 = 1).
CalScalar c_prefactor(const FrobeniusPoint& p);
// Coefficient of log t2 obtained by direct integration of the R_1 diagonal;
// reported against the stated value, not asserted, see project notes.
Rat c_prefactor_integral_coefficient();

// Principal-hierarchy Hamiltonian densities h_{alpha,p} as superpotential
// residues; alpha in {1,2}, p >= -1.
CalScalar hamiltonian_density(const FrobeniusPoint& p, int alpha, int p_index);

// eta^{-1} M^T eta adjoint used by the symplectic identities.
CalMat cal_adjoint(const CalMat& m);

} // namespace catalan
