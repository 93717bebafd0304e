#pragma once

#include "catalan/calibration.hpp"
#include "catalan/kdv.hpp"
#include "catalan/series.hpp"

#include <array>
#include <vector>

namespace catalan {

// Truncation plan for the quantized-calibration pipeline. Extraction targets
// are the coefficients of eps^{2g-2} * prod_j t^{alpha_j}_{a_j} with
// g <= genus_max, at most n_max insertion slots and every index
// a_j <= index_max.
//
// Head-room is derived from the weight grading w(T^i_a) = a - 1,
// w(eps) = -3/2. Every term of a tau-log sits at weight exactly zero and
// every piece of the correction operator strictly lowers weight, so target
// monomials (weight >= -weight_floor) stop receiving contributions after
// weight_floor applications and the windows below retain everything that can
// still reach a target:
//   - correction order and iteration count weight_floor = 3(genus_max-1)+n_max,
//   - intermediate slot budget n_max + 2*weight_floor (a second-order piece
//     consumes two slots per unit of weight, nothing consumes slots faster),
//   - internal tau-log index bound index_max + weight_floor (each first-order
//     piece shifts one index down by at least one),
//   - eps exponents in [-2 - 2*weight_floor, 2*genus_max - 2] (no operation
//     lowers the eps exponent; a single conjugated second-order piece dips at
//     most four below its result before its eps^2 prefactor lands).
struct GiventalPlan {
    int genus_max = 0;
    int n_max = 0;
    int index_max = 0;

    int weight_floor = 0;
    int slot_cap = 0;
    int kdv_index = 0;
    Window eps_window{0, 0};

    // claimed-coefficient region: coefficients outside it may be truncation
    // artifacts and must not be read
    bool covers(int g, int slots, int max_index) const {
        return 0 <= g && g <= genus_max && 0 <= slots && slots <= n_max &&
               max_index <= index_max;
    }
};

GiventalPlan givental_plan(int genus_max, int n_max, int index_max);

// Total genus expansion of the two coupled tau-logs after conjugation by the
// quantized upper-triangular calibration, written in the normalized canonical
// frame: variables T[i][a] = T^{i+1}_a, i in {0,1}, with the dispersion
// variable eps. log_ancestor keeps only monomials inside the claimed region's
// slot budget; everything else is internal head-room.
struct AncestorFrame {
    GiventalPlan plan;
    FrobeniusPoint point;
    RingPtr ring;
    std::array<std::vector<VarId>, 2> T;
    VarId eps;
    int slot_family = 0;
    TruncatedSeries log_ancestor;
};

// Builds the frame-side ancestor expansion at the given point, taking the
// upper-triangular data from the calibration module.
AncestorFrame ancestor_potential_frame(const GiventalPlan& plan, const FrobeniusPoint& p);

// Same pipeline with caller-supplied matrix-log coefficients r_log[l] = r_l
// (index 0 ignored). An empty or all-zero list yields the bare coupled
// tau-log sum; used to isolate the correction operator in tests.
AncestorFrame ancestor_potential_frame(const GiventalPlan& plan, const FrobeniusPoint& p,
                                       const std::vector<Mat2<Qir>>& r_log);

// Ancestor expansion rotated to flat-frame variables t[alpha][a] through the
// frame change T^i_a = sum_alpha Psi_{i,alpha} t^alpha_a.
struct FlatAncestor {
    GiventalPlan plan;
    FrobeniusPoint point;
    RingPtr ring;
    std::array<std::vector<VarId>, 2> t;
    VarId eps;
    int slot_family = 0;
    TruncatedSeries log_ancestor;
};

FlatAncestor flat_ancestor_potential(const AncestorFrame& frame);

// Full descendent genus expansion around the expansion point t^1 = 0,
// t^2 = t2-coordinate of the base point: variables t[alpha][a] measure the
// deviation of t^{alpha+1}_a from that point (so t[1][0] is t^2_0 minus its
// base value). The t-free part is normalized away: the overall constant of
// the underlying exponential is fixed to one.
struct DescendentPotential {
    GiventalPlan plan;
    FrobeniusPoint point;
    Qir cal_const; // value assigned to psi + log t2 (numeric mode)
    int psi = -1;  // ring variable carrying that constant (symbolic mode)
    RingPtr ring;
    std::array<std::vector<VarId>, 2> t;
    VarId eps;
    int slot_family = 0;
    TruncatedSeries log_descendent;
};

// Assembles log D = (1/2 eps^2) * propagator quadratic form + ancestor
// expansion at triangular-substituted variables, with the calibration
// constant psi + log t2 evaluated at cal_const. The quadratic form is taken
// in the shifted slot variables q^alpha_a = t^alpha_a - delta^{alpha,1}
// delta_{a,1}, which supplies the one- and two-slot genus-zero sectors.
DescendentPotential descendent_potential(const GiventalPlan& plan, const FrobeniusPoint& p,
                                         const Qir& cal_const);

// Same assembly with the calibration constant kept symbolic: coefficients of
// log_descendent are polynomials in the extra ring variable `psi`, so
// identities claimed for every value of the constant can be checked
// coefficientwise. Specializing psi recovers the numeric assembly.
DescendentPotential descendent_potential_psi(const GiventalPlan& plan, const FrobeniusPoint& p);

// Value of a calibration-matrix entry with the single constant psi + log t2
// set to cal_const. Sound because every entry depends on psi and log t2 only
// through their sum (a tested property of the calibration recursion).
Qir cal_entry_value(const CalScalar& s, const Qir& cal_const);
Mat2<Qir> cal_matrix_value(const CalMat& m, const Qir& cal_const);

// Propagator kernel of the triangular calibration,
//   W_{kl} = sum_{j=0..l} (-1)^j S*_{k+1+j} S_{l-j},
// equivalently the expansion of (S*(w) S(z) - 1)/(w^{-1} + z^{-1}) in
// w^{-k} z^{-l}. Returned as W[k][l] for 0 <= k, l <= K; requires the table
// to reach index 2K + 1.
std::vector<std::vector<Mat2<Qir>>> propagator_kernel(const SMatrixTable& table, int K,
                                                      const Qir& cal_const);

// Closed genus-zero one-slot coefficient: [eps^{-2} t^1_a] of the descendent
// expansion equals the eta-paired first column entry of S_{a+2}.
Qir one_slot_genus_zero(const SMatrixTable& table, int a, const Qir& cal_const);

// Closed genus-zero two-slot coefficient: the symmetric second derivative
// [eps^{-2} t^1_a t^1_b] of the descendent expansion, obtained by dividing
// the paired first-column square of the calibration by (z + w).
Qir two_slot_genus_zero(const SMatrixTable& table, int a, int b, const Qir& cal_const);

// Quantization of a linear Hamiltonian on the loop space,
//   f(z) = sum_{l>=0} upper[l] (-z)^l + sum_{l>=0} lower[l] (-z)^{-(l+1)},
// acting on a Fock ring with slot variables q[alpha][l] and dispersion eps:
//   fhat = sum_l eps (-1)^{l+1} upper[l]^alpha d/dq^alpha_l
//        + sum_l eps^{-1} lower[l]_alpha q^alpha_l.
// upper holds vector components, lower holds eta-lowered components.
struct LinearHamiltonian {
    std::vector<Vec2<Qir>> upper;
    std::vector<Vec2<Qir>> lower;
};

TruncatedSeries apply_quantized(const LinearHamiltonian& h, const TruncatedSeries& f,
                                const std::array<std::vector<VarId>, 2>& q, VarId eps);

// Residue pairing Omega(f1, f2) = res_z (f1(-z), f2(z)) dz. The commutator
// of two quantized linear Hamiltonians is this constant times the identity.
Qir symplectic_pairing(const LinearHamiltonian& f1, const LinearHamiltonian& f2);

} // namespace catalan
