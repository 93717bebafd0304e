#pragma once

#include "catalan/exact_scalar.hpp"
#include "catalan/matrix2.hpp"

namespace catalan {

// Rank-2 charge d=-1 Frobenius structure on (t1, t2), t2 != 0, with potential
// F = (t1)^2 t2 / 2 + (t2)^2 log(t2) / 2. The flat metric is antidiagonal,
// the unit is d/dt1, and d/dt2 . d/dt2 = (1/t2) d/dt1.
//
// Evaluation points must admit an exact fourth root of t2 inside Q(i, sqrt2):
// t2 = s^4 or t2 = 4 s^4 for rational s. Principal-chart conventions
// (t2 on the positive axis) are hard-coded.
struct FrobeniusPoint {
    ExactScalar t1, t2;          // as given (constant scalars)
    Qir t1v, t2v;                // numeric values
    Qir sqrt_t2;                 // principal square root
    Qir quarter_root_t2;         // (t2)^{1/4} in Q(sqrt2)
    Qir u1, u2;                  // canonical coordinates t1 +- 2 sqrt(t2)
    Qir delta_root_1, delta_root_2; // Delta_i^{1/2} normalizations
};

struct FrameMatrices {
    Mat2<Qir> eta;     // [[0,1],[1,0]]
    Mat2<Qir> mu;      // diag(1/2, -1/2)
    Mat2<Qir> U;       // [[t1, 2], [2 t2, t1]]
    Mat2<Qir> V;       // [[0, i/2], [-i/2, 0]]
    Mat2<Qir> psi;     // flat -> normalized canonical components
    Mat2<Qir> psi_inv;
};

// Structure constants c_{alpha beta}^gamma of the product in flat
// coordinates, indices 0-based.
struct ProductConstants {
    Qir c[2][2][2];
};

FrobeniusPoint make_point(const ExactScalar& t1, const ExactScalar& t2);
FrobeniusPoint make_point(const Rat& t1, const Rat& t2);

ProductConstants product_constants(const FrobeniusPoint& p);
Mat2<Qir> intersection_form(const FrobeniusPoint& p);
FrameMatrices frame_matrices(const FrobeniusPoint& p);

// Exact fourth root of a positive rational within Q(sqrt2); throws
// std::domain_error("no exact fourth root") when absent.
Qir exact_fourth_root(const Rat& r);

} // namespace catalan
