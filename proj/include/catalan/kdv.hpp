#pragma once

#include "catalan/rational.hpp"
#include "catalan/series.hpp"

#include <vector>

namespace catalan {

// Intersection number <tau_{a_1} ... tau_{a_n}>_g of psi-classes on the
// moduli of stable curves, exact. Returns 0 when the dimension constraint
// sum a_i = 3g-3+n fails, when any index is negative, or when n = 0; these
// are valid queries, not errors. Values are produced by the Virasoro
// (string/dilaton/KdV) recursion and memoized, so repeated queries are cheap.
Rat intersection_number(int g, std::vector<int> partition);

// log tau of the KdV hierarchy at the string solution, in the exponential
// generating convention fixed for this project:
//
//   log tau = sum_{g,n} eps^{2g-2}/n! sum_{a_1..a_n} <tau_{a_1}...tau_{a_n}>_g
//             prod_i T_{a_i},
//
// with the argument rescaling T_a -> delta_half * T_a, eps -> delta_half *
// eps (i.e. eps^2 -> Delta eps^2 with Delta = delta_half^2) applied on the
// way in. Pass delta_half = 1 for the unscaled series. T.size() bounds the
// descendent index a; (g, n) ranges over g <= genus_max, n <= n_max in the
// stable range 2g-2+n > 0. Throws std::invalid_argument when the ring caps
// cannot hold a term of the requested range.
TruncatedSeries kdv_tau_log(const RingPtr& ring, const std::vector<VarId>& T,
                            VarId eps, const Qir& delta_half, int genus_max,
                            int n_max);

} // namespace catalan
