#pragma once

// Brute-force census of surface gluings of labeled polygons, and the residue
// identities that tie the one-column calibration entries to the spectral-curve
// side of the same counts.  This module is deliberately independent of the
// quantization pipeline: it enumerates perfect matchings of polygon sides and
// classifies the glued surfaces by Euler characteristic, so that the numbers
// it produces can serve as an external oracle for the descendent expansion.

#include "catalan/exact_scalar.hpp"
#include "catalan/givental.hpp"
#include "catalan/rational.hpp"

#include <vector>

namespace catalan {

// a counting request: rooted, ordered polygons with the given side counts,
// glued into a closed connected surface of the given genus
struct MapCountQuery {
    int genus = 0;
    std::vector<int> profile; // side count of each polygon, all >= 1
};

// number of side pairings of the labeled polygons whose glued surface is
// connected and has the requested genus; zero when the total side count is
// odd.  Throws std::domain_error("brute-force bound") when the total side
// count exceeds `bound`.
long long count_surface_gluings(const MapCountQuery& q, int bound = 14);

// connected gluing counts for every genus at once, indexed by genus; the
// trailing entries are trimmed so the vector ends with a nonzero count (an
// empty vector means no connected gluing exists at all)
std::vector<long long> gluing_genus_census(const std::vector<int>& profile, int bound = 14);

// residue of (x^{k+1}/(k+1)!) d(-d/dx)^a xi^alpha(z) at z = 0, where
// x = z + 1/z and the two functions xi^1 = z/(1-z^2), xi^2 = 1/(1-z^2) are
// the expansions of the spectral-curve kernels at the special base point.
// Vanishes for a > k >= -1 and reproduces the first column of the
// calibration matrices, (S_{k-a})^alpha_1 at psi = 0, for k >= a >= 0.
ExactScalar xi_residue_identity(int alpha, int k, int a);

// one comparison row of the count verifier: the polygon side counts, the
// brute-force gluing count, and the weighted coefficient extracted from the
// descendent expansion (coefficient times the multiplicity factorials of the
// repeated slots times prod (k_i+1)! for sides k_i+1)
struct CountComparison {
    int genus = 0;
    std::vector<int> sides;
    Rat brute = 0;
    Rat pipeline = 0;
    bool match = false;
};

struct CountReport {
    std::vector<CountComparison> rows;
    int mismatches = 0;
};

// sweeps every genus, slot count and index profile the plan can reach (and
// the brute-force bound covers) and compares the descendent expansion at the
// special base point against the gluing census
CountReport verify_polygon_counts(const GiventalPlan& plan, int bound = 14);

} // namespace catalan
