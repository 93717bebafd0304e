#include "catalan/maps.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace catalan {

namespace {

// union-find over the polygons, used to keep only connected gluings
struct PolygonComponents {
    std::vector<int> parent;

    explicit PolygonComponents(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// the glued surface of a complete matching: vertices are the orbits of the
// corner permutation side -> mate(next(side)), edges are the matched pairs,
// faces are the polygons themselves.  Returns the genus, or -1 when the
// surface is disconnected.
int matching_genus(const std::vector<int>& mate, const std::vector<int>& next,
                   const std::vector<int>& owner, int polygons) {
    const int sides = static_cast<int>(mate.size());

    PolygonComponents comp(polygons);
    for (int s = 0; s < sides; ++s)
        if (mate[static_cast<size_t>(s)] > s)
            comp.unite(owner[static_cast<size_t>(s)], owner[static_cast<size_t>(mate[static_cast<size_t>(s)])]);
    int components = 0;
    for (int p = 0; p < polygons; ++p)
        if (comp.find(p) == p) ++components;
    if (components != 1) return -1;

    std::vector<char> seen(static_cast<size_t>(sides), 0);
    int vertices = 0;
    for (int s = 0; s < sides; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++vertices;
        int c = s;
        while (!seen[static_cast<size_t>(c)]) {
            seen[static_cast<size_t>(c)] = 1;
            c = mate[static_cast<size_t>(next[static_cast<size_t>(c)])];
        }
    }

    const int euler = vertices - sides / 2 + polygons;
    // connected closed orientable surface: euler = 2 - 2g, always even
    return (2 - euler) / 2;
}

// canonical enumeration: always match the smallest free side, so every
// perfect matching is produced exactly once
void enumerate_matchings(std::vector<int>& mate, const std::vector<int>& next,
                         const std::vector<int>& owner, int polygons,
                         std::vector<long long>& census) {
    const int sides = static_cast<int>(mate.size());
    int first = -1;
    for (int s = 0; s < sides; ++s)
        if (mate[static_cast<size_t>(s)] < 0) {
            first = s;
            break;
        }
    if (first < 0) {
        int g = matching_genus(mate, next, owner, polygons);
        if (g >= 0) {
            if (static_cast<size_t>(g) >= census.size()) census.resize(static_cast<size_t>(g) + 1, 0);
            ++census[static_cast<size_t>(g)];
        }
        return;
    }
    for (int s = first + 1; s < sides; ++s) {
        if (mate[static_cast<size_t>(s)] >= 0) continue;
        mate[static_cast<size_t>(first)] = s;
        mate[static_cast<size_t>(s)] = first;
        enumerate_matchings(mate, next, owner, polygons, census);
        mate[static_cast<size_t>(first)] = -1;
        mate[static_cast<size_t>(s)] = -1;
    }
}

// dense power series in z with rational coefficients, long enough for the
// residue extraction at hand
std::vector<Rat> xi_series(int alpha, int order) {
    std::vector<Rat> f(static_cast<size_t>(order) + 1, Rat(0));
    // xi^1 = z + z^3 + z^5 + ..., xi^2 = 1 + z^2 + z^4 + ...
    for (int e = (alpha == 1) ? 1 : 0; e <= order; e += 2) f[static_cast<size_t>(e)] = 1;
    return f;
}

// one application of -d/dx on a power series in z, where x = z + 1/z:
// (-d/dx) f = z^2 f'(z) / (1 - z^2)
std::vector<Rat> minus_d_dx(const std::vector<Rat>& f) {
    const size_t n = f.size();
    std::vector<Rat> num(n, Rat(0));
    for (size_t e = 1; e < n; ++e) {
        // z^2 * e * z^{e-1} = e * z^{e+1}
        if (e + 1 < n) num[e + 1] = Rat(static_cast<long>(e)) * f[e];
    }
    std::vector<Rat> out(n, Rat(0));
    for (size_t e = 0; e < n; ++e) { // multiply by 1/(1-z^2) = sum z^{2m}
        if (num[e].is_zero()) continue;
        for (size_t t = e; t < n; t += 2) out[t] += num[e];
    }
    return out;
}

} // namespace

std::vector<long long> gluing_genus_census(const std::vector<int>& profile, int bound) {
    int total = 0;
    for (int k : profile) {
        if (k < 1) throw std::domain_error("polygon needs at least one side");
        total += k;
    }
    if (total > bound) throw std::domain_error("brute-force bound");
    if (total % 2 != 0) return {};

    std::vector<int> next(static_cast<size_t>(total));
    std::vector<int> owner(static_cast<size_t>(total));
    int off = 0;
    for (size_t p = 0; p < profile.size(); ++p) {
        const int k = profile[p];
        for (int s = 0; s < k; ++s) {
            next[static_cast<size_t>(off + s)] = off + (s + 1) % k;
            owner[static_cast<size_t>(off + s)] = static_cast<int>(p);
        }
        off += k;
    }

    std::vector<long long> census;
    std::vector<int> mate(static_cast<size_t>(total), -1);
    enumerate_matchings(mate, next, owner, static_cast<int>(profile.size()), census);
    while (!census.empty() && census.back() == 0) census.pop_back();
    return census;
}

long long count_surface_gluings(const MapCountQuery& q, int bound) {
    if (q.genus < 0) return 0;
    std::vector<long long> census = gluing_genus_census(q.profile, bound);
    if (static_cast<size_t>(q.genus) >= census.size()) return 0;
    return census[static_cast<size_t>(q.genus)];
}

ExactScalar xi_residue_identity(int alpha, int k, int a) {
    if (alpha != 1 && alpha != 2) throw std::invalid_argument("direction index must be 1 or 2");
    if (k < -1 || a < 0) throw std::invalid_argument("residue outside the admissible range");

    const int order = k + 2;
    std::vector<Rat> f = xi_series(alpha, order);
    for (int j = 0; j < a; ++j) f = minus_d_dx(f);

    // res_{z=0} x^{k+1} f'(z) dz / (k+1)! picks the z^{-1} coefficient of the
    // product; x^{k+1} expands by binomials into z^{k+1-2j}, which pairs with
    // the derivative of the z^{2j-k-1} term of f
    Rat res = 0;
    Rat binom = 1; // binom(k+1, j)
    for (int j = 0; j <= k + 1; ++j) {
        const int e = 2 * j - k - 1;
        if (e >= 1 && e <= order) res += binom * Rat(e) * f[static_cast<size_t>(e)];
        binom = binom * Rat(k + 1 - j) / Rat(j + 1);
    }
    res = res / factorial(k + 1);
    return ExactScalar(Qir(res));
}

CountReport verify_polygon_counts(const GiventalPlan& plan, int bound) {
    const FrobeniusPoint pt = make_point(Rat(0), Rat(1));
    const DescendentPotential D = descendent_potential(plan, pt, Qir(0));

    CountReport report;

    // nondecreasing index profiles (k_1 <= ... <= k_n), sides k_i + 1
    std::vector<int> ks;
    auto compare_profile = [&]() {
        int side_sum = 0;
        for (int k : ks) side_sum += k + 1;
        if (side_sum > bound) return;

        std::vector<int> sides;
        for (int k : ks) sides.push_back(k + 1);
        const std::vector<long long> census = gluing_genus_census(sides, bound);

        Rat slot_weight = 1;
        std::map<int, int> mult;
        for (int k : ks) ++mult[k];
        for (const auto& [k, cnt] : mult) slot_weight = slot_weight * factorial(cnt);
        for (int k : ks) slot_weight = slot_weight * factorial(k + 1);

        for (int genus = 0; genus <= plan.genus_max; ++genus) {
            CountComparison row;
            row.genus = genus;
            row.sides = sides;
            row.brute = static_cast<size_t>(genus) < census.size()
                            ? Rat(census[static_cast<size_t>(genus)])
                            : Rat(0);

            Monomial m = Monomial::single(D.eps, 2 * genus - 2);
            for (int k : ks) m = m.times(Monomial::single(D.t[0][static_cast<size_t>(k)], 1));
            const Qir coeff = D.log_descendent.coeff(m);

            row.match = coeff.is_rational();
            if (row.match) {
                row.pipeline = coeff.rational_part() * slot_weight;
                row.match = (row.pipeline == row.brute);
            }
            if (!row.match) ++report.mismatches;
            report.rows.push_back(std::move(row));
        }
    };

    std::function<void(int, int)> extend = [&](int lo, int left) {
        if (!ks.empty()) compare_profile();
        if (left == 0) return;
        for (int k = lo; k <= plan.index_max; ++k) {
            ks.push_back(k);
            extend(k, left - 1);
            ks.pop_back();
        }
    };
    extend(0, plan.n_max);

    return report;
}

} // namespace catalan
