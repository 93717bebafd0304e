#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catalan/kdv.hpp"

#include <algorithm>
#include <functional>
#include <vector>

using namespace catalan;

namespace {

Rat in(int g, std::vector<int> p) { return intersection_number(g, std::move(p)); }

// All nondecreasing index tuples with n parts, entries <= hi, any sum <= dim_hi.
std::vector<std::vector<int>> tuples_up_to(int n, int hi, int dim_hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> walk = [&](int min_index, int left) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int a = min_index; a <= hi && a <= left; ++a) {
            cur.push_back(a);
            walk(a, left - a);
            cur.pop_back();
        }
    };
    walk(0, dim_hi);
    return out;
}

struct TauRing {
    RingPtr ring;
    std::vector<VarId> T;
    VarId eps;
};

TauRing make_tau_ring(int index_max, int genus_max, int n_max, int eps_extra = 0) {
    auto ring = Ring::make();
    int tf = ring->add_family("T");
    int ef = ring->add_family("eps");
    TauRing tr;
    tr.eps = ring->add_var("eps", ef, {-2, 2 * genus_max - 2 + eps_extra});
    for (int a = 0; a <= index_max; ++a)
        tr.T.push_back(ring->add_var("T" + std::to_string(a), tf, {0, n_max}));
    (void)tf;
    tr.ring = ring;
    return tr;
}

int t_degree(const Ring& ring, const Monomial& m, int t_family) {
    int d = 0;
    for (const auto& p : m.parts)
        if (ring.family(p.v) == t_family) d += p.e;
    return d;
}

} // namespace

TEST_CASE("pinned intersection numbers") {
    CHECK(in(0, {0, 0, 0}) == Rat(1));
    CHECK(in(1, {1}) == Rat(1, 24));

    // one-point ladder <tau_{3g-2}>_g = 1/(24^g g!)
    Rat denom(1);
    for (int g = 1; g <= 4; ++g) {
        denom *= Rat(24) * g;
        CHECK(in(g, {3 * g - 2}) == 1 / denom);
    }
    CHECK(in(2, {4}) == Rat(1, 1152));

    CHECK(in(2, {2, 3}) == Rat(29, 5760));
    CHECK(in(2, {1, 4}) == Rat(1, 384));
    CHECK(in(1, {0, 2}) == Rat(1, 24));
    CHECK(in(1, {0, 0, 3}) == Rat(1, 24));
    CHECK(in(1, {0, 1, 2}) == Rat(1, 12));
    CHECK(in(1, {1, 1, 1}) == Rat(1, 12));
    CHECK(in(0, {0, 0, 0, 1}) == Rat(1));
    CHECK(in(0, {0, 0, 0, 0, 2}) == Rat(1));
    CHECK(in(0, {0, 0, 0, 1, 1}) == Rat(2));
}

TEST_CASE("dimension rule and degenerate queries return zero") {
    CHECK(in(0, {0, 0}) == Rat(0));        // 3g-3+n = -1 impossible
    CHECK(in(0, {0, 0, 0, 0}) == Rat(0));  // sum 0, needs 1
    CHECK(in(2, {5}) == Rat(0));           // sum 5, needs 4
    CHECK(in(1, {2}) == Rat(0));           // sum 2, needs 1
    CHECK(in(0, {-1, 2, 2}) == Rat(0));    // negative index
    CHECK(in(-1, {0}) == Rat(0));          // negative genus
    CHECK(in(1, {}) == Rat(0));            // empty insertion list
    CHECK(in(3, {}) == Rat(0));
}

TEST_CASE("genus-zero closed formula (n-3)!/prod a_i!") {
    for (int n = 3; n <= 7; ++n) {
        for (const auto& p : tuples_up_to(n, n - 3, n - 3)) {
            long dim = 0;
            for (int a : p) dim += a;
            if (dim != n - 3) continue;
            Rat expect = factorial(n - 3);
            for (int a : p) expect /= factorial(a);
            CHECK(in(0, p) == expect);
        }
    }
}

TEST_CASE("string equation across the populated table") {
    int checked = 0;
    for (int g = 0; g <= 3; ++g) {
        for (int n = 1; n <= 5; ++n) {
            if (2 * g - 2 + n <= 0) continue; // reduction target must be stable
            for (const auto& p : tuples_up_to(n, 3 * g + 3, 3 * g - 2 + n)) {
                std::vector<int> with_zero(p);
                with_zero.push_back(0);
                Rat lhs = in(g, with_zero);
                Rat rhs(0);
                for (size_t i = 0; i < p.size(); ++i) {
                    std::vector<int> lowered(p);
                    lowered[i] -= 1;
                    rhs += in(g, lowered);
                }
                CHECK(lhs == rhs);
                if (lhs != 0) ++checked;
            }
        }
    }
    CHECK(checked > 50); // the identity held on plenty of nonzero values
}

TEST_CASE("dilaton equation across the populated table") {
    int checked = 0;
    for (int g = 0; g <= 3; ++g) {
        for (int n = 1; n <= 5; ++n) {
            for (const auto& p : tuples_up_to(n, 3 * g + 3, 3 * g - 3 + n)) {
                std::vector<int> with_one(p);
                with_one.push_back(1);
                Rat lhs = in(g, with_one);
                Rat rhs = Rat(2 * g - 2 + n) * in(g, p);
                CHECK(lhs == rhs);
                if (lhs != 0) ++checked;
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("tau-log coefficients in the fixed generating convention") {
    TauRing tr = make_tau_ring(4, 2, 5);
    TruncatedSeries f = kdv_tau_log(tr.ring, tr.T, tr.eps, Qir(1), 2, 5);

    auto coeff = [&](int eps_exp, std::vector<std::pair<int, int>> texp) {
        Monomial m = Monomial::single(tr.eps, eps_exp);
        for (auto [a, e] : texp) m.bump(tr.T[static_cast<size_t>(a)], e);
        return f.coeff(m);
    };

    CHECK(coeff(-2, {{0, 3}}) == Qir(Rat(1, 6)));        // <tau_0^3>/3!
    CHECK(coeff(-2, {{0, 3}, {1, 1}}) == Qir(Rat(1, 6))); // <tau_0^3 tau_1>/3!
    CHECK(coeff(0, {{1, 1}}) == Qir(Rat(1, 24)));
    CHECK(coeff(0, {{1, 2}}) == Qir(Rat(1, 48)));        // <tau_1^2>/2!
    CHECK(coeff(2, {{4, 1}}) == Qir(Rat(1, 1152)));
    CHECK(coeff(2, {{2, 1}, {3, 1}}) == Qir(Rat(29, 5760)));
    CHECK(coeff(-2, {{0, 2}}) == Qir(0));                // unstable (0,2) absent
    CHECK(coeff(0, {{2, 1}}) == Qir(0));                 // dimension mismatch absent

    // every term sits in the stable range with the right dimension
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        int eps_exp = m.exponent(tr.eps);
        int n = 0;
        long dim = 0;
        for (const auto& p : m.parts) {
            if (p.v == tr.eps) continue;
            n += p.e;
            for (size_t a = 0; a < tr.T.size(); ++a)
                if (tr.T[a] == p.v) dim += static_cast<long>(p.e) * static_cast<long>(a);
        }
        CHECK(eps_exp % 2 == 0);
        int g = eps_exp / 2 + 1;
        CHECK(2 * g - 2 + n > 0);
        CHECK(dim == 3l * g - 3 + n);
    }
}

TEST_CASE("delta scaling multiplies each (g,n) term by delta_half^(2g-2+n)") {
    TauRing tr = make_tau_ring(4, 2, 4);
    const Qir dh = Qir(0, 0, 0, 1); // i sqrt2, the second normalized frame scale
    TruncatedSeries plain = kdv_tau_log(tr.ring, tr.T, tr.eps, Qir(1), 2, 4);
    TruncatedSeries scaled = kdv_tau_log(tr.ring, tr.T, tr.eps, dh, 2, 4);

    CHECK(plain.term_count() == scaled.term_count());
    for (const auto& [m, c] : plain.terms()) {
        int w = 0; // 2g-2+n
        for (const auto& p : m.parts) w += p.e;
        Qir factor(1);
        for (int k = 0; k < w; ++k) factor *= dh;
        CHECK(scaled.coeff(m) == factor * c);
    }
}

// The finite dilaton shift e^{c d/dT_1} tau(T) with c = 1 - Delta^{-1/2}
// agrees with tau(Delta^{1/2} T, Delta eps^2) on every monomial containing a
// T variable; the T-free sector picks up the well-known multiplicative
// constant (Delta^{1/48} for the pure KdV normalization), which the overall
// normalization of the descendent potential absorbs. Expanding order by
// order in a nilpotent shift variable c (so Delta^{1/2} = (1-c)^{-1}) makes
// the comparison exact on the truncated table.
TEST_CASE("finite dilaton shift matches argument rescaling away from constants") {
    const int genus_max = 2, n_max = 5, index_max = 3, c_max = 3;
    auto ring = Ring::make();
    int tf = ring->add_family("T");
    int ef = ring->add_family("eps");
    int cf = ring->add_family("shift");
    VarId eps = ring->add_var("eps", ef, {-2, 2 * genus_max - 2});
    std::vector<VarId> T;
    for (int a = 0; a <= index_max; ++a)
        T.push_back(ring->add_var("T" + std::to_string(a), tf, {0, n_max}));
    VarId c = ring->add_var("c", cf, {0, c_max});
    RingPtr rp = ring;

    TruncatedSeries f = kdv_tau_log(rp, T, eps, Qir(1), genus_max, n_max);

    TruncatedSeries lhs = f.taylor_shift(T[1], TruncatedSeries::var(rp, c));

    // s = Delta^{1/2} = (1-c)^{-1}, truncated; powers s^w for w = 2g-2+n >= 1
    TruncatedSeries s = TruncatedSeries::one(rp);
    for (int k = 1; k <= c_max; ++k) s.add_term(Monomial::single(c, k), Qir(1));
    const int w_max = 2 * genus_max - 2 + n_max;
    std::vector<TruncatedSeries> s_pow{TruncatedSeries::one(rp)};
    for (int w = 1; w <= w_max; ++w) s_pow.push_back(s_pow.back() * s);

    TruncatedSeries rhs(rp);
    for (const auto& [m, cf_] : f.terms()) {
        int w = 0;
        for (const auto& p : m.parts) w += p.e; // eps exponent + T degree
        rhs += s_pow[static_cast<size_t>(w)].times_monomial(m, cf_);
    }

    // surviving terms of the difference are nonzero by construction, so every
    // one inside the exactly-computed region (positive T-degree, table deep
    // enough for the c-order) is a violation
    TruncatedSeries diff = lhs - rhs;
    int violations = 0;
    for (const auto& [m, v] : diff.terms()) {
        (void)v;
        int t = t_degree(*rp, m, tf);
        int k = m.exponent(c);
        if (t >= 1 && t + k <= n_max) ++violations;
    }
    CHECK(violations == 0);

    // and the identity really does fail in the T-free sector: the c eps^0
    // coefficient of the difference is <tau_1>_1 = 1/24, the Delta^{1/48} seed
    CHECK(diff.coeff(Monomial::single(c, 1)) == Qir(Rat(1, 24)));

    // sanity: the shift moved genuine mass around T-positive monomials
    Monomial probe = Monomial::single(c, 1);
    probe.bump(T[1], 1);
    CHECK(!lhs.coeff(probe).is_zero());
}

// First KdV flow for u = eps^2 d^2/dT_0^2 log tau:
//   du/dT_1 = u du/dT_0 + (eps^2/12) d^3u/dT_0^3.
// On the truncated table both sides are complete for T-degree <= n_max - 5.
TEST_CASE("KdV flow of the string solution at low T-degree") {
    const int genus_max = 2, n_max = 8, index_max = 8;
    TauRing tr = make_tau_ring(index_max, genus_max, n_max, /*eps_extra=*/4);
    TruncatedSeries f = kdv_tau_log(tr.ring, tr.T, tr.eps, Qir(1), genus_max, n_max);

    const Monomial eps2 = Monomial::single(tr.eps, 2);
    TruncatedSeries u = f.derivative(tr.T[0]).derivative(tr.T[0]).times_monomial(eps2);
    TruncatedSeries u0 = u.derivative(tr.T[0]);
    TruncatedSeries u000 = u0.derivative(tr.T[0]).derivative(tr.T[0]);

    TruncatedSeries residual = u.derivative(tr.T[1]) - u * u0 -
                               u000.times_monomial(eps2, Qir(Rat(1, 12)));

    // Both sides are complete only where the table is: T-degree <= n_max - 5
    // and genus <= genus_max (the eps^6 sector would need genus-3 input).
    // Any residual term landing in that region is a genuine violation.
    int violations = 0;
    for (const auto& [m, v] : residual.terms()) {
        (void)v;
        int t = 0;
        for (const auto& p : m.parts)
            if (p.v != tr.eps) t += p.e;
        if (t <= n_max - 5 && m.exponent(tr.eps) <= 2 * genus_max) ++violations;
    }
    CHECK(violations == 0);

    // the flow is nontrivial where we compared: u du/dT_0 has low-degree mass
    Monomial probe = Monomial::single(tr.T[0], 1);
    CHECK((u * u0).coeff(probe) == Qir(1));
}
