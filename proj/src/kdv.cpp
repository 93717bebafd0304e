#include "catalan/kdv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace catalan {

namespace {

// Key of the memo table: genus plus the index partition sorted ascending.
using CorrelatorKey = std::pair<int, std::vector<int>>;
using MemoTable = std::map<CorrelatorKey, Rat>;

Rat odd_double_factorial(int k) { // (2k+1)!!
    Rat r(1);
    for (int i = 1; i <= k; ++i) r *= Rat(2 * i + 1);
    return r;
}

// (2d+2m-1)!!/(2d-1)!! = (2d+1)(2d+3)...(2d+2m-1)
Rat ascending_odd_product(int d, int m) {
    Rat r(1);
    for (int s = 0; s < m; ++s) r *= Rat(2 * d + 2 * s + 1);
    return r;
}

Rat evaluate(const CorrelatorKey& key, MemoTable& memo);

// Dimension/stability gate plus memo lookup; `partition` need not be sorted.
Rat correlator(int g, std::vector<int> partition, MemoTable& memo) {
    if (g < 0) return Rat(0);
    const int n = static_cast<int>(partition.size());
    if (n == 0) return Rat(0);
    long dim = 0;
    for (int a : partition) {
        if (a < 0) return Rat(0);
        dim += a;
    }
    if (dim != 3l * g - 3 + n) return Rat(0);
    std::sort(partition.begin(), partition.end());
    CorrelatorKey key{g, std::move(partition)};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rat value = evaluate(key, memo);
    memo.emplace(std::move(key), value);
    return value;
}

// Virasoro recursion on the largest index m = max a_i. Solving the L_{m-1}
// constraint of the string solution for the tau_m insertion gives
//
//   (2m+1)!! <tau_m sigma>_g
//     = sum_{j in sigma} (2d_j+1)(2d_j+3)...(2d_j+2m-1) <tau_{d_j+m-1} sigma\j>_g
//     + 1/2 sum_{a+b=m-2} (2a+1)!!(2b+1)!! [ <tau_a tau_b sigma>_{g-1}
//         + sum_{I+J=sigma, g1+g2=g} <tau_a sigma_I>_{g1} <tau_b sigma_J>_{g2} ]
//     + delta_{m,1} [sigma empty, g=1] / 8,
//
// and the constant term of the L_{-1} constraint makes the all-zero case
// <tau_0^3>_0 = 1 the only nonzero correlator with m = 0. Both seeds are
// produced by the recursion itself, so the table needs no external input.
Rat evaluate(const CorrelatorKey& key, MemoTable& memo) {
    const int g = key.first;
    const std::vector<int>& d = key.second; // ascending
    const int n = static_cast<int>(d.size());
    const int m = d.back();
    if (m == 0) return (g == 0 && n == 3) ? Rat(1) : Rat(0);

    const std::vector<int> sigma(d.begin(), d.end() - 1);
    const int ns = n - 1;

    Rat rhs(0);
    for (int j = 0; j < ns; ++j) {
        std::vector<int> rest(sigma);
        rest[j] = sigma[j] + m - 1;
        rhs += ascending_odd_product(sigma[j], m) * correlator(g, std::move(rest), memo);
    }

    for (int a = 0; a <= m - 2; ++a) {
        const int b = m - 2 - a;
        const Rat w = odd_double_factorial(a) * odd_double_factorial(b) / 2;

        std::vector<int> joined(sigma);
        joined.push_back(a);
        joined.push_back(b);
        rhs += w * correlator(g - 1, std::move(joined), memo);

        // Separating splits: ordered pairs (I, g1), (J, g2). Dimension
        // filtering inside correlator() kills almost all of them.
        for (unsigned mask = 0; mask < (1u << ns); ++mask) {
            std::vector<int> left{a}, right{b};
            for (int i = 0; i < ns; ++i)
                ((mask >> i) & 1u ? left : right).push_back(sigma[i]);
            for (int g1 = 0; g1 <= g; ++g1) {
                Rat l = correlator(g1, left, memo);
                if (l == 0) continue;
                rhs += w * l * correlator(g - g1, right, memo);
            }
        }
    }

    if (m == 1 && ns == 0 && g == 1) rhs += Rat(1, 8);

    return rhs / odd_double_factorial(m);
}

MemoTable& shared_memo() {
    static MemoTable memo; // single-threaded pipelines; guard before sharing
    return memo;
}

} // namespace

Rat intersection_number(int g, std::vector<int> partition) {
    return correlator(g, std::move(partition), shared_memo());
}

TruncatedSeries kdv_tau_log(const RingPtr& ring, const std::vector<VarId>& T,
                            VarId eps, const Qir& delta_half, int genus_max,
                            int n_max) {
    if (T.empty()) throw std::invalid_argument("tau-log needs at least one descendent slot");
    const Window& ew = ring->window(eps);
    if (!ew.contains(-2) || !ew.contains(2 * genus_max - 2))
        throw std::invalid_argument("epsilon window too small for requested genus range");

    const int index_max = static_cast<int>(T.size()) - 1;
    TruncatedSeries out(ring);

    // Partitions a_1 <= ... <= a_n of 3g-3+n within the index bound, walked
    // by nondecreasing extension; `mult` tracks exponents per index.
    std::vector<int> mult(static_cast<size_t>(index_max) + 1, 0);
    std::vector<int> part;

    // delta_half^{2g-2+n}; the exponent 2(g-1)+n is >= 1 in the stable range.
    auto scale_power = [&](int g, int n) {
        Qir p(1);
        for (int k = 0; k < 2 * g - 2 + n; ++k) p *= delta_half;
        return p;
    };

    std::function<void(int, int, int, int)> extend =
        [&](int g, int remaining_slots, int remaining_dim, int min_index) {
            if (remaining_slots == 0) {
                if (remaining_dim != 0) return;
                Rat value = intersection_number(g, part);
                if (value == 0) return;
                const int n = static_cast<int>(part.size());
                Rat coeff(value);
                Monomial mono = Monomial::single(eps, 2 * g - 2);
                for (int k = 0; k <= index_max; ++k) {
                    if (mult[k] == 0) continue;
                    for (int c = 2; c <= mult[k]; ++c) coeff /= c;
                    mono.bump(T[static_cast<size_t>(k)], mult[k]);
                }
                if (!ring->monomial_allowed(mono))
                    throw std::invalid_argument("ring caps too small for tau-log term " +
                                                monomial_str(*ring, mono));
                out.add_term(std::move(mono), Qir(coeff) * scale_power(g, n));
                return;
            }
            for (int a = min_index; a <= index_max && a <= remaining_dim; ++a) {
                // remaining slots all carry index >= a
                if (static_cast<long>(a) * (remaining_slots - 1) > remaining_dim - a) break;
                part.push_back(a);
                ++mult[static_cast<size_t>(a)];
                extend(g, remaining_slots - 1, remaining_dim - a, a);
                --mult[static_cast<size_t>(a)];
                part.pop_back();
            }
        };

    for (int g = 0; g <= genus_max; ++g) {
        for (int n = 1; n <= n_max; ++n) {
            if (2 * g - 2 + n <= 0) continue; // unstable (g,n)
            const int dim = 3 * g - 3 + n;
            if (dim > index_max * n) continue; // no partition fits the index bound
            extend(g, n, dim, 0);
        }
    }
    return out;
}

} // namespace catalan
