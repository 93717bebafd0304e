#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace catalan {

// Arbitrary-precision rational, GMP-backed. Every number in this library is
// either a Rat or a small fixed algebraic extension of Rat; there is no
// floating point anywhere.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Safe two-argument construction: boost's mpq constructor funnels a negative
// denominator through an unsigned conversion, so normalize the sign here and
// always build ratios through this helper when the denominator is computed.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Rat factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Rat r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

// (2n-1)!! for odd arguments, (2n)!! for even; (-1)!! = 1 by convention.
inline Rat double_factorial(int n) {
    if (n < -1) throw std::invalid_argument("double factorial undefined");
    Rat r = 1;
    for (int k = n; k >= 2; k -= 2) r *= k;
    return r;
}

inline Rat binomial(int n, int k) {
    if (k < 0) return 0;
    Rat r = 1;
    for (int j = 0; j < k; ++j) r *= Rat(n - j, j + 1);
    return r;
}

// n-th harmonic number 1 + 1/2 + ... + 1/n, with h(0) = 0.
inline Rat harmonic(int n) {
    Rat r = 0;
    for (int k = 1; k <= n; ++k) r += Rat(1, k);
    return r;
}

// Pochhammer symbol (1/2)_n, defined for negative n as well:
// (1/2)_n = (2n)!/(4^n n!) for n >= 0, (1/2)_{-n} = (-2)^n/(2n-1)!!.
inline Rat pochhammer_half(int n) {
    if (n >= 0) {
        Rat r = 1;
        for (int k = 0; k < n; ++k) r *= Rat(2 * k + 1, 2);
        return r;
    }
    // (1/2)_{-n} = 1/((1/2 - 1)(1/2 - 2)...(1/2 - n)) = (-2)^n/(2n-1)!!
    int m = -n;
    Rat r = 1;
    for (int k = 1; k <= m; ++k) r *= Rat(-2, 2 * k - 1);
    return r;
}

inline Rat catalan_number(int m) {
    // m-th Catalan number 1, 1, 2, 5, 14, ...
    return binomial(2 * m, m) / Rat(m + 1);
}

// Bernoulli numbers with B_1 = -1/2 (generating function t/(e^t - 1)).
inline const std::vector<Rat>& bernoulli_table(int n_max) {
    static std::vector<Rat> table;
    while ((int)table.size() <= n_max) {
        int n = (int)table.size();
        if (n == 0) {
            table.emplace_back(1);
            continue;
        }
        // B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k
        Rat s = 0;
        for (int k = 0; k < n; ++k) s += binomial(n + 1, k) * table[k];
        table.push_back(-s / Rat(n + 1));
    }
    return table;
}

inline Rat bernoulli(int n) { return bernoulli_table(n)[n]; }

inline std::string rat_to_string(const Rat& r) { return r.str(); }

} // namespace catalan
