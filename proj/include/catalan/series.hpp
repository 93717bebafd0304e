#pragma once

#include "catalan/caps.hpp"
#include "catalan/exact_scalar.hpp"
#include "catalan/qir.hpp"

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace catalan {

// Multivariate Laurent series over Q(i,r), truncated on insertion against the
// ring's cap profile. A dropped monomial is dropped silently: truncation is
// the semantics, not an error.
//
// Soundness contract for chained products (powers, exp/log/inverse loops,
// multi-variable substitution): every pairwise product is truncated
// immediately, so an intermediate term that leaves the window is gone even if
// a later factor would have brought it back. Callers must therefore size
// windows with enough prefix headroom for the pipeline at hand; the module
// that builds each ring derives those headrooms from its own degree budgets.
class TruncatedSeries {
public:
    using TermMap = std::unordered_map<Monomial, Qir, MonomialHash>;

    TruncatedSeries() = default; // ring-less null series; assign before use
    explicit TruncatedSeries(RingPtr ring) : ring_(std::move(ring)) {}

    static TruncatedSeries constant(RingPtr ring, const Qir& c);
    static TruncatedSeries one(RingPtr ring) { return constant(std::move(ring), Qir(1)); }
    static TruncatedSeries var(RingPtr ring, VarId v, int exp = 1);
    static TruncatedSeries term(RingPtr ring, Monomial m, const Qir& c);
    // psi-polynomial scalar as a series in the designated psi variable
    static TruncatedSeries from_scalar(RingPtr ring, const ExactScalar& s, VarId psi_var);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Qir coeff(const Monomial& m) const;
    Qir constant_term() const { return coeff(Monomial::one()); }
    // all terms with exp(v) == k, with v^k divided out
    TruncatedSeries coeff_of(VarId v, int k) const;
    int min_exponent(VarId v) const; // 0 for the empty series
    int max_exponent(VarId v) const;

    // terms whose support lies entirely in `vars` (constants included)
    TruncatedSeries part_supported_on(const std::vector<VarId>& vars) const;

    void add_term(Monomial m, Qir c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Qir& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Qir& c) { return a *= c; }
    friend TruncatedSeries operator*(const Qir& c, TruncatedSeries a) { return a *= c; }

    TruncatedSeries times_monomial(const Monomial& m, const Qir& c = Qir(1)) const;

    TruncatedSeries derivative(VarId v) const;

    // f with v := g, same ring; exponents of v must be nonnegative.
    TruncatedSeries substitute(VarId v, const TruncatedSeries& g) const;

    // f with v := v + delta (delta free of v); exponents of v must be >= 0.
    TruncatedSeries taylor_shift(VarId v, const TruncatedSeries& delta) const;

    // Ring homomorphism: every variable occurring in f needs an image in the
    // target ring (indexed by source VarId; null forbidden when the var occurs).
    TruncatedSeries map_vars(const RingPtr& target,
                             const std::vector<const TruncatedSeries*>& images) const;

    TruncatedSeries exp() const;     // requires zero constant term
    TruncatedSeries log() const;     // requires constant term 1
    TruncatedSeries inverse() const; // requires invertible constant term
    TruncatedSeries pow(long n) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    // Deterministic rendering, graded-lex monomial order.
    std::string str() const;
    std::vector<std::pair<Monomial, Qir>> sorted_terms() const;

private:
    RingPtr ring_;
    TermMap terms_;

    void check_same_ring(const TruncatedSeries& o) const;
};

std::string monomial_str(const Ring& ring, const Monomial& m);

} // namespace catalan
