#include "catalan/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace catalan {

TruncatedSeries TruncatedSeries::constant(RingPtr ring, const Qir& c) {
    TruncatedSeries s(std::move(ring));
    s.add_term(Monomial::one(), c);
    return s;
}

TruncatedSeries TruncatedSeries::var(RingPtr ring, VarId v, int exp) {
    TruncatedSeries s(std::move(ring));
    s.add_term(Monomial::single(v, exp), Qir(1));
    return s;
}

TruncatedSeries TruncatedSeries::term(RingPtr ring, Monomial m, const Qir& c) {
    TruncatedSeries s(std::move(ring));
    s.add_term(std::move(m), c);
    return s;
}

TruncatedSeries TruncatedSeries::from_scalar(RingPtr ring, const ExactScalar& s, VarId psi_var) {
    TruncatedSeries out(std::move(ring));
    for (int k = 0; k <= s.psi_degree(); ++k)
        out.add_term(Monomial::single(psi_var, k), s.coeff(k));
    return out;
}

void TruncatedSeries::check_same_ring(const TruncatedSeries& o) const {
    if (ring_.get() != o.ring_.get())
        throw std::logic_error("series from different rings combined");
}

void TruncatedSeries::add_term(Monomial m, Qir c) {
    if (c.is_zero()) return;
    if (!ring_->monomial_allowed(m)) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Qir TruncatedSeries::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Qir() : it->second;
}

TruncatedSeries TruncatedSeries::coeff_of(VarId v, int k) const {
    TruncatedSeries out(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != k) continue;
        Monomial m2 = m;
        m2.bump(v, -k);
        out.add_term(std::move(m2), c);
    }
    return out;
}

int TruncatedSeries::min_exponent(VarId v) const {
    int e = 0;
    for (const auto& [m, c] : terms_) e = std::min(e, m.exponent(v));
    return e;
}

int TruncatedSeries::max_exponent(VarId v) const {
    int e = 0;
    for (const auto& [m, c] : terms_) e = std::max(e, m.exponent(v));
    return e;
}

TruncatedSeries TruncatedSeries::part_supported_on(const std::vector<VarId>& vars) const {
    std::vector<bool> ok(ring_->var_count(), false);
    for (VarId v : vars) ok[v] = true;
    TruncatedSeries out(ring_);
    for (const auto& [m, c] : terms_) {
        bool pure = true;
        for (const auto& p : m.parts)
            if (!ok[p.v]) {
                pure = false;
                break;
            }
        if (pure) out.add_term(m, c);
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_same_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Qir& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries out(a.ring_);
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
    return out;
}

namespace {

// Multiplication support: terms bucketed by (capped-family degree sum, prune
// var exponent) so incompatible blocks are skipped wholesale.
struct MulIndex {
    struct Entry {
        const Monomial* m;
        const Qir* c;
        int deg;
    };
    std::vector<Entry> entries; // sorted by deg
    std::vector<int> capped_families;
    int cap_sum = kNoCap;

    MulIndex(const Ring& ring, const TruncatedSeries::TermMap& terms) {
        for (size_t f = 0; f < ring.family_count(); ++f)
            if (ring.caps().family_cap[f] != kNoCap) capped_families.push_back(static_cast<int>(f));
        if (!capped_families.empty()) {
            long s = 0;
            for (int f : capped_families) s += ring.caps().family_cap[f];
            cap_sum = static_cast<int>(std::min<long>(s, kNoCap));
        }
        entries.reserve(terms.size());
        for (const auto& [m, c] : terms) {
            int d = 0;
            for (int f : capped_families) d += ring.family_degree(m, f);
            entries.push_back({&m, &c, d});
        }
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.deg < b.deg; });
    }
};

} // namespace

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_ring(b);
    TruncatedSeries out(a.ring_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const Ring& ring = *a.ring_;
    MulIndex ia(ring, a.terms_);
    MulIndex ib(ring, b.terms_);
    const bool capped = ia.cap_sum != kNoCap;
    for (const auto& ea : ia.entries) {
        for (const auto& eb : ib.entries) {
            if (capped && ea.deg + eb.deg > ia.cap_sum) break; // sorted: rest worse
            Monomial prod = ea.m->times(*eb.m);
            if (!ring.monomial_allowed(prod)) continue;
            Qir pc = *ea.c * *eb.c;
            if (pc.is_zero()) continue;
            auto [it, fresh] = out.terms_.try_emplace(std::move(prod), std::move(pc));
            if (!fresh) {
                it->second += pc;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::times_monomial(const Monomial& m, const Qir& c) const {
    TruncatedSeries out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [mm, cc] : terms_) out.add_term(mm.times(m), cc * c);
    return out;
}

TruncatedSeries TruncatedSeries::derivative(VarId v) const {
    TruncatedSeries out(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial m2 = m;
        m2.bump(v, -1);
        out.add_term(std::move(m2), c * Qir(Rat(e)));
    }
    return out;
}

TruncatedSeries TruncatedSeries::substitute(VarId v, const TruncatedSeries& g) const {
    check_same_ring(g);
    TruncatedSeries out(ring_);
    // group terms by exponent of v, ascending, and walk powers of g upward
    std::map<int, std::vector<std::pair<Monomial, const Qir*>>> by_exp;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e < 0) throw std::domain_error("substitution into negative power of " + ring_->name(v));
        Monomial m2 = m;
        m2.bump(v, -e);
        by_exp[e].emplace_back(std::move(m2), &c);
    }
    TruncatedSeries power = one(ring_);
    int cur = 0;
    for (auto& [e, residues] : by_exp) {
        while (cur < e) {
            power = power * g;
            ++cur;
        }
        for (auto& [m2, c] : residues) {
            // residual monomial first, then the cached power (already truncated)
            out += power.times_monomial(m2, *c);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::taylor_shift(VarId v, const TruncatedSeries& delta) const {
    check_same_ring(delta);
    if (delta.max_exponent(v) != 0 || delta.min_exponent(v) != 0)
        throw std::domain_error("taylor shift increment depends on the shifted variable");
    int top = max_exponent(v);
    if (min_exponent(v) < 0) throw std::domain_error("taylor shift of negative power");
    // cache delta^j
    std::vector<TruncatedSeries> dp;
    dp.push_back(one(ring_));
    for (int j = 1; j <= top; ++j) dp.push_back(dp.back() * delta);
    TruncatedSeries out(ring_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        Monomial base = m;
        base.bump(v, -e);
        for (int j = 0; j <= e; ++j) {
            Monomial part = base;
            part.bump(v, e - j);
            out += dp[static_cast<size_t>(j)].times_monomial(part, c * Qir(binomial(e, j)));
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::map_vars(const RingPtr& target,
                                          const std::vector<const TruncatedSeries*>& images) const {
    TruncatedSeries out(target);
    // cache of image powers per variable
    std::vector<std::vector<TruncatedSeries>> powers(ring_->var_count());
    auto power_of = [&](VarId v, int e) -> const TruncatedSeries& {
        if (v >= images.size() || images[v] == nullptr)
            throw std::logic_error("no image for variable " + ring_->name(v));
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(one(target));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *images[v]);
        return cache[static_cast<size_t>(e)];
    };
    for (const auto& [m, c] : terms_) {
        TruncatedSeries acc = constant(target, c);
        for (const auto& p : m.parts) {
            if (p.e < 0) throw std::domain_error("variable image for negative power of " + ring_->name(p.v));
            acc = acc * power_of(p.v, p.e);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (!constant_term().is_zero())
        throw std::domain_error("exp of series with nonzero constant term");
    TruncatedSeries result = one(ring_);
    TruncatedSeries term = one(ring_);
    const int guard = ring_->iteration_guard();
    for (int k = 1;; ++k) {
        if (k > guard) throw std::domain_error("non-nilpotent exponent in series exp");
        term = term * *this;
        term *= Qir(Rat(1, k));
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

TruncatedSeries TruncatedSeries::log() const {
    if (constant_term() != Qir(1))
        throw std::domain_error("log of series with constant term != 1");
    TruncatedSeries u = *this;
    u.add_term(Monomial::one(), Qir(-1));
    TruncatedSeries result(ring_);
    TruncatedSeries p = one(ring_);
    const int guard = ring_->iteration_guard();
    for (int k = 1;; ++k) {
        if (k > guard) throw std::domain_error("non-nilpotent argument in series log");
        p = p * u;
        if (p.is_zero()) break;
        Qir coef = Qir(Rat((k % 2 == 1) ? 1 : -1, k));
        result += p * coef;
    }
    return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
    Qir c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("inverse of series with zero constant term");
    Qir c0inv = c0.inverse();
    TruncatedSeries u = *this * c0inv;
    u.add_term(Monomial::one(), Qir(-1)); // u = f/c0 - 1
    TruncatedSeries result = one(ring_);
    TruncatedSeries p = one(ring_);
    const int guard = ring_->iteration_guard();
    for (int k = 1;; ++k) {
        if (k > guard) throw std::domain_error("non-nilpotent tail in series inverse");
        p = p * u;
        p *= Qir(-1);
        if (p.is_zero()) break;
        result += p;
    }
    result *= c0inv;
    return result;
}

TruncatedSeries TruncatedSeries::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    TruncatedSeries result = one(ring_);
    TruncatedSeries base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_ring(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
        auto it = b.terms_.find(m);
        if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

std::vector<std::pair<Monomial, Qir>> TruncatedSeries::sorted_terms() const {
    std::vector<std::pair<Monomial, Qir>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

std::string monomial_str(const Ring& ring, const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& p : m.parts) {
        if (!out.empty()) out += "*";
        out += ring.name(p.v);
        if (p.e != 1) out += "^" + std::to_string(p.e);
    }
    return out;
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted_terms()) {
        std::string cs = c.str();
        bool composite = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
        if (!first) os << (!composite && cs[0] == '-' ? " - " : " + ");
        else if (!composite && cs[0] == '-') os << "-";
        std::string abs = (!composite && cs[0] == '-') ? cs.substr(1) : cs;
        if (composite) abs = "(" + abs + ")";
        if (m.is_one())
            os << abs;
        else if (abs == "1")
            os << monomial_str(*ring_, m);
        else
            os << abs << "*" << monomial_str(*ring_, m);
        first = false;
    }
    return os.str();
}

} // namespace catalan
