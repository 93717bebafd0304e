#pragma once

#include "catalan/monomial.hpp"

#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace catalan {

constexpr int kNoCap = std::numeric_limits<int>::max() / 4;

// Inclusive exponent window for one variable. Negative lower bounds admit
// Laurent variables (the dispersion parameter, the spectral parameter, the
// exponential marker variables).
struct Window {
    int lo = 0;
    int hi = 0;
    int span() const { return hi - lo; }
    bool contains(int e) const { return lo <= e && e <= hi; }
};

// A joint constraint  lo <= sum_v weight[v] * exp_v <= hi.  Used for graded
// truncations that a plain degree cap cannot express (dimension gradings,
// slot-cost gradings).
struct LinearCap {
    std::vector<int> weight; // indexed by VarId; shorter vectors mean 0
    int lo = -kNoCap;
    int hi = kNoCap;
    std::string label;
};

// Truncation policy of a ring. Per-variable windows, per-family joint degree
// caps, and arbitrary integer-weighted linear caps. genus_cap / slot_cap are
// advisory knobs read by the pipelines that build series, not enforced here.
struct CapProfile {
    std::vector<Window> window;     // per var
    std::vector<int> family_cap;    // per family, kNoCap = unbounded
    std::vector<LinearCap> linear;
    int genus_cap = -1;
    int slot_cap = -1;
};

// A polynomial/Laurent ring presentation: named variables grouped into
// families, plus the truncation profile. Frozen once series start using it;
// all series operations assume the profile is immutable.
class Ring {
public:
    static std::shared_ptr<Ring> make() { return std::make_shared<Ring>(); }

    int add_family(const std::string& name, int degree_cap = kNoCap) {
        if (family_name_.size() >= 16) throw std::length_error("too many families");
        family_name_.push_back(name);
        caps_.family_cap.push_back(degree_cap < 0 ? kNoCap : degree_cap);
        return static_cast<int>(family_name_.size()) - 1;
    }

    VarId add_var(const std::string& name, int family, Window w) {
        if (family < 0 || family >= static_cast<int>(family_name_.size()))
            throw std::invalid_argument("unknown family for variable " + name);
        if (by_name_.count(name)) throw std::invalid_argument("duplicate variable " + name);
        VarId id = static_cast<VarId>(var_name_.size());
        var_name_.push_back(name);
        var_family_.push_back(family);
        caps_.window.push_back(w);
        by_name_.emplace(name, id);
        return id;
    }

    void add_linear_cap(LinearCap c) { caps_.linear.push_back(std::move(c)); }
    void set_genus_cap(int g) { caps_.genus_cap = g; }
    void set_slot_cap(int s) { caps_.slot_cap = s; }

    size_t var_count() const { return var_name_.size(); }
    size_t family_count() const { return family_name_.size(); }
    const std::string& name(VarId v) const { return var_name_[v]; }
    int family(VarId v) const { return var_family_[v]; }
    const Window& window(VarId v) const { return caps_.window[v]; }
    const CapProfile& caps() const { return caps_; }
    int genus_cap() const { return caps_.genus_cap; }
    int slot_cap() const { return caps_.slot_cap; }

    VarId var(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) throw std::invalid_argument("unknown variable " + name);
        return it->second;
    }
    bool has_var(const std::string& name) const { return by_name_.count(name) != 0; }

    bool monomial_allowed(const Monomial& m) const {
        int fam_deg[16];
        size_t nf = family_name_.size();
        for (size_t f = 0; f < nf; ++f) fam_deg[f] = 0;
        for (const auto& p : m.parts) {
            const Window& w = caps_.window[p.v];
            if (p.e < w.lo || p.e > w.hi) return false;
            fam_deg[var_family_[p.v]] += p.e;
        }
        for (size_t f = 0; f < nf; ++f)
            if (fam_deg[f] > caps_.family_cap[f]) return false;
        for (const auto& lc : caps_.linear) {
            long s = 0;
            for (const auto& p : m.parts)
                if (p.v < lc.weight.size()) s += static_cast<long>(lc.weight[p.v]) * p.e;
            if (s < lc.lo || s > lc.hi) return false;
        }
        return true;
    }

    // Degree of a monomial inside one family (exponent sum over its members).
    int family_degree(const Monomial& m, int family) const {
        int d = 0;
        for (const auto& p : m.parts)
            if (var_family_[p.v] == family) d += p.e;
        return d;
    }

    // Upper bound on the nilpotency index of any cap-respecting series with
    // vanishing constant term whose powers eventually die; used as the
    // iteration guard in exp/log/inverse.
    int iteration_guard() const {
        long g = 16;
        for (const auto& w : caps_.window) g += std::min(w.span(), 128);
        for (int c : caps_.family_cap)
            if (c != kNoCap) g += std::min(c, 128);
        return static_cast<int>(std::min(g, 4096l));
    }

    Ring() = default;

private:
    std::vector<std::string> var_name_;
    std::vector<int> var_family_;
    std::vector<std::string> family_name_;
    std::unordered_map<std::string, VarId> by_name_;
    CapProfile caps_;
};

using RingPtr = std::shared_ptr<const Ring>;

} // namespace catalan
