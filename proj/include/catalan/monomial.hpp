#pragma once

#include <cstdint>
#include <vector>

namespace catalan {

using VarId = std::uint16_t;

struct VarExp {
    VarId v;
    std::int16_t e;
    friend bool operator==(const VarExp& a, const VarExp& b) { return a.v == b.v && a.e == b.e; }
};

// Sparse exponent vector, sorted by variable id, zero exponents never stored.
struct Monomial {
    std::vector<VarExp> parts;

    static Monomial one() { return {}; }

    static Monomial single(VarId v, int e) {
        Monomial m;
        if (e != 0) m.parts.push_back({v, static_cast<std::int16_t>(e)});
        return m;
    }

    bool is_one() const { return parts.empty(); }

    int exponent(VarId v) const {
        for (const auto& p : parts)
            if (p.v == v) return p.e;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial out;
        out.parts.reserve(parts.size() + o.parts.size());
        size_t i = 0, j = 0;
        while (i < parts.size() && j < o.parts.size()) {
            if (parts[i].v < o.parts[j].v) {
                out.parts.push_back(parts[i++]);
            } else if (parts[i].v > o.parts[j].v) {
                out.parts.push_back(o.parts[j++]);
            } else {
                int e = parts[i].e + o.parts[j].e;
                if (e != 0) out.parts.push_back({parts[i].v, static_cast<std::int16_t>(e)});
                ++i;
                ++j;
            }
        }
        while (i < parts.size()) out.parts.push_back(parts[i++]);
        while (j < o.parts.size()) out.parts.push_back(o.parts[j++]);
        return out;
    }

    // Multiply by v^k in place.
    void bump(VarId v, int k) {
        if (k == 0) return;
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].v == v) {
                int e = parts[i].e + k;
                if (e == 0)
                    parts.erase(parts.begin() + static_cast<long>(i));
                else
                    parts[i].e = static_cast<std::int16_t>(e);
                return;
            }
            if (parts[i].v > v) {
                parts.insert(parts.begin() + static_cast<long>(i), {v, static_cast<std::int16_t>(k)});
                return;
            }
        }
        parts.push_back({v, static_cast<std::int16_t>(k)});
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.parts == b.parts; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Graded-lex order for deterministic rendering: total raw degree first,
    // then the sparse exponent vectors lexicographically.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        long da = 0, db = 0;
        for (const auto& p : a.parts) da += p.e;
        for (const auto& p : b.parts) db += p.e;
        if (da != db) return da < db;
        size_t n = std::min(a.parts.size(), b.parts.size());
        for (size_t k = 0; k < n; ++k) {
            if (a.parts[k].v != b.parts[k].v) return a.parts[k].v < b.parts[k].v;
            if (a.parts[k].e != b.parts[k].e) return a.parts[k].e > b.parts[k].e;
        }
        return a.parts.size() < b.parts.size();
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        // FNV-1a over the packed (var, exp) stream
        std::uint64_t h = 1469598103934665603ull;
        for (const auto& p : m.parts) {
            std::uint64_t w = (static_cast<std::uint64_t>(p.v) << 16) ^
                              static_cast<std::uint16_t>(p.e);
            h = (h ^ w) * 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace catalan
