#pragma once

#include <utility>

namespace catalan {

template <typename T>
struct Vec2 {
    T x, y;
};

// Row-major 2x2 matrix over any ring type with +,-,* and an inverse() member
// on invertible elements. All frame, calibration and monodromy data is rank
// two, so this is the only matrix shape in the project.
template <typename T>
struct Mat2 {
    T a, b, c, d; // [[a, b], [c, d]]

    friend Mat2 operator+(const Mat2& m, const Mat2& n) {
        return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
    }
    friend Mat2 operator-(const Mat2& m, const Mat2& n) {
        return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
    }
    friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend Mat2 operator*(const T& s, const Mat2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }
    friend Vec2<T> operator*(const Mat2& m, const Vec2<T>& v) {
        return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    friend bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }

    Mat2 transpose() const { return {a, c, b, d}; }
    T trace() const { return a + d; }
    T det() const { return a * d - b * c; }

    Mat2 inverse() const {
        T idet = det().inverse();
        return {d * idet, -b * idet, -c * idet, a * idet};
    }

    template <typename F>
    auto map(F&& f) const -> Mat2<decltype(f(a))> {
        return {f(a), f(b), f(c), f(d)};
    }
};

} // namespace catalan
