#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace ads {

using cplx = std::complex<double>;

// Truncated Taylor jet in the radial variable: c[k] holds the k-th derivative.
// `order` is the highest derivative that is still exact; taking a derivative
// shifts the coefficients down and lowers it by one.
struct Jet {
    static constexpr int kMaxOrder = 3;

    std::array<cplx, kMaxOrder + 1> c{};
    int order = kMaxOrder;

    Jet() = default;
    Jet(cplx v) { c[0] = v; }  // NOLINT: constants promote implicitly
    Jet(double v) { c[0] = v; }  // NOLINT

    static Jet variable(double r) {
        Jet j;
        j.c[0] = r;
        j.c[1] = 1.0;
        return j;
    }

    cplx value() const { return c[0]; }

    cplx d(int k) const {
        if (k < 0 || k > order)
            throw std::out_of_range("jet: derivative order " + std::to_string(k) +
                                    " not available (order " + std::to_string(order) + ")");
        return c[k];
    }

    Jet derivative() const {
        if (order < 1) throw std::out_of_range("jet: no derivative left to take");
        Jet out;
        for (int k = 0; k < kMaxOrder; ++k) out.c[k] = c[k + 1];
        out.c[kMaxOrder] = 0.0;
        out.order = order - 1;
        return out;
    }

    Jet& operator+=(const Jet& o) {
        for (int k = 0; k <= kMaxOrder; ++k) c[k] += o.c[k];
        order = std::min(order, o.order);
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int k = 0; k <= kMaxOrder; ++k) c[k] -= o.c[k];
        order = std::min(order, o.order);
        return *this;
    }
    Jet& operator*=(cplx s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    Jet operator-() const {
        Jet out = *this;
        for (auto& x : out.c) x = -x;
        return out;
    }
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, cplx s) { return a *= s; }
inline Jet operator*(cplx s, Jet a) { return a *= s; }
inline Jet operator*(Jet a, double s) { return a *= cplx(s); }
inline Jet operator*(double s, Jet a) { return a *= cplx(s); }

// Leibniz rule up to third order.
inline Jet operator*(const Jet& a, const Jet& b) {
    Jet out;
    out.c[0] = a.c[0] * b.c[0];
    out.c[1] = a.c[1] * b.c[0] + a.c[0] * b.c[1];
    out.c[2] = a.c[2] * b.c[0] + 2.0 * a.c[1] * b.c[1] + a.c[0] * b.c[2];
    out.c[3] = a.c[3] * b.c[0] + 3.0 * a.c[2] * b.c[1] + 3.0 * a.c[1] * b.c[2] + a.c[0] * b.c[3];
    out.order = std::min(a.order, b.order);
    return out;
}

// Faà di Bruno: h = f(g) given f, f', f'', f''' at g(r).
inline Jet compose(const Jet& g, const std::array<cplx, 4>& f) {
    const cplx g1 = g.c[1], g2 = g.c[2], g3 = g.c[3];
    Jet out;
    out.c[0] = f[0];
    out.c[1] = f[1] * g1;
    out.c[2] = f[2] * g1 * g1 + f[1] * g2;
    out.c[3] = f[3] * g1 * g1 * g1 + 3.0 * f[2] * g1 * g2 + f[1] * g3;
    out.order = g.order;
    return out;
}

inline Jet reciprocal(const Jet& g) {
    const cplx x = g.c[0];
    if (x == cplx(0.0)) throw std::domain_error("jet: division by zero");
    const cplx i1 = 1.0 / x;
    return compose(g, {i1, -i1 * i1, 2.0 * i1 * i1 * i1, -6.0 * i1 * i1 * i1 * i1});
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
inline Jet operator/(const Jet& a, cplx s) { return a * (1.0 / s); }
inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }

// g^p for real p; the base is expected on the positive real axis
// (r, 1 + r^2) but complex bases follow the principal branch.
inline Jet pow(const Jet& g, double p) {
    const cplx x = g.c[0];
    const cplx v = std::pow(x, p);
    return compose(g, {v, p * v / x, p * (p - 1.0) * v / (x * x),
                       p * (p - 1.0) * (p - 2.0) * v / (x * x * x)});
}

inline Jet sqrt(const Jet& g) { return pow(g, 0.5); }

}  // namespace ads
