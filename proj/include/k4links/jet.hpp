#pragma once

#include "k4links/real.hpp"
#include "k4links/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace k4links {

/// Truncated univariate Taylor expansion over Real: c[0] + c[1] t + ... .
/// Used for singular expansions in Z = sqrt(1 - z/rho) and for derivatives
/// of analytic evaluations of exact series.
class Jet {
public:
    explicit Jet(std::size_t order) : c_(order + 1) {}
    Jet(std::initializer_list<Real> c) : c_(c) {}

    static Jet constant(const Real& v, std::size_t order) {
        Jet j(order);
        j.c_[0] = v;
        return j;
    }

    /// The variable itself: v + t.
    static Jet variable(const Real& v, std::size_t order) {
        Jet j(order);
        j.c_[0] = v;
        if (order >= 1) j.c_[1] = 1;
        return j;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Real& operator[](std::size_t i) const { return c_[i]; }
    Real& at(std::size_t i) { return c_[i]; }

private:
    std::vector<Real> c_;
};

inline Jet operator+(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r.at(i) = a[i] + b[i];
    return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r.at(i) = a[i] - b[i];
    return r;
}

inline Jet operator+(const Jet& a, const Real& v) {
    Jet r = a;
    r.at(0) += v;
    return r;
}

inline Jet operator-(const Jet& a, const Real& v) {
    Jet r = a;
    r.at(0) -= v;
    return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= a.order(); ++j) {
            if (b[j] != 0) r.at(i + j) += a[i] * b[j];
        }
    }
    return r;
}

inline Jet operator*(const Jet& a, const Real& v) {
    Jet r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) r.at(i) = a[i] * v;
    return r;
}

inline Jet inverse(const Jet& a) {
    if (a[0] == 0) throw std::domain_error("Jet inverse: zero constant term");
    Jet r(a.order());
    r.at(0) = 1 / a[0];
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Real s = 0;
        for (std::size_t j = 1; j <= n; ++j) s += a[j] * r[n - j];
        r.at(n) = -s / a[0];
    }
    return r;
}

inline Jet operator/(const Jet& a, const Jet& b) { return a * inverse(b); }

inline Jet exp(const Jet& a) {
    Jet r(a.order());
    r.at(0) = exp(a[0]);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        Real s = 0;
        for (std::size_t j = 1; j <= n; ++j) s += Real(j) * a[j] * r[n - j];
        r.at(n) = s / Real(n);
    }
    return r;
}

inline Jet pow_int(const Jet& a, unsigned long e) {
    Jet r = Jet::constant(Real(1), a.order());
    Jet b = a;
    while (e) {
        if (e & 1u) r = r * b;
        if (e >>= 1u) b = b * b;
    }
    return r;
}

/// Horner evaluation of an exact series at a jet argument. Valid when the
/// argument lies inside the series' disk of convergence up to the intended
/// tolerance: the caller controls the truncation order of `s`.
inline Jet eval_series(const TruncSeries& s, const Jet& x) {
    Jet r(x.order());
    for (std::size_t k = s.order() + 1; k-- > 0;) {
        r = r * x;
        if (s[k] != 0) r.at(0) += to_real(s[k]);
    }
    return r;
}

/// Bivariate jet of order two: value and partials up to second order in
/// (z, y). Enough for fold-point Newton iterations and the square-root
/// expansion coefficient.
struct Jet2 {
    Real v, z, y, zz, zy, yy;

    static Jet2 constant(const Real& c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet2 var_z(const Real& c) { return {c, 1, 0, 0, 0, 0}; }
    static Jet2 var_y(const Real& c) { return {c, 0, 1, 0, 0, 0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
    return {a.v + b.v, a.z + b.z, a.y + b.y, a.zz + b.zz, a.zy + b.zy, a.yy + b.yy};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) {
    return {a.v - b.v, a.z - b.z, a.y - b.y, a.zz - b.zz, a.zy - b.zy, a.yy - b.yy};
}

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v,
            a.z * b.v + a.v * b.z,
            a.y * b.v + a.v * b.y,
            a.zz * b.v + 2 * a.z * b.z + a.v * b.zz,
            a.zy * b.v + a.z * b.y + a.y * b.z + a.v * b.zy,
            a.yy * b.v + 2 * a.y * b.y + a.v * b.yy};
}

inline Jet2 operator*(const Jet2& a, const Real& c) {
    return {a.v * c, a.z * c, a.y * c, a.zz * c, a.zy * c, a.yy * c};
}

inline Jet2 operator+(const Jet2& a, const Real& c) {
    Jet2 r = a;
    r.v += c;
    return r;
}

inline Jet2 inverse(const Jet2& b) {
    if (b.v == 0) throw std::domain_error("Jet2 inverse: zero value");
    const Real w0 = 1 / b.v;
    const Real w02 = w0 * w0;
    return {w0,
            -b.z * w02,
            -b.y * w02,
            w02 * (2 * b.z * b.z * w0 - b.zz),
            w02 * (2 * b.z * b.y * w0 - b.zy),
            w02 * (2 * b.y * b.y * w0 - b.yy)};
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inverse(b); }

inline Jet2 sqrt(const Jet2& f) {
    if (f.v <= 0) throw std::domain_error("Jet2 sqrt: nonpositive value");
    const Real s0 = sqrt(f.v);
    const Real inv2s = Real(1) / (2 * s0);
    const Real sz = f.z * inv2s;
    const Real sy = f.y * inv2s;
    return {s0,
            sz,
            sy,
            (f.zz - 2 * sz * sz) * inv2s,
            (f.zy - 2 * sz * sy) * inv2s,
            (f.yy - 2 * sy * sy) * inv2s};
}

inline Jet2 pow_int(const Jet2& a, unsigned long e) {
    Jet2 r = Jet2::constant(Real(1));
    Jet2 b = a;
    while (e) {
        if (e & 1u) r = r * b;
        if (e >>= 1u) b = b * b;
    }
    return r;
}

} // namespace k4links
