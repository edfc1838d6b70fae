#pragma once

#include <cmath>
#include <complex>
#include <optional>

#include "hyper/errors.hpp"

namespace hyper {

/// Element of the commutative ring H spanned by {1, i, j, ij} with
/// i^2 = -1, j^2 = +1, (ij)^2 = -1 and ij = ji.  Storage order is fixed
/// project-wide as (x, y, v, w) for z = x + i y + j v + ij w.
struct HNumber {
    double x{0.0};
    double y{0.0};
    double v{0.0};
    double w{0.0};

    HNumber() = default;

    HNumber(double x_, double y_ = 0.0, double v_ = 0.0, double w_ = 0.0)
        : x(x_), y(y_), v(v_), w(w_) {
        if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(v) && std::isfinite(w)))
            throw NonFiniteValue("HNumber: non-finite component");
    }

    static HNumber unit_i() { return HNumber(0.0, 1.0, 0.0, 0.0); }
    static HNumber unit_j() { return HNumber(0.0, 0.0, 1.0, 0.0); }
    static HNumber unit_ij() { return HNumber(0.0, 0.0, 0.0, 1.0); }

    /// Idempotents (1 +- j)/2 generating the null-plane decomposition.
    static HNumber projector_plus() { return HNumber(0.5, 0.0, 0.5, 0.0); }
    static HNumber projector_minus() { return HNumber(0.5, 0.0, -0.5, 0.0); }

    HNumber& operator+=(const HNumber& o) {
        x += o.x; y += o.y; v += o.v; w += o.w;
        return *this;
    }
    HNumber& operator-=(const HNumber& o) {
        x -= o.x; y -= o.y; v -= o.v; w -= o.w;
        return *this;
    }
    HNumber operator-() const { return HNumber(-x, -y, -v, -w); }

    /// Euclidean norm of the four real components.  H carries no canonical
    /// modulus; this one is used for tolerances only.
    double norm() const { return std::sqrt(x * x + y * y + v * v + w * w); }
    double norm_sq() const { return x * x + y * y + v * v + w * w; }
};

inline HNumber operator+(HNumber a, const HNumber& b) { return a += b; }
inline HNumber operator-(HNumber a, const HNumber& b) { return a -= b; }

inline HNumber operator*(const HNumber& a, const HNumber& b) {
    // Write a = a0 + j a1, b = b0 + j b1 with a0, a1, b0, b1 in C(i);
    // then ab = (a0 b0 + a1 b1) + j (a0 b1 + a1 b0).
    return HNumber(a.x * b.x - a.y * b.y + a.v * b.v - a.w * b.w,
                   a.x * b.y + a.y * b.x + a.v * b.w + a.w * b.v,
                   a.x * b.v + a.v * b.x - a.y * b.w - a.w * b.y,
                   a.x * b.w + a.w * b.x + a.y * b.v + a.v * b.y);
}

inline HNumber operator*(double s, const HNumber& a) { return HNumber(s * a.x, s * a.y, s * a.v, s * a.w); }
inline HNumber operator*(const HNumber& a, double s) { return s * a; }

/// Multiplication by the complex unit i.
inline HNumber times_i(const HNumber& a) { return HNumber(-a.y, a.x, -a.w, a.v); }
/// Multiplication by the hyperbolic unit j.
inline HNumber times_j(const HNumber& a) { return HNumber(a.v, a.w, a.x, a.y); }

/// Flip the sign of i only (scalar shadow of reversion).
inline HNumber conj_i(const HNumber& z) { return HNumber(z.x, -z.y, z.v, -z.w); }
/// Flip the sign of j only (grade involution on coefficients).
inline HNumber conj_j(const HNumber& z) { return HNumber(z.x, z.y, -z.v, -z.w); }
/// Flip the sign of both i and j (scalar shadow of conjugation).
inline HNumber conj_full(const HNumber& z) { return HNumber(z.x, -z.y, -z.v, z.w); }

/// Components of z along the idempotents P+- = (1 +- j)/2.  Each component
/// is an ordinary complex number with unit i, and the map is a ring
/// isomorphism H ~ C (+) C.
struct SplitPair {
    std::complex<double> plus;
    std::complex<double> minus;
};

inline SplitPair split(const HNumber& z) {
    return SplitPair{{z.x + z.v, z.y + z.w}, {z.x - z.v, z.y - z.w}};
}

inline HNumber join(const SplitPair& p) {
    return HNumber(0.5 * (p.plus.real() + p.minus.real()),
                   0.5 * (p.plus.imag() + p.minus.imag()),
                   0.5 * (p.plus.real() - p.minus.real()),
                   0.5 * (p.plus.imag() - p.minus.imag()));
}

/// exp on H, computed componentwise in the null-plane representation.
HNumber exp(const HNumber& z);

/// True when both split components clear the zero-divisor guard band
/// |component| >= 1e-12 * (1 + |z|).
bool is_invertible(const HNumber& z);

/// Multiplicative inverse, or nullopt for (numerical) zero divisors.
std::optional<HNumber> inverse(const HNumber& z);

} // namespace hyper
