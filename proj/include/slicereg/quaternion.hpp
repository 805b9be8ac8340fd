#pragma once

#include <cmath>
#include <algorithm>

#include "slicereg/errors.hpp"

namespace slicereg {

// Vector parts with norm below this count as real; norms below it are not invertible.
inline constexpr double kRealEpsilon = 1e-12;
inline constexpr double kZeroEpsilon = 1e-12;

/// Element of H as w + x i + y j + z k.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double v) { return {v, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

    constexpr Quaternion& operator+=(const Quaternion& o)
    {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }

    constexpr Quaternion& operator-=(const Quaternion& o)
    {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }

    constexpr Quaternion& operator*=(double s)
    {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    constexpr bool operator==(const Quaternion& o) const = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

// Hamilton product: i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b)
{
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline double vec_norm(const Quaternion& q) { return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z); }

constexpr double dot4(const Quaternion& a, const Quaternion& b)
{
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline bool is_real(const Quaternion& q, double eps = kRealEpsilon) { return vec_norm(q) <= eps; }

inline bool is_finite(const Quaternion& q)
{
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) && std::isfinite(q.z);
}

/// conj(q) / ||q||^2, the multiplicative inverse.
inline Quaternion inverse(const Quaternion& q, double eps = kZeroEpsilon)
{
    const double n2 = norm_sq(q);
    if (n2 <= eps * eps)
        throw DomainFault(Fault::ZeroDivision, "quaternion norm too small to invert");
    return conj(q) * (1.0 / n2);
}

/// Purely imaginary unit quaternion, the axis of a slice plane C_I.
struct UnitImaginary {
    double x = 1.0;
    double y = 0.0;
    double z = 0.0;

    static UnitImaginary normalized(double x, double y, double z)
    {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n <= kZeroEpsilon)
            throw DomainFault(Fault::ZeroArgument, "cannot normalize a zero vector part");
        return UnitImaginary{x / n, y / n, z / n};
    }

    static constexpr UnitImaginary i() { return {1.0, 0.0, 0.0}; }
    static constexpr UnitImaginary j() { return {0.0, 1.0, 0.0}; }
    static constexpr UnitImaginary k() { return {0.0, 0.0, 1.0}; }

    /// (i + j + k)/sqrt(3)
    static UnitImaginary diagonal()
    {
        const double s = 1.0 / std::sqrt(3.0);
        return {s, s, s};
    }

    constexpr Quaternion as_quaternion() const { return {0.0, x, y, z}; }

    constexpr UnitImaginary operator-() const { return {-x, -y, -z}; }

    constexpr bool operator==(const UnitImaginary& o) const = default;
};

constexpr double dot(const UnitImaginary& a, const UnitImaginary& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Fixed default axis assigned to real quaternions (paper allows an arbitrary choice).
constexpr UnitImaginary default_unit() { return UnitImaginary::i(); }

/// x + I y, the embedding of a slice-plane point into H.
constexpr Quaternion embed_slice(double x, double y, const UnitImaginary& I)
{
    return {x, I.x * y, I.y * y, I.z * y};
}

/// cos(a) + I sin(a)
inline Quaternion unit_exp(const UnitImaginary& I, double a)
{
    return embed_slice(std::cos(a), std::sin(a), I);
}

struct ImaginaryAxis {
    UnitImaginary unit;
    bool degenerate = false; // set when q was real and the default axis was substituted
};

/// Axis I_q = vec(q)/||vec(q)||; the default axis with degenerate=true for real q.
inline ImaginaryAxis unit_imaginary(const Quaternion& q, double eps = kRealEpsilon)
{
    const double vn = vec_norm(q);
    if (vn <= eps)
        return {default_unit(), true};
    return {UnitImaginary{q.x / vn, q.y / vn, q.z / vn}, false};
}

/// Trigonometric form q = r (cos a + I sin a) with a in [0, pi].
struct PolarForm {
    double modulus = 0.0;
    double argument = 0.0;
    UnitImaginary axis;
    bool degenerate = false;
};

inline PolarForm polar_form(const Quaternion& q, double eps = kRealEpsilon)
{
    const double r = norm(q);
    if (r <= kZeroEpsilon)
        throw DomainFault(Fault::ZeroArgument, "q = 0 has no trigonometric form");
    const auto axis = unit_imaginary(q, eps);
    const double c = std::clamp(q.w / r, -1.0, 1.0);
    // a = 0 for positive reals, a = pi for negative reals.
    const double a = axis.degenerate ? (q.w >= 0.0 ? 0.0 : std::acos(-1.0)) : std::acos(c);
    return {r, a, axis.unit, axis.degenerate};
}

inline Quaternion reconstruct(const PolarForm& p)
{
    return embed_slice(p.modulus * std::cos(p.argument), p.modulus * std::sin(p.argument), p.axis);
}

/// arg(q) in [0, pi].
inline double arg(const Quaternion& q) { return polar_form(q).argument; }

} // namespace slicereg
