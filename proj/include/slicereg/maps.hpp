#pragma once

#include "slicereg/sample_grid.hpp"
#include "slicereg/series.hpp"

namespace slicereg {

/// Koebe function K(q) = q [(1-q)^2]^{-1} = sum_{n>=1} n q^n.
inline TruncatedSeries koebe(int degree)
{
    TruncatedSeries f(degree);
    for (int n = 1; n <= degree; ++n)
        f.at(n) = Quaternion::real(static_cast<double>(n));
    return f;
}

/// Geometric series sum_{n>=0} q^n = (1-q)^{-*}.
inline TruncatedSeries geometric(int degree)
{
    TruncatedSeries f(degree);
    for (int n = 0; n <= degree; ++n)
        f.at(n) = Quaternion::one();
    return f;
}

/// Extremal function of the Caratheodory bound: a_1 = 1, a_n = 2 e^{I(n-1)theta}/n.
inline TruncatedSeries caratheodory_extremal(double theta, const UnitImaginary& I, int degree)
{
    TruncatedSeries f(degree);
    if (degree >= 1)
        f.at(1) = Quaternion::one();
    for (int n = 2; n <= degree; ++n)
        f.at(n) = unit_exp(I, static_cast<double>(n - 1) * theta) * (2.0 / n);
    return f;
}

/// r^{-1} f(r q): coefficients a_n r^{n-1}.
inline TruncatedSeries dilation(const TruncatedSeries& f, double r)
{
    if (!(r > 0.0 && r <= 1.0))
        throw DomainFault(Fault::ParameterOutOfRange, "dilation needs r in (0, 1]");
    TruncatedSeries out(f.degree());
    double r_pow = 1.0 / r; // r^{n-1}
    for (int n = 0; n <= f.degree(); ++n) {
        out.at(n) = f.coeff(n) * r_pow;
        r_pow *= r;
    }
    return out;
}

/// u f(u' q u) u' with a unit rotor u: coefficients u a_n conj(u).
inline TruncatedSeries rotate_conjugate(const TruncatedSeries& f, const Quaternion& u)
{
    if (std::abs(norm(u) - 1.0) > 1e-10)
        throw DomainFault(Fault::NonUnitRotor, "rotation needs a unit quaternion");
    TruncatedSeries out(f.degree());
    const Quaternion u_bar = conj(u);
    for (int n = 0; n <= f.degree(); ++n)
        out.at(n) = u * f.coeff(n) * u_bar;
    return out;
}

/// Pointwise rotation R_{phi,I}(q) = e^{-I phi} f(e^{I phi} q). Not a left power
/// series in q in general, hence evaluated rather than constructed.
inline Quaternion rotation_eval(const TruncatedSeries& f, double phi, const UnitImaginary& I,
                                const Quaternion& q)
{
    return unit_exp(I, -phi) * evaluate(f, unit_exp(I, phi) * q);
}

/// Moebius transform T_t(q) = (q + t)(1 + t q)^{-1} as a series:
/// a_0 = t, a_n = (1 - t^2)(-t)^{n-1}.
inline TruncatedSeries mobius_series(double t, int degree)
{
    if (!(t > -1.0 && t < 1.0))
        throw DomainFault(Fault::ParameterOutOfRange, "mobius parameter needs |t| < 1");
    TruncatedSeries f(degree);
    f.at(0) = Quaternion::real(t);
    double pow = 1.0; // (-t)^{n-1}
    for (int n = 1; n <= degree; ++n) {
        f.at(n) = Quaternion::real((1.0 - t * t) * pow);
        pow *= -t;
    }
    return f;
}

/// Alexander operator A(f)(q) = int_0^q t^{-1} f(t) dt: coefficients a_k / k.
/// Satisfies q d_s[A(f)] = f.
inline TruncatedSeries alexander_op(const TruncatedSeries& f)
{
    require_normalized(f, "alexander_op");
    TruncatedSeries out(f.degree());
    for (int k = 1; k <= f.degree(); ++k)
        out.at(k) = f.coeff(k) * (1.0 / k);
    return out;
}

/// Libera operator L(f)(q) = 2 q^{-1} int_0^q f(t) dt: coefficients 2 a_k / (k+1).
inline TruncatedSeries libera_op(const TruncatedSeries& f)
{
    require_normalized(f, "libera_op");
    TruncatedSeries out(f.degree());
    for (int k = 1; k <= f.degree(); ++k)
        out.at(k) = f.coeff(k) * (2.0 / (k + 1));
    return out;
}

/// g = f a * (a - f)^{-*} for intrinsic normalized f and real a outside the image
/// of f. Full image validation is impossible from coefficients; when a grid is
/// supplied, "a not attained" is sampled there and failures raise HypothesisFault.
inline TruncatedSeries ratio_transform(const TruncatedSeries& f, double a,
                                       const SampleGrid* image_check_grid = nullptr)
{
    if (std::abs(a) <= kZeroEpsilon)
        throw DomainFault(Fault::NonInvertibleConstantTerm, "ratio transform needs a != 0");
    if (norm(f.coeff(0)) > 1e-10)
        throw DomainFault(Fault::NotNormalized, "ratio transform needs f(0) = 0");
    if (image_check_grid) {
        image_check_grid->for_each_point([&](const Quaternion& q, const UnitImaginary&, double) {
            if (norm(evaluate(f, q) - Quaternion::real(a)) <= 1e-9)
                throw HypothesisFault(Hypothesis::HypothesisFailed,
                                      "value a is attained by f on the sample grid");
        });
    }
    const TruncatedSeries denom = TruncatedSeries::constant(Quaternion::real(a), f.degree()) - f;
    return star_mul(scale(f, a), star_inverse(denom), f.degree());
}

/// g(q) = sqrt(f(q^2)) for intrinsic normalized f, taking the branch with g'(0) = 1.
/// The result is odd: q + b_3 q^3 + b_5 q^5 + ...
inline TruncatedSeries odd_sqrt_transform(const TruncatedSeries& f)
{
    require_normalized(f, "odd_sqrt_transform");
    if (!is_intrinsic(f))
        throw DomainFault(Fault::NotNormalized, "odd_sqrt_transform needs real coefficients");
    const int half = f.degree() >= 1 ? (f.degree() - 1) / 2 : 0;
    // h(t) = 1 + a_2 t + a_3 t^2 + ... so that f(q^2) = q^2 h(q^2); s = sqrt(h).
    std::vector<double> h(static_cast<size_t>(half) + 1, 0.0);
    for (int k = 0; k <= half; ++k)
        h[static_cast<size_t>(k)] = f.coeff(k + 1).w;
    std::vector<double> s(h.size(), 0.0);
    s[0] = 1.0;
    for (size_t n = 1; n < s.size(); ++n) {
        double acc = 0.0;
        for (size_t r = 1; r < n; ++r)
            acc += s[r] * s[n - r];
        s[n] = 0.5 * (h[n] - acc);
    }
    TruncatedSeries g(f.degree());
    for (int k = 0; k <= half; ++k)
        g.at(2 * k + 1) = Quaternion::real(s[static_cast<size_t>(k)]);
    return g;
}

} // namespace slicereg
