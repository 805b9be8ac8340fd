#pragma once

#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

/// Degree-N left power series sum q^n a_n with quaternionic coefficients on the right.
/// Every identity of the calculus below is asserted modulo q^(N+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree) : coeffs_(static_cast<size_t>(check_degree(degree)) + 1) {}

    explicit TruncatedSeries(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("a truncated series needs at least the constant coefficient");
        for (const auto& c : coeffs_)
            if (!is_finite(c))
                throw std::invalid_argument("series coefficients must be finite");
    }

    static TruncatedSeries constant(const Quaternion& a0, int degree = 0)
    {
        TruncatedSeries s(degree);
        s.at(0) = a0;
        return s;
    }

    /// The identity series q.
    static TruncatedSeries identity(int degree = 1)
    {
        TruncatedSeries s(std::max(degree, 1));
        s.at(1) = Quaternion::one();
        return s;
    }

    /// q^n a
    static TruncatedSeries monomial(int n, const Quaternion& a, int degree = -1)
    {
        TruncatedSeries s(degree < 0 ? n : degree);
        if (n <= s.degree())
            s.at(n) = a;
        return s;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient a_n; reads past the truncation degree are zero.
    Quaternion coeff(int n) const
    {
        if (n < 0)
            throw std::out_of_range("negative coefficient index");
        return n <= degree() ? coeffs_[static_cast<size_t>(n)] : Quaternion::zero();
    }

    Quaternion& at(int n) { return coeffs_.at(static_cast<size_t>(n)); }

    const std::vector<Quaternion>& coeffs() const { return coeffs_; }

    /// Copy truncated or zero-padded to exactly degree n.
    TruncatedSeries with_degree(int n) const
    {
        TruncatedSeries out(n);
        for (int m = 0; m <= std::min(n, degree()); ++m)
            out.at(m) = coeff(m);
        return out;
    }

    bool operator==(const TruncatedSeries& o) const = default;

private:
    static int check_degree(int degree)
    {
        if (degree < 0)
            throw std::invalid_argument("series degree must be nonnegative");
        return degree;
    }

    std::vector<Quaternion> coeffs_;
};

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g)
{
    TruncatedSeries out(std::max(f.degree(), g.degree()));
    for (int n = 0; n <= out.degree(); ++n)
        out.at(n) = f.coeff(n) + g.coeff(n);
    return out;
}

inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g)
{
    TruncatedSeries out(std::max(f.degree(), g.degree()));
    for (int n = 0; n <= out.degree(); ++n)
        out.at(n) = f.coeff(n) - g.coeff(n);
    return out;
}

/// f(q) c, i.e. every coefficient multiplied by c on the right. Left scaling by a
/// non-real quaternion would not be a left series again, so it is not offered.
inline TruncatedSeries scale_right(const TruncatedSeries& f, const Quaternion& c)
{
    TruncatedSeries out(f.degree());
    for (int n = 0; n <= f.degree(); ++n)
        out.at(n) = f.coeff(n) * c;
    return out;
}

inline TruncatedSeries scale(const TruncatedSeries& f, double s)
{
    TruncatedSeries out(f.degree());
    for (int n = 0; n <= f.degree(); ++n)
        out.at(n) = f.coeff(n) * s;
    return out;
}

/// q * f(q): shifts every coefficient up one slot.
inline TruncatedSeries shift_up(const TruncatedSeries& f)
{
    TruncatedSeries out(f.degree() + 1);
    for (int n = 0; n <= f.degree(); ++n)
        out.at(n + 1) = f.coeff(n);
    return out;
}

/// f(q) / q for series vanishing at 0.
inline TruncatedSeries shift_down(const TruncatedSeries& f, double eps = kZeroEpsilon)
{
    if (norm(f.coeff(0)) > eps)
        throw DomainFault(Fault::NotNormalized, "constant term must vanish to divide by q");
    TruncatedSeries out(std::max(f.degree() - 1, 0));
    for (int n = 1; n <= f.degree(); ++n)
        out.at(n - 1) = f.coeff(n);
    return out;
}

/// *-product: coefficient convolution c_n = sum_{r=0}^{n} a_r b_{n-r}.
/// cap < 0 means the full degree deg f + deg g.
inline TruncatedSeries star_mul(const TruncatedSeries& f, const TruncatedSeries& g, int cap = -1)
{
    const int natural = f.degree() + g.degree();
    const int out_deg = cap < 0 ? natural : std::min(cap, natural);
    TruncatedSeries out(out_deg);
    for (int r = 0; r <= std::min(f.degree(), out_deg); ++r) {
        const Quaternion a = f.coeff(r);
        if (a == Quaternion::zero())
            continue;
        for (int s = 0; s <= std::min(g.degree(), out_deg - r); ++s)
            out.at(r + s) += a * g.coeff(s);
    }
    return out;
}

/// n-fold *-power; the empty product is the constant 1.
inline TruncatedSeries star_pow(const TruncatedSeries& f, int n, int cap = -1)
{
    if (n < 0)
        throw DomainFault(Fault::ParameterOutOfRange, "star_pow exponent must be nonnegative");
    if (n == 0)
        return TruncatedSeries::constant(Quaternion::one(), cap < 0 ? 0 : cap);
    TruncatedSeries acc = cap < 0 ? f : f.with_degree(std::min(cap, f.degree()));
    for (int m = 1; m < n; ++m)
        acc = star_mul(acc, f, cap);
    return acc;
}

inline constexpr int kOrderInfinity = std::numeric_limits<int>::max();

/// Least n with ||a_n|| > eps; kOrderInfinity for the zero series.
inline int order(const TruncatedSeries& f, double eps = kZeroEpsilon)
{
    for (int n = 0; n <= f.degree(); ++n)
        if (norm(f.coeff(n)) > eps)
            return n;
    return kOrderInfinity;
}

/// Convolution reciprocal f^{-*}: f * f^{-*} = f^{-*} * f = 1 up to deg f.
inline TruncatedSeries star_inverse(const TruncatedSeries& f, double eps = kZeroEpsilon)
{
    if (norm(f.coeff(0)) <= eps)
        throw DomainFault(Fault::NonInvertibleConstantTerm, "star inverse needs an invertible constant term");
    const Quaternion a0_inv = inverse(f.coeff(0));
    TruncatedSeries out(f.degree());
    out.at(0) = a0_inv;
    for (int n = 1; n <= f.degree(); ++n) {
        Quaternion acc = Quaternion::zero();
        for (int r = 1; r <= n; ++r)
            acc += f.coeff(r) * out.coeff(n - r);
        out.at(n) = -(a0_inv * acc);
    }
    return out;
}

/// (g . w)(q) = sum_n (w(q))^{*n} a_n, the regularity-preserving composition.
/// Requires w(0) = 0 so the sum is summable. cap < 0 means max(deg g, deg w).
inline TruncatedSeries bullet_compose(const TruncatedSeries& g, const TruncatedSeries& w, int cap = -1,
                                      double eps = kZeroEpsilon)
{
    if (norm(w.coeff(0)) > eps)
        throw DomainFault(Fault::NonzeroConstantTerm, "bullet composition needs w(0) = 0");
    const int out_deg = cap < 0 ? std::max(g.degree(), w.degree()) : cap;
    TruncatedSeries out(out_deg);
    out.at(0) = g.coeff(0);
    // w^{*n} has order >= n, so terms beyond n = out_deg cannot contribute.
    TruncatedSeries w_pow = w.with_degree(std::min(w.degree(), out_deg));
    for (int n = 1; n <= std::min(g.degree(), out_deg); ++n) {
        if (n > 1)
            w_pow = star_mul(w_pow, w, out_deg);
        const Quaternion an = g.coeff(n);
        if (an == Quaternion::zero())
            continue;
        for (int m = n; m <= out_deg; ++m)
            out.at(m) += w_pow.coeff(m) * an;
    }
    return out;
}

/// Truncated bullet sum without the w(0) = 0 gate. The formal series is only
/// summable for w(0) = 0; this variant targets the pointwise reading g(w(q)) for
/// intrinsic w with small constant term, where the outer sum still converges and
/// the truncation error is the caller's to budget (e.g. Moebius round trips).
inline TruncatedSeries bullet_compose_analytic(const TruncatedSeries& g, const TruncatedSeries& w, int cap)
{
    TruncatedSeries out(cap);
    out.at(0) = g.coeff(0);
    TruncatedSeries w_pow = w.with_degree(std::min(w.degree(), cap));
    for (int n = 1; n <= g.degree(); ++n) {
        if (n > 1)
            w_pow = star_mul(w_pow, w, cap);
        const Quaternion an = g.coeff(n);
        if (an == Quaternion::zero())
            continue;
        for (int m = 0; m <= cap; ++m)
            out.at(m) += w_pow.coeff(m) * an;
    }
    return out;
}

enum class InverseSide {
    Left,  // h with (h . g) = q
    Right, // h with (g . h) = q
};

namespace detail {

inline void require_invertible_for_reversion(const TruncatedSeries& g, double eps)
{
    if (norm(g.coeff(0)) > eps || norm(g.coeff(1)) <= eps)
        throw DomainFault(Fault::NotNormalizable, "compositional inverse needs g(0) = 0 and invertible g'(0)");
}

// (g . h) = q solved for h. Column m of the table holds the q^m coefficients of
// h^{*1}, ..., h^{*m}; they depend only on b_1..b_{m-1} for n >= 2, so each column
// can be completed before b_m is known and the recursion b_m a_1 + P_m(...) = 0 closes.
inline TruncatedSeries bullet_inverse_right(const TruncatedSeries& g, int cap)
{
    const Quaternion a1_inv = inverse(g.coeff(1));
    TruncatedSeries h(cap);
    if (cap < 1)
        return h;
    std::vector<std::vector<Quaternion>> pow_col(static_cast<size_t>(cap) + 1,
                                                 std::vector<Quaternion>(static_cast<size_t>(cap) + 1));
    h.at(1) = a1_inv;
    pow_col[1][1] = a1_inv;
    for (int m = 2; m <= cap; ++m) {
        for (int n = 2; n <= m; ++n) {
            Quaternion acc = Quaternion::zero();
            for (int r = 1; r <= m - (n - 1); ++r)
                acc += pow_col[static_cast<size_t>(n - 1)][static_cast<size_t>(m - r)] * h.coeff(r);
            pow_col[static_cast<size_t>(n)][static_cast<size_t>(m)] = acc;
        }
        Quaternion rhs = Quaternion::zero();
        for (int n = 2; n <= m; ++n)
            rhs += pow_col[static_cast<size_t>(n)][static_cast<size_t>(m)] * g.coeff(n);
        h.at(m) = -(rhs * a1_inv);
        pow_col[1][static_cast<size_t>(m)] = h.coeff(m);
    }
    return h;
}

// (h . g) = q solved for h: sum_n g^{*n} b_n = q is triangular in the b_n once the
// *-powers of g are known, with leading coefficient a_1^m.
inline TruncatedSeries bullet_inverse_left(const TruncatedSeries& g, int cap)
{
    TruncatedSeries h(cap);
    if (cap < 1)
        return h;
    std::vector<TruncatedSeries> g_pow;
    g_pow.reserve(static_cast<size_t>(cap) + 1);
    g_pow.push_back(TruncatedSeries::constant(Quaternion::one(), 0));
    g_pow.push_back(g.with_degree(cap));
    for (int n = 2; n <= cap; ++n)
        g_pow.push_back(star_mul(g_pow.back(), g, cap));
    Quaternion a1_pow = g.coeff(1); // a_1^m as m advances
    h.at(1) = inverse(a1_pow);
    for (int m = 2; m <= cap; ++m) {
        a1_pow = a1_pow * g.coeff(1);
        Quaternion rhs = Quaternion::zero();
        for (int n = 1; n < m; ++n)
            rhs += g_pow[static_cast<size_t>(n)].coeff(m) * h.coeff(n);
        h.at(m) = -(inverse(a1_pow) * rhs);
    }
    return h;
}

} // namespace detail

/// Compositional inverse with respect to the bullet product, on the requested side:
/// Right gives (g . h) = q, Left gives (h . g) = q, both up to the cap degree.
inline TruncatedSeries bullet_inverse(const TruncatedSeries& g, InverseSide side, int cap = -1,
                                      double eps = kZeroEpsilon)
{
    detail::require_invertible_for_reversion(g, eps);
    const int out_deg = cap < 0 ? g.degree() : cap;
    return side == InverseSide::Right ? detail::bullet_inverse_right(g, out_deg)
                                      : detail::bullet_inverse_left(g, out_deg);
}

/// Termwise slice derivative: coefficients (n+1) a_{n+1}.
inline TruncatedSeries slice_derivative(const TruncatedSeries& f)
{
    TruncatedSeries out(std::max(f.degree() - 1, 0));
    for (int n = 1; n <= f.degree(); ++n)
        out.at(n - 1) = f.coeff(n) * static_cast<double>(n);
    return out;
}

/// sum q^n a_n by plain power accumulation; q^n is accumulated across the loop so
/// the right-coefficient convention stays intact (Horner would reorder factors).
inline Quaternion evaluate(const TruncatedSeries& f, const Quaternion& q)
{
    Quaternion acc = f.coeff(0);
    Quaternion q_pow = Quaternion::one();
    for (int n = 1; n <= f.degree(); ++n) {
        q_pow = q_pow * q;
        acc += q_pow * f.coeff(n);
    }
    return acc;
}

/// Representation Formula: value at x + I y from the two values on slice J.
/// f_plus = f(x + J y), f_minus = f(x - J y).
inline Quaternion representation_formula(const Quaternion& f_plus, const Quaternion& f_minus,
                                         const UnitImaginary& I, const UnitImaginary& J)
{
    const Quaternion iq = I.as_quaternion();
    const Quaternion jq = J.as_quaternion();
    return (f_plus + f_minus) * 0.5 + (iq * jq * (f_minus - f_plus)) * 0.5;
}

/// Splitting-Lemma decomposition of the coefficients: a_n = a1_n + a2_n J with
/// a1_n, a2_n in C_I, stored as complex numbers relative to I.
struct SplitPair {
    UnitImaginary I;
    UnitImaginary J;
    std::vector<std::complex<double>> f1;
    std::vector<std::complex<double>> f2;
};

inline constexpr double kOrthogonalityTol = 1e-10;

inline SplitPair split_coefficients(const TruncatedSeries& f, const UnitImaginary& I, const UnitImaginary& J)
{
    if (std::abs(dot(I, J)) > kOrthogonalityTol)
        throw DomainFault(Fault::NonOrthogonalUnits, "splitting needs <I, J> = 0");
    const Quaternion iq = I.as_quaternion();
    const Quaternion jq = J.as_quaternion();
    const Quaternion kq = iq * jq; // {1, I, J, IJ} is an orthonormal basis of R^4
    SplitPair out{I, J, {}, {}};
    out.f1.reserve(static_cast<size_t>(f.degree()) + 1);
    out.f2.reserve(static_cast<size_t>(f.degree()) + 1);
    for (int n = 0; n <= f.degree(); ++n) {
        const Quaternion a = f.coeff(n);
        out.f1.emplace_back(a.w, dot4(a, iq));
        out.f2.emplace_back(dot4(a, jq), dot4(a, kq));
    }
    return out;
}

/// Reassembles the series from a SplitPair; inverse of split_coefficients.
inline TruncatedSeries recombine(const SplitPair& sp)
{
    const Quaternion iq = sp.I.as_quaternion();
    const Quaternion jq = sp.J.as_quaternion();
    const Quaternion kq = iq * jq;
    TruncatedSeries out(static_cast<int>(sp.f1.size()) - 1);
    for (int n = 0; n <= out.degree(); ++n) {
        const auto c1 = sp.f1[static_cast<size_t>(n)];
        const auto c2 = sp.f2[static_cast<size_t>(n)];
        out.at(n) = Quaternion::real(c1.real()) + iq * c1.imag() + jq * c2.real() + kq * c2.imag();
    }
    return out;
}

/// Values of the even/odd parts at (x, y): f(x + I y) = alpha + I beta with
/// alpha(x, -y) = alpha(x, y) and beta(x, -y) = -beta(x, y).
struct SliceDecomposition {
    Quaternion alpha;
    Quaternion beta;
};

inline SliceDecomposition slice_decomposition(const TruncatedSeries& f, double x, double y,
                                              const UnitImaginary& I)
{
    const Quaternion f_plus = evaluate(f, embed_slice(x, y, I));
    const Quaternion f_minus = evaluate(f, embed_slice(x, -y, I));
    const Quaternion iq = I.as_quaternion();
    return {(f_plus + f_minus) * 0.5, -(iq * (f_plus - f_minus)) * 0.5};
}

enum class SeriesKind {
    Intrinsic,       // all coefficients real (class N)
    SlicePreserving, // all coefficients in one plane C_I (class V_I)
    General,
};

struct SeriesClass {
    SeriesKind kind = SeriesKind::Intrinsic;
    UnitImaginary plane = default_unit(); // meaningful only for SlicePreserving
};

inline SeriesClass classify(const TruncatedSeries& f, double eps = kRealEpsilon)
{
    std::optional<UnitImaginary> plane;
    for (int n = 0; n <= f.degree(); ++n) {
        const Quaternion a = f.coeff(n);
        if (vec_norm(a) <= eps)
            continue;
        const auto axis = unit_imaginary(a, eps);
        if (!plane) {
            plane = axis.unit;
            continue;
        }
        // parallel up to sign: C_I and C_{-I} are the same plane
        const double along = a.x * plane->x + a.y * plane->y + a.z * plane->z;
        const double rx = a.x - along * plane->x;
        const double ry = a.y - along * plane->y;
        const double rz = a.z - along * plane->z;
        if (std::sqrt(rx * rx + ry * ry + rz * rz) > eps * std::max(1.0, norm(a)))
            return {SeriesKind::General, default_unit()};
    }
    if (!plane)
        return {SeriesKind::Intrinsic, default_unit()};
    return {SeriesKind::SlicePreserving, *plane};
}

inline bool is_intrinsic(const TruncatedSeries& f, double eps = kRealEpsilon)
{
    return classify(f, eps).kind == SeriesKind::Intrinsic;
}

inline bool is_normalized(const TruncatedSeries& f, double eps = 1e-10)
{
    return norm(f.coeff(0)) <= eps && norm(f.coeff(1) - Quaternion::one()) <= eps;
}

inline void require_normalized(const TruncatedSeries& f, const char* who, double eps = 1e-10)
{
    if (!is_normalized(f, eps))
        throw DomainFault(Fault::NotNormalized, std::string(who) + " needs f(0) = 0 and f'(0) = 1");
}

/// Largest r with sum_{n>=1} r^n ||b_n|| < g_radius, located by bisection to 1e-6.
/// The sum is the truncated majorant plus the geometric tail bound ||b_N|| r^N / (1-r);
/// a nonzero top coefficient therefore declares divergence at r >= 1. Returns 0 when
/// even arbitrarily small radii fail.
inline double composition_radius_bound(double g_radius, const TruncatedSeries& w, double eps = kZeroEpsilon)
{
    const int n_top = w.degree();
    const double top = norm(w.coeff(n_top));
    const auto majorant = [&](double r) -> double {
        double sum = 0.0;
        double r_pow = 1.0;
        for (int n = 1; n <= w.degree(); ++n) {
            r_pow *= r;
            sum += r_pow * norm(w.coeff(n));
        }
        if (top > eps) {
            if (r >= 1.0)
                return std::numeric_limits<double>::infinity();
            sum += top * std::pow(r, n_top) / (1.0 - r);
        }
        return sum;
    };
    const auto ok = [&](double r) { return majorant(r) < g_radius; };
    if (g_radius <= 0.0 || !ok(1e-9))
        return 0.0;
    double lo = 1e-9;
    double hi = 1.0;
    while (ok(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 0x1p32)
            return hi;
    }
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

/// max_n ||f_n - g_n|| treating coefficients beyond either degree as zero.
inline double max_coeff_dist(const TruncatedSeries& f, const TruncatedSeries& g)
{
    double worst = 0.0;
    for (int n = 0; n <= std::max(f.degree(), g.degree()); ++n)
        worst = std::max(worst, norm(f.coeff(n) - g.coeff(n)));
    return worst;
}

} // namespace slicereg
