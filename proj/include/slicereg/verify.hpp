#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicereg/geocheck.hpp"
#include "slicereg/maps.hpp"
#include "slicereg/sample_grid.hpp"
#include "slicereg/series.hpp"

namespace slicereg {

inline constexpr double kVerifyTol = 1e-6;
/// |tightness| below this counts as "bound met with equality" (extremal contact).
inline constexpr double kTightnessThreshold = 1e-8;

enum class HypothesisStatus {
    Checked, // decidable from the data and actually decided
    Sampled, // tested on a finite sample; failure conclusive, success not
    Asserted, // analytic hypothesis the caller vouches for
};

inline const char* hypothesis_status_name(HypothesisStatus s)
{
    switch (s) {
        case HypothesisStatus::Checked: return "checked";
        case HypothesisStatus::Sampled: return "sampled";
        case HypothesisStatus::Asserted: return "asserted";
    }
    return "unknown";
}

struct HypothesisNote {
    std::string name;
    HypothesisStatus status = HypothesisStatus::Asserted;
    bool ok = true;
};

/// Outcome of one quantitative bound: max_violation = max(0, -min slack) and
/// tightness = min slack, so passed iff max_violation <= tol and an extremal
/// equality case shows up as |tightness| < kTightnessThreshold.
struct BoundReport {
    std::string bound_kind;
    bool passed = false;
    double max_violation = 0.0;
    double tightness = std::numeric_limits<double>::infinity();
    Quaternion witness;
    std::optional<double> r;
    std::optional<double> p;
    std::optional<double> theta;
    std::optional<UnitImaginary> unit;
    long points_checked = 0;
    long skipped_truncated = 0;
    long skipped_singular = 0;
    double tol = kVerifyTol;
    std::vector<HypothesisNote> hypotheses;
    std::vector<std::pair<std::string, double>> slacks; // named per-inequality minima
};

namespace detail {

struct SlackTracker {
    double min_slack = std::numeric_limits<double>::infinity();
    Quaternion witness;
    long observed = 0;

    void observe(double slack, const Quaternion& at)
    {
        ++observed;
        if (slack < min_slack) {
            min_slack = slack;
            witness = at;
        }
    }
};

inline void finish(BoundReport& report, const SlackTracker& t)
{
    report.points_checked = t.observed;
    report.tightness = t.min_slack;
    report.max_violation = t.observed > 0 ? std::max(0.0, -t.min_slack) : 0.0;
    report.witness = t.witness;
    report.passed = report.max_violation <= report.tol;
}

inline void require_class_sn(const TruncatedSeries& f, const char* who)
{
    require_normalized(f, who);
    if (!is_intrinsic(f))
        throw DomainFault(Fault::NotNormalized, std::string(who) + " needs real coefficients (class S cap N)");
}

} // namespace detail

/// Geometric tail bound ||a_N|| r^N / (1 - r) of a fully occupied series at radius r.
/// Trailing zero coefficients witness an exact polynomial, whose tail is zero.
inline double truncation_tail_bound(const TruncatedSeries& f, double r)
{
    const int top = f.degree();
    const double a_top = norm(f.coeff(top));
    if (a_top <= kZeroEpsilon)
        return 0.0;
    if (r >= 1.0)
        return std::numeric_limits<double>::infinity();
    return a_top * std::pow(r, top) / (1.0 - r);
}

enum class EnvelopeKind { Caratheodory, Distortion, Growth, RotationRatio };

inline const char* envelope_name(EnvelopeKind k)
{
    switch (k) {
        case EnvelopeKind::Caratheodory: return "caratheodory";
        case EnvelopeKind::Distortion: return "distortion";
        case EnvelopeKind::Growth: return "growth";
        case EnvelopeKind::RotationRatio: return "rotation-ratio";
    }
    return "unknown";
}

/// Lower/upper envelope checks at every grid point:
///   Caratheodory:  (1-r)/(1+r) <= Re d_s f <= ... <= (1+r)/(1-r)   (needs Re d_s f > 0)
///   Distortion:    (1-r)/(1+r)^3 <= ||d_s f|| <= (1+r)/(1-r)^3
///   Growth:        r/(1+r)^2 <= ||f|| <= r/(1-r)^2
///   RotationRatio: (1-r)/(1+r) <= ||q d_s f * f^{-*}|| <= (1+r)/(1-r)
/// Grid radii whose truncation tail bound exceeds tol are skipped and counted.
inline BoundReport verify_envelope(const TruncatedSeries& f, EnvelopeKind kind, const SampleGrid& grid,
                                   double tol = kVerifyTol)
{
    BoundReport report;
    report.bound_kind = envelope_name(kind);
    report.tol = tol;

    require_normalized(f, envelope_name(kind));
    if (kind == EnvelopeKind::Caratheodory) {
        const auto prereq = check_condition(f, Condition::PositiveDerivRealPart, grid);
        report.hypotheses.push_back({"positive-deriv-real-part", HypothesisStatus::Sampled, prereq.passed});
        if (!prereq.passed)
            throw HypothesisFault(Hypothesis::PrerequisiteNotMet,
                                  "Re d_s f > 0 failed on the sample grid");
    } else {
        detail::require_class_sn(f, envelope_name(kind));
        report.hypotheses.push_back({"intrinsic-coefficients", HypothesisStatus::Checked, true});
        report.hypotheses.push_back({"univalence (class S)", HypothesisStatus::Asserted, true});
    }

    const TruncatedSeries df = slice_derivative(f);
    const TruncatedSeries evaluated =
        kind == EnvelopeKind::Growth
            ? f
            : (kind == EnvelopeKind::RotationRatio
                   ? star_mul(df, star_inverse(shift_down(f)), f.degree())
                   : df);

    detail::SlackTracker lower_track, upper_track, all_track;
    long skipped = 0;
    grid.for_each_point([&](const Quaternion& q, const UnitImaginary&, double r) {
        if (truncation_tail_bound(evaluated, r) > tol) {
            ++skipped;
            return;
        }
        double value = 0.0;
        double lower = 0.0;
        double upper = 0.0;
        switch (kind) {
            case EnvelopeKind::Caratheodory: {
                // chain (1-r)/(1+r) <= Re d_s f <= ||d_s f|| <= (1+r)/(1-r);
                // the envelope members are the outer two
                const Quaternion d = evaluate(evaluated, q);
                const double lower_slack = d.w - (1.0 - r) / (1.0 + r);
                const double upper_slack = (1.0 + r) / (1.0 - r) - norm(d);
                lower_track.observe(lower_slack, q);
                upper_track.observe(upper_slack, q);
                all_track.observe(std::min(lower_slack, upper_slack), q);
                return;
            }
            case EnvelopeKind::Distortion:
                value = norm(evaluate(evaluated, q));
                lower = (1.0 - r) / std::pow(1.0 + r, 3);
                upper = (1.0 + r) / std::pow(1.0 - r, 3);
                break;
            case EnvelopeKind::Growth:
                value = norm(evaluate(evaluated, q));
                lower = r / std::pow(1.0 + r, 2);
                upper = r / std::pow(1.0 - r, 2);
                break;
            case EnvelopeKind::RotationRatio:
                value = norm(evaluate(evaluated, q));
                lower = (1.0 - r) / (1.0 + r);
                upper = (1.0 + r) / (1.0 - r);
                break;
        }
        lower_track.observe(value - lower, q);
        upper_track.observe(upper - value, q);
        all_track.observe(std::min(value - lower, upper - value), q);
    });

    detail::finish(report, all_track);
    report.skipped_truncated = skipped;
    report.slacks.emplace_back("lower-envelope", lower_track.min_slack);
    report.slacks.emplace_back("upper-envelope", upper_track.min_slack);
    return report;
}

/// Integral mean bound r int_0^{2pi} ||d_s f(r e^{I theta})|| dtheta <= 2 pi r (1+r)/(1-r)^2
/// by periodic trapezoidal quadrature at `resolution` nodes.
inline BoundReport integral_mean_bound(const TruncatedSeries& f, const UnitImaginary& I, double r,
                                       int resolution, double tol = kVerifyTol)
{
    if (!(r > 0.0 && r < 1.0) || resolution < 2)
        throw DomainFault(Fault::ParameterOutOfRange, "integral mean needs 0 < r < 1 and resolution >= 2");
    detail::require_class_sn(f, "integral_mean_bound");
    const TruncatedSeries df = slice_derivative(f);
    const double two_pi = 2.0 * std::acos(-1.0);
    double sum = 0.0;
    for (int k = 0; k < resolution; ++k) {
        const double th = two_pi * static_cast<double>(k) / resolution;
        sum += norm(evaluate(df, embed_slice(r * std::cos(th), r * std::sin(th), I)));
    }
    const double integral = r * sum * (two_pi / resolution);
    const double bound = two_pi * r * (1.0 + r) / std::pow(1.0 - r, 2);

    BoundReport report;
    report.bound_kind = "integral-mean";
    report.tol = tol;
    report.r = r;
    report.unit = I;
    report.hypotheses.push_back({"univalence (class S)", HypothesisStatus::Asserted, true});
    report.hypotheses.push_back(
        {"truncation-tail", HypothesisStatus::Checked, truncation_tail_bound(df, r) <= tol});
    detail::SlackTracker t;
    t.observe(bound - integral, embed_slice(r, 0.0, I));
    t.observed = resolution;
    detail::finish(report, t);
    report.slacks.emplace_back("integral-mean", bound - integral);
    return report;
}

/// Sampled covering statement behind the quarter theorem: on every grid radius r
/// the image of the sphere ||q|| = r stays outside the ball of radius r/(1+r)^2,
/// whose r -> 1 limit is the Koebe quarter.
inline BoundReport koebe_quarter(const TruncatedSeries& f, const SampleGrid& grid, double tol = kVerifyTol)
{
    detail::require_class_sn(f, "koebe_quarter");
    BoundReport report;
    report.bound_kind = "koebe-quarter";
    report.tol = tol;
    report.hypotheses.push_back({"univalence (class S)", HypothesisStatus::Asserted, true});

    detail::SlackTracker t;
    long skipped = 0;
    grid.for_each_point([&](const Quaternion& q, const UnitImaginary&, double r) {
        if (truncation_tail_bound(f, r) > tol) {
            ++skipped;
            return;
        }
        t.observe(norm(evaluate(f, q)) - r / std::pow(1.0 + r, 2), q);
    });
    detail::finish(report, t);
    report.skipped_truncated = skipped;
    return report;
}

/// Laurent tail of q + sum_{n>=0} q^{-n} a_n on ||q|| > 1.
struct LaurentTail {
    std::vector<Quaternion> coeffs; // a_0 .. a_M, M >= 1

    explicit LaurentTail(std::vector<Quaternion> c) : coeffs(std::move(c))
    {
        if (coeffs.size() < 2)
            throw DomainFault(Fault::ParameterOutOfRange, "a Laurent tail needs coefficients a_0..a_M, M >= 1");
        for (const auto& a : coeffs)
            if (!is_finite(a))
                throw DomainFault(Fault::ParameterOutOfRange, "Laurent tail coefficients must be finite");
    }
};

struct AreaComparison {
    double formula_value = 0.0; // pi (2 - sum n ||a_n||^2)
    double oracle_value = 0.0;  // Green's-theorem contour areas of the two split images
};

namespace detail {

inline double shoelace_area(const std::vector<std::complex<double>>& curve)
{
    double twice = 0.0;
    for (size_t k = 0; k < curve.size(); ++k) {
        const auto& a = curve[k];
        const auto& b = curve[(k + 1) % curve.size()];
        twice += a.real() * b.imag() - b.real() * a.imag();
    }
    return 0.5 * std::abs(twice);
}

inline double orient(const std::complex<double>& a, const std::complex<double>& b,
                     const std::complex<double>& c)
{
    return (b.real() - a.real()) * (c.imag() - a.imag()) - (b.imag() - a.imag()) * (c.real() - a.real());
}

inline bool segments_cross(const std::complex<double>& p1, const std::complex<double>& p2,
                           const std::complex<double>& p3, const std::complex<double>& p4)
{
    const double d1 = orient(p3, p4, p1);
    const double d2 = orient(p3, p4, p2);
    const double d3 = orient(p1, p2, p3);
    const double d4 = orient(p1, p2, p4);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

// The closed polyline through the samples must be simple: transversal
// self-crossings refute the univalence hypothesis conclusively at sample scale,
// and far-in-parameter near-coincidences catch tangential contact.
inline bool curve_is_sampled_simple(const std::vector<std::complex<double>>& curve)
{
    const int n = static_cast<int>(curve.size());
    const int gap_min = std::max(1, n / 64);
    for (int a = 0; a < n; ++a) {
        const auto& a0 = curve[static_cast<size_t>(a)];
        const auto& a1 = curve[static_cast<size_t>((a + 1) % n)];
        for (int b = a + 1; b < n; ++b) {
            const int gap = std::min(b - a, n - (b - a));
            if (gap > 1 && segments_cross(a0, a1, curve[static_cast<size_t>(b)],
                                          curve[static_cast<size_t>((b + 1) % n)]))
                return false;
            if (gap >= gap_min && std::abs(a0 - curve[static_cast<size_t>(b)]) <= 1e-6)
                return false;
        }
    }
    return true;
}

} // namespace detail

/// Area Theorem, both routes: the closed formula pi (2 - sum n ||a_n||^2) against a
/// Green's-theorem contour oracle over the images of the unit circle under the two
/// Splitting-Lemma components f_1 and identity + f_2 on slice I.
inline AreaComparison area_complement(const LaurentTail& tail, const UnitImaginary& I,
                                      int boundary_resolution)
{
    if (boundary_resolution < 16)
        throw DomainFault(Fault::ParameterOutOfRange, "boundary resolution too small");
    const UnitImaginary J = orthogonal_unit(I);
    const SplitPair split = split_coefficients(TruncatedSeries(tail.coeffs), I, J);

    double weighted_sum = 0.0;
    for (size_t n = 1; n < tail.coeffs.size(); ++n)
        weighted_sum += static_cast<double>(n) * norm_sq(tail.coeffs[n]);
    const double pi = std::acos(-1.0);

    const auto boundary_curve = [&](const std::vector<std::complex<double>>& c) {
        std::vector<std::complex<double>> curve(static_cast<size_t>(boundary_resolution));
        for (int k = 0; k < boundary_resolution; ++k) {
            const double th = 2.0 * pi * static_cast<double>(k) / boundary_resolution;
            const std::complex<double> z(std::cos(th), std::sin(th));
            std::complex<double> v = z;
            std::complex<double> z_inv_pow(1.0, 0.0);
            for (size_t n = 0; n < c.size(); ++n) {
                v += z_inv_pow * c[n];
                z_inv_pow /= z;
            }
            curve[static_cast<size_t>(k)] = v;
        }
        return curve;
    };

    const auto curve1 = boundary_curve(split.f1);
    const auto curve2 = boundary_curve(split.f2);
    if (!detail::curve_is_sampled_simple(curve1))
        throw HypothesisFault(Hypothesis::HypothesisFailed,
                              "f_1 is not injective on the sampled boundary circle");
    if (!detail::curve_is_sampled_simple(curve2))
        throw HypothesisFault(Hypothesis::HypothesisFailed,
                              "identity + f_2 is not injective on the sampled boundary circle");

    return {pi * (2.0 - weighted_sum), detail::shoelace_area(curve1) + detail::shoelace_area(curve2)};
}

enum class CoeffBoundKind { AreaSum, Bieberbach, StarlikeCoeff, ConvexCoeff };

inline const char* coeff_bound_name(CoeffBoundKind k)
{
    switch (k) {
        case CoeffBoundKind::AreaSum: return "area-sum";
        case CoeffBoundKind::Bieberbach: return "bieberbach";
        case CoeffBoundKind::StarlikeCoeff: return "starlike-coeff";
        case CoeffBoundKind::ConvexCoeff: return "convex-coeff";
    }
    return "unknown";
}

/// Coefficient inequalities. AreaSum reads the coefficients as a Laurent tail and
/// checks sum n ||a_n||^2 <= 2 plus ||a_1|| <= sqrt(2); the others expect a
/// normalized series and check ||a_n|| <= n (Bieberbach/starlike) or <= 1 (convex)
/// for n >= 2. Class membership itself is the caller's assertion, except the
/// V-class coefficient-plane condition which is decidable and decided.
inline BoundReport coefficient_bounds(const TruncatedSeries& f, CoeffBoundKind kind, double tol = 0.0)
{
    BoundReport report;
    report.bound_kind = coeff_bound_name(kind);
    report.tol = tol;
    detail::SlackTracker t;
    switch (kind) {
        case CoeffBoundKind::AreaSum: {
            double weighted = 0.0;
            for (int n = 1; n <= f.degree(); ++n)
                weighted += static_cast<double>(n) * norm_sq(f.coeff(n));
            t.observe(2.0 - weighted, f.coeff(1));
            t.observe(std::sqrt(2.0) - norm(f.coeff(1)), f.coeff(1));
            report.hypotheses.push_back({"exterior univalence", HypothesisStatus::Asserted, true});
            report.slacks.emplace_back("area-sum", 2.0 - weighted);
            report.slacks.emplace_back("first-coefficient", std::sqrt(2.0) - norm(f.coeff(1)));
            break;
        }
        case CoeffBoundKind::Bieberbach: {
            require_normalized(f, "coefficient_bounds");
            const bool common_plane = classify(f).kind != SeriesKind::General;
            report.hypotheses.push_back({"coefficients-in-one-plane (class V)", HypothesisStatus::Checked,
                                         common_plane});
            if (!common_plane)
                throw HypothesisFault(Hypothesis::HypothesisFailed,
                                      "coefficients do not lie in a common plane C_I");
            report.hypotheses.push_back({"univalence", HypothesisStatus::Asserted, true});
            for (int n = 2; n <= f.degree(); ++n)
                t.observe(static_cast<double>(n) - norm(f.coeff(n)), f.coeff(n));
            break;
        }
        case CoeffBoundKind::StarlikeCoeff: {
            require_normalized(f, "coefficient_bounds");
            report.hypotheses.push_back({"starlike", HypothesisStatus::Asserted, true});
            for (int n = 2; n <= f.degree(); ++n)
                t.observe(static_cast<double>(n) - norm(f.coeff(n)), f.coeff(n));
            break;
        }
        case CoeffBoundKind::ConvexCoeff: {
            require_normalized(f, "coefficient_bounds");
            report.hypotheses.push_back({"convex", HypothesisStatus::Asserted, true});
            for (int n = 2; n <= f.degree(); ++n)
                t.observe(1.0 - norm(f.coeff(n)), f.coeff(n));
            break;
        }
    }
    detail::finish(report, t);
    return report;
}

/// Rogosinski inequality for f subordinate to g: partial sums of squared
/// coefficient norms of f never exceed those of g.
inline BoundReport rogosinski(const TruncatedSeries& f, const TruncatedSeries& g, double tol = 1e-12)
{
    BoundReport report;
    report.bound_kind = "rogosinski";
    report.tol = tol;
    report.hypotheses.push_back({"f subordinate to g (intrinsic w)", HypothesisStatus::Asserted, true});
    detail::SlackTracker t;
    double sum_f = 0.0;
    double sum_g = 0.0;
    const int top = std::max(f.degree(), g.degree());
    for (int n = 1; n <= top; ++n) {
        sum_f += norm_sq(f.coeff(n));
        sum_g += norm_sq(g.coeff(n));
        t.observe(sum_g - sum_f, f.coeff(n));
    }
    detail::finish(report, t);
    return report;
}

enum class NormKind { MInf, MP, MInfSlice, MPSlice };

namespace detail {

// Paper parametrization of the sphere ||q|| = r: theta1, theta2 in [0, 2pi),
// theta3 in [0, pi]; surface element r^3 sin^2(theta1) |sin(theta2)|.
template <typename Fn>
inline void for_each_sphere_node(double r, int resolution, Fn&& fn)
{
    const double pi = std::acos(-1.0);
    const int n1 = resolution;
    const int n2 = resolution;
    const int n3 = resolution / 2 + 1;
    const double d1 = 2.0 * pi / n1;
    const double d2 = 2.0 * pi / n2;
    const double d3 = pi / (n3 - 1);
    for (int i = 0; i < n1; ++i) {
        const double th1 = d1 * i;
        for (int j = 0; j < n2; ++j) {
            const double th2 = d2 * j;
            for (int k = 0; k < n3; ++k) {
                const double th3 = d3 * k;
                const Quaternion q{r * std::cos(th1), r * std::sin(th1) * std::cos(th2),
                                   r * std::sin(th1) * std::sin(th2) * std::cos(th3),
                                   r * std::sin(th1) * std::sin(th2) * std::sin(th3)};
                const double trap = (k == 0 || k == n3 - 1) ? 0.5 : 1.0;
                const double jac = r * r * r * std::pow(std::sin(th1), 2) * std::abs(std::sin(th2));
                fn(q, jac * trap * d1 * d2 * d3);
            }
        }
    }
}

} // namespace detail

/// Maximum-modulus and p-mean norms. The slice variants quadrate the circle
/// r e^{I theta}; MInf/MP sample the whole sphere through the defining spherical
/// parametrization, and MP keeps its 1/(4 pi) normalization verbatim
/// (the parametrized measure totals 4 pi^2 r^3, reported by mp_measure_total).
inline double m_norm(const TruncatedSeries& f, NormKind kind, double r, int resolution, double p = 2.0,
                     const UnitImaginary& I = default_unit())
{
    if (!(r >= 0.0 && r < 1.0))
        throw DomainFault(Fault::ParameterOutOfRange, "m_norm needs 0 <= r < 1");
    if ((kind == NormKind::MP || kind == NormKind::MPSlice) && !(p >= 1.0))
        throw DomainFault(Fault::ParameterOutOfRange, "m_norm needs p >= 1");
    if (resolution < 2)
        throw DomainFault(Fault::ParameterOutOfRange, "m_norm needs resolution >= 2");
    const double two_pi = 2.0 * std::acos(-1.0);
    switch (kind) {
        case NormKind::MInfSlice: {
            double worst = 0.0;
            for (int k = 0; k < resolution; ++k) {
                const double th = two_pi * k / resolution;
                worst = std::max(worst, norm(evaluate(f, embed_slice(r * std::cos(th), r * std::sin(th), I))));
            }
            return worst;
        }
        case NormKind::MPSlice: {
            double acc = 0.0;
            for (int k = 0; k < resolution; ++k) {
                const double th = two_pi * k / resolution;
                acc += std::pow(norm(evaluate(f, embed_slice(r * std::cos(th), r * std::sin(th), I))), p);
            }
            return std::pow(acc / resolution, 1.0 / p);
        }
        case NormKind::MInf: {
            double worst = 0.0;
            detail::for_each_sphere_node(r, resolution, [&](const Quaternion& q, double) {
                worst = std::max(worst, norm(evaluate(f, q)));
            });
            return worst;
        }
        case NormKind::MP: {
            double acc = 0.0;
            detail::for_each_sphere_node(r, resolution, [&](const Quaternion& q, double w) {
                acc += std::pow(norm(evaluate(f, q)), p) * w;
            });
            return std::pow(acc / (2.0 * two_pi), 1.0 / p);
        }
    }
    return 0.0;
}

/// Total mass of the defining sphere parametrization at radius r (for re-normalizing MP).
inline double mp_measure_total(double r)
{
    const double pi = std::acos(-1.0);
    return 4.0 * pi * pi * r * r * r;
}

/// Subordination certificate produced by build_subordinate.
struct Subordination {
    TruncatedSeries f; // g composed with w
    TruncatedSeries g;
    TruncatedSeries w;
    bool schwarz_sampled = false; // intrinsic w passed the sampled Schwarz bound
};

/// f = g . w with the subordination hypotheses sampled: w(0) = 0 always; for
/// intrinsic w the Schwarz consequence ||w(q)|| <= ||q|| on the grid, otherwise
/// plain boundedness ||w(q)|| < 1.
inline Subordination build_subordinate(const TruncatedSeries& g, const TruncatedSeries& w,
                                       const SampleGrid& grid, double tol = kVerifyTol)
{
    if (norm(w.coeff(0)) > kZeroEpsilon)
        throw DomainFault(Fault::NonzeroConstantTerm, "subordination needs w(0) = 0");
    const bool intrinsic = is_intrinsic(w);
    grid.for_each_point([&](const Quaternion& q, const UnitImaginary&, double) {
        const double wq = norm(evaluate(w, q));
        if (intrinsic) {
            if (wq > norm(q) + tol)
                throw HypothesisFault(Hypothesis::SchwarzViolation,
                                      "||w(q)|| exceeds ||q|| on the sample grid");
        } else if (wq >= 1.0) {
            throw HypothesisFault(Hypothesis::HypothesisFailed, "||w(q)|| reaches 1 on the sample grid");
        }
    });
    return {bullet_compose(g, w, std::max(g.degree(), w.degree())), g, w, intrinsic};
}

/// The four norm inequalities of the subordination theorem plus the derivative
/// bound at 0, each reported with its own slack:
///   M_{inf,I}(r,f) <= sqrt(2) M_{inf,I}(r,g)          M_{p,I}(r,f) <= 2^{p+1} M_{p,I}(r,g)
///   M_inf(r,f) <= sqrt(2) M_{inf,I}(r,g)              M_p(r,f) <= 2^{2p+2} pi^2 M_{p,I}(r,g)
///   ||d_s f(0)|| <= ||d_s g(0)||
inline BoundReport subordination_suite(const TruncatedSeries& f, const TruncatedSeries& g,
                                       const UnitImaginary& I, double r, double p, int resolution = 64,
                                       double tol = 1e-9)
{
    if (norm(f.coeff(0) - g.coeff(0)) > 1e-10)
        throw DomainFault(Fault::ParameterOutOfRange, "subordination needs f(0) = g(0)");
    BoundReport report;
    report.bound_kind = "subordination";
    report.tol = tol;
    report.r = r;
    report.p = p;
    report.unit = I;
    report.hypotheses.push_back({"f I-subordinate to g", HypothesisStatus::Asserted, true});

    const double pi = std::acos(-1.0);
    const double minf_i_f = m_norm(f, NormKind::MInfSlice, r, resolution, p, I);
    const double minf_i_g = m_norm(g, NormKind::MInfSlice, r, resolution, p, I);
    const double mp_i_f = m_norm(f, NormKind::MPSlice, r, resolution, p, I);
    const double mp_i_g = m_norm(g, NormKind::MPSlice, r, resolution, p, I);
    const double minf_f = m_norm(f, NormKind::MInf, r, resolution, p, I);
    const double minf_g = m_norm(g, NormKind::MInf, r, resolution, p, I);
    const double mp_f = m_norm(f, NormKind::MP, r, resolution, p, I);

    detail::SlackTracker t;
    const Quaternion at = embed_slice(r, 0.0, I);
    const auto push = [&](const char* name, double slack) {
        report.slacks.emplace_back(name, slack);
        t.observe(slack, at);
    };
    push("m-inf-slice", std::sqrt(2.0) * minf_i_g - minf_i_f);
    push("m-p-slice", std::pow(2.0, p + 1.0) * mp_i_g - mp_i_f);
    push("m-inf-ball-vs-slice", std::sqrt(2.0) * minf_i_g - minf_f);
    push("m-inf-ball-vs-ball", std::sqrt(2.0) * minf_g - minf_f);
    push("m-p-ball", std::pow(2.0, 2.0 * p + 2.0) * pi * pi * mp_i_g - mp_f);
    push("derivative-at-zero", norm(g.coeff(1)) - norm(f.coeff(1)));
    detail::finish(report, t);
    return report;
}

/// Moebius-transport bounds: for each sampled t in (-delta, delta),
///   ||d_s f(t)|| <= sqrt(2)/(1-t^2)    and
///   ||-2 t d_s f(t) + (1-t^2) d_s^2 f(t)|| <= 1/(1-t^2).
inline BoundReport t_transform_bounds(const TruncatedSeries& f, double delta, int samples,
                                      double tol = kVerifyTol)
{
    if (!(delta > 0.0 && delta < 1.0) || samples < 1)
        throw DomainFault(Fault::ParameterOutOfRange, "t_transform_bounds needs delta in (0,1), samples >= 1");
    BoundReport report;
    report.bound_kind = "t-transform";
    report.tol = tol;
    report.hypotheses.push_back({"split components univalent after T_t", HypothesisStatus::Asserted, true});

    const TruncatedSeries df = slice_derivative(f);
    const TruncatedSeries d2f = slice_derivative(df);
    detail::SlackTracker first_track, second_track, all_track;
    for (int k = 0; k < samples; ++k) {
        const double t = -delta + 2.0 * delta * (k + 0.5) / samples;
        const Quaternion qt = Quaternion::real(t);
        const double one_minus = 1.0 - t * t;
        const Quaternion d1 = evaluate(df, qt);
        const Quaternion d2 = evaluate(d2f, qt);
        const double s1 = std::sqrt(2.0) / one_minus - norm(d1);
        const double s2 = 1.0 / one_minus - norm(d1 * (-2.0 * t) + d2 * one_minus);
        first_track.observe(s1, qt);
        second_track.observe(s2, qt);
        all_track.observe(std::min(s1, s2), qt);
    }
    detail::finish(report, all_track);
    report.slacks.emplace_back("first-derivative", first_track.min_slack);
    report.slacks.emplace_back("transported-second", second_track.min_slack);
    return report;
}

} // namespace slicereg
