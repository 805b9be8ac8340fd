#pragma once

#include <string>

#include "slicereg/sample_grid.hpp"
#include "slicereg/series.hpp"

namespace slicereg {

inline constexpr double kConditionTol = 1e-9;
inline constexpr double kSingularityEpsilon = 1e-10;
inline constexpr double kDefaultSeparation = 1e-3;

/// Pointwise positivity conditions evaluated on a sample grid. Strict "> 0"
/// statements are tested as margin > tol since floating point cannot witness
/// open conditions.
enum class Condition {
    PositiveDerivRealPart, // Re d_s f(q) > 0
    SliceStarlike,         // Re[f(q)^{-1} q d_s f(q)] > 0
    SliceConvex,           // Re[(d_s f(q))^{-1} q d_s^2 f(q)] + 1 > 0
    Spirallike,            // Re[e^{-I gamma} q d_s f(q) f(q)^{-1}] > 0
    BoundedRotation,       // |arg d_s f(q)| < pi/2
    PClassRatio,           // q d_s f * f^{-*} has positive real part on every slice disk
};

inline const char* condition_name(Condition c)
{
    switch (c) {
        case Condition::PositiveDerivRealPart: return "positive-deriv-real-part";
        case Condition::SliceStarlike: return "slice-starlike";
        case Condition::SliceConvex: return "slice-convex";
        case Condition::Spirallike: return "spirallike";
        case Condition::BoundedRotation: return "bounded-rotation";
        case Condition::PClassRatio: return "p-class-ratio";
    }
    return "unknown";
}

struct SpiralParams {
    double gamma = 0.0; // |gamma| < pi/2; lambda = e^{-i gamma} via this angle
};

struct ConditionReport {
    std::string condition;
    bool passed = false;
    double worst_margin = 0.0;
    Quaternion witness;
    Quaternion witness2;       // second point of the worst pair (injectivity only)
    bool pair_witness = false;
    long points_checked = 0;
    long skipped_singular = 0;
    double tol = kConditionTol;
};

inline ConditionReport check_condition(const TruncatedSeries& f, Condition cond, const SampleGrid& grid,
                                       double tol = kConditionTol, SpiralParams spiral = {})
{
    const bool needs_normalization = cond == Condition::SliceStarlike || cond == Condition::SliceConvex ||
                                     cond == Condition::Spirallike || cond == Condition::PClassRatio;
    if (needs_normalization)
        require_normalized(f, condition_name(cond));
    if (cond == Condition::Spirallike && !(std::abs(spiral.gamma) < std::acos(-1.0) / 2.0))
        throw DomainFault(Fault::ParameterOutOfRange, "spiral type needs |gamma| < pi/2");

    const TruncatedSeries df = slice_derivative(f);
    const TruncatedSeries d2f = slice_derivative(df);
    TruncatedSeries ratio(0);
    if (cond == Condition::PClassRatio)
        ratio = star_mul(df, star_inverse(shift_down(f)), f.degree());

    ConditionReport report;
    report.condition = condition_name(cond);
    report.tol = tol;
    double worst = std::numeric_limits<double>::infinity();
    Quaternion witness;
    long checked = 0;
    long skipped = 0;

    grid.for_each_point([&](const Quaternion& q, const UnitImaginary& I, double) {
        double value = 0.0;
        switch (cond) {
            case Condition::PositiveDerivRealPart: {
                value = evaluate(df, q).w;
                break;
            }
            case Condition::SliceStarlike: {
                const Quaternion fq = evaluate(f, q);
                if (norm(fq) <= kSingularityEpsilon) {
                    ++skipped;
                    return;
                }
                value = (inverse(fq) * q * evaluate(df, q)).w;
                break;
            }
            case Condition::SliceConvex: {
                const Quaternion dq = evaluate(df, q);
                if (norm(dq) <= kSingularityEpsilon) {
                    ++skipped;
                    return;
                }
                value = (inverse(dq) * q * evaluate(d2f, q)).w + 1.0;
                break;
            }
            case Condition::Spirallike: {
                const Quaternion fq = evaluate(f, q);
                if (norm(fq) <= kSingularityEpsilon) {
                    ++skipped;
                    return;
                }
                value = (unit_exp(I, -spiral.gamma) * q * evaluate(df, q) * inverse(fq)).w;
                break;
            }
            case Condition::BoundedRotation: {
                const Quaternion dq = evaluate(df, q);
                if (norm(dq) <= kSingularityEpsilon) {
                    ++skipped;
                    return;
                }
                value = std::acos(-1.0) / 2.0 - polar_form(dq).argument;
                break;
            }
            case Condition::PClassRatio: {
                value = evaluate(ratio, q).w;
                break;
            }
        }
        ++checked;
        if (value < worst) {
            worst = value;
            witness = q;
        }
    });

    report.points_checked = checked;
    report.skipped_singular = skipped;
    report.worst_margin = checked > 0 ? worst : 0.0;
    report.witness = witness;
    report.passed = checked > 0 && report.worst_margin > tol;
    return report;
}

/// Samples f on the slice disk D_I and flags pairs of points farther apart than
/// `separation` whose images land within separation/2 of each other. A failure is
/// conclusive up to the separation scale; a pass is only a sampling statement.
inline ConditionReport check_injectivity_slice(const TruncatedSeries& f, const UnitImaginary& I,
                                               const SampleGrid& grid,
                                               double separation = kDefaultSeparation)
{
    if (!(separation > 0.0))
        throw DomainFault(Fault::ParameterOutOfRange, "separation must be positive");
    std::vector<Quaternion> points;
    std::vector<Quaternion> images;
    points.reserve(static_cast<size_t>(grid.points_per_slice()));
    const double two_pi = 2.0 * std::acos(-1.0);
    for (const double r : grid.radii) {
        for (int k = 0; k < grid.angles_per_circle; ++k) {
            const double phi = two_pi * static_cast<double>(k) / grid.angles_per_circle;
            points.push_back(embed_slice(r * std::cos(phi), r * std::sin(phi), I));
        }
    }
    images.reserve(points.size());
    for (const auto& p : points)
        images.push_back(evaluate(f, p));

    ConditionReport report;
    report.condition = "injectivity";
    report.tol = separation;
    double worst = std::numeric_limits<double>::infinity();
    size_t wa = 0, wb = 0;
    long pairs = 0;
    for (size_t a = 0; a < points.size(); ++a) {
        for (size_t b = a + 1; b < points.size(); ++b) {
            if (norm(points[a] - points[b]) <= separation)
                continue;
            ++pairs;
            const double margin = norm(images[a] - images[b]) - separation / 2.0;
            if (margin < worst) {
                worst = margin;
                wa = a;
                wb = b;
            }
        }
    }
    report.points_checked = pairs;
    report.worst_margin = pairs > 0 ? worst : 0.0;
    if (pairs > 0) {
        report.witness = points[wa];
        report.witness2 = points[wb];
        report.pair_witness = true;
    }
    report.passed = report.worst_margin > 0.0;
    return report;
}

/// Point of the gamma-spiral s(t) = e^{-t lambda} w0 with lambda = e^{-i gamma}
/// acting by left multiplication: A(t) = e^{-t cos gamma}, B(t) = t sin gamma.
inline Quaternion spiral_curve(const SpiralParams& params, const Quaternion& w0, double t)
{
    if (!(std::abs(params.gamma) < std::acos(-1.0) / 2.0))
        throw DomainFault(Fault::ParameterOutOfRange, "spiral type needs |gamma| < pi/2");
    const double amp = std::exp(-t * std::cos(params.gamma));
    const double turn = t * std::sin(params.gamma);
    return (unit_exp(UnitImaginary::i(), turn) * w0) * amp;
}

} // namespace slicereg
