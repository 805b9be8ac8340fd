#pragma once

#include <cstdint>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

inline constexpr std::uint64_t kDefaultSeed = 20250101;

namespace detail {

// splitmix64; chosen over <random> engines so regeneration is bit-identical
// across standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

} // namespace detail

/// Deterministic sampling of the unit ball by radii x angles x imaginary units;
/// the discrete stand-in for "for all q in B(0;1)".
struct SampleGrid {
    std::vector<double> radii;
    int angles_per_circle = 64;
    std::vector<UnitImaginary> units;
    std::uint64_t seed = kDefaultSeed;

    static SampleGrid make(std::vector<double> radii, int angles_per_circle, int unit_count,
                           std::uint64_t seed = kDefaultSeed)
    {
        if (radii.empty() || angles_per_circle < 1 || unit_count < 1)
            throw DomainFault(Fault::ParameterOutOfRange, "grid needs radii, angles and units");
        for (double r : radii)
            if (!(r > 0.0 && r < 1.0))
                throw DomainFault(Fault::ParameterOutOfRange, "grid radii must lie strictly inside (0,1)");
        SampleGrid g;
        g.radii = std::move(radii);
        g.angles_per_circle = angles_per_circle;
        g.seed = seed;
        g.units = generate_units(unit_count, seed);
        return g;
    }

    static SampleGrid standard(std::uint64_t seed = kDefaultSeed)
    {
        return make({0.1, 0.3, 0.5, 0.7, 0.9}, 64, 8, seed);
    }

    /// First four units are always i, j, k, (i+j+k)/sqrt(3); the rest are drawn
    /// uniformly on the sphere from the seed.
    static std::vector<UnitImaginary> generate_units(int count, std::uint64_t seed)
    {
        std::vector<UnitImaginary> units;
        units.reserve(static_cast<size_t>(count));
        const UnitImaginary fixed[] = {UnitImaginary::i(), UnitImaginary::j(), UnitImaginary::k(),
                                       UnitImaginary::diagonal()};
        for (int n = 0; n < count && n < 4; ++n)
            units.push_back(fixed[n]);
        detail::SplitMix64 rng(seed);
        const double two_pi = 2.0 * std::acos(-1.0);
        while (static_cast<int>(units.size()) < count) {
            const double u = 2.0 * rng.next_double() - 1.0;
            const double phi = two_pi * rng.next_double();
            const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
            units.push_back(UnitImaginary{s * std::cos(phi), s * std::sin(phi), u});
        }
        return units;
    }

    long points_per_slice() const { return static_cast<long>(radii.size()) * angles_per_circle; }

    long point_count() const { return points_per_slice() * static_cast<long>(units.size()); }

    /// Visits every grid point in the fixed order unit -> radius -> angle, so
    /// reductions are deterministic. fn(q, I, r).
    template <typename Fn>
    void for_each_point(Fn&& fn) const
    {
        const double two_pi = 2.0 * std::acos(-1.0);
        for (const auto& unit : units) {
            for (const double r : radii) {
                for (int k = 0; k < angles_per_circle; ++k) {
                    const double phi = two_pi * static_cast<double>(k) / angles_per_circle;
                    fn(embed_slice(r * std::cos(phi), r * std::sin(phi), unit), unit, r);
                }
            }
        }
    }
};

/// A deterministic unit orthogonal to I (completes I to a splitting basis).
inline UnitImaginary orthogonal_unit(const UnitImaginary& I)
{
    // cross I with the coordinate axis it is least aligned with
    const double ax = std::abs(I.x);
    const double ay = std::abs(I.y);
    const double az = std::abs(I.z);
    double ex = 0.0, ey = 0.0, ez = 0.0;
    if (ax <= ay && ax <= az)
        ex = 1.0;
    else if (ay <= az)
        ey = 1.0;
    else
        ez = 1.0;
    return UnitImaginary::normalized(I.y * ez - I.z * ey, I.z * ex - I.x * ez, I.x * ey - I.y * ex);
}

} // namespace slicereg
