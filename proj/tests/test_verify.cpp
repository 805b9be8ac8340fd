#include "doctest.h"

#include "oracles.hpp"
#include "slicereg/maps.hpp"
#include "slicereg/verify.hpp"

using namespace slicereg;

namespace {
const Quaternion qi{0, 1, 0, 0};
const Quaternion qj{0, 0, 1, 0};
} // namespace

TEST_CASE("truncation tail bound distinguishes polynomials from truncated series")
{
    CHECK(truncation_tail_bound(TruncatedSeries::identity(8), 0.9) == 0.0);
    CHECK(truncation_tail_bound(koebe(32), 0.9) > 1e-3);
    CHECK(truncation_tail_bound(koebe(32), 0.5) < 1e-6);
}

TEST_CASE("identity passes every envelope with strictly positive tightness")
{
    const auto f = TruncatedSeries::identity(8);
    const auto grid = SampleGrid::standard();
    for (const auto kind : {EnvelopeKind::Caratheodory, EnvelopeKind::Distortion, EnvelopeKind::Growth,
                            EnvelopeKind::RotationRatio}) {
        const auto report = verify_envelope(f, kind, grid);
        CHECK(report.passed);
        CHECK(report.tightness > 1e-3);
        CHECK(report.skipped_truncated == 0);
    }
}

TEST_CASE("caratheodory envelope is tight for the extremal function")
{
    const auto f = caratheodory_extremal(0.0, UnitImaginary::i(), 128);
    const auto report = verify_envelope(f, EnvelopeKind::Caratheodory, SampleGrid::standard());
    CHECK(report.passed);
    CHECK(std::abs(report.tightness) < kTightnessThreshold);
    // both envelope members touch: the lower at q = -r, the upper at q = +r
    CHECK(vec_norm(report.witness) < 1e-12);
    REQUIRE(report.slacks.size() == 2);
    CHECK(std::abs(report.slacks[0].second) < kTightnessThreshold);
    CHECK(std::abs(report.slacks[1].second) < kTightnessThreshold);
    REQUIRE(!report.hypotheses.empty());
    CHECK(report.hypotheses[0].status == HypothesisStatus::Sampled);
}

TEST_CASE("growth envelope is tight for koebe at the kept contact radius")
{
    const auto report = verify_envelope(koebe(32), EnvelopeKind::Growth, SampleGrid::standard());
    CHECK(report.passed);
    CHECK(std::abs(report.tightness) < kTightnessThreshold);
    CHECK(report.witness.w == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(report.skipped_truncated > 0);
}

TEST_CASE("distortion envelope is tight for koebe")
{
    const auto report = verify_envelope(koebe(128), EnvelopeKind::Distortion, SampleGrid::standard());
    CHECK(report.passed);
    CHECK(std::abs(report.tightness) < kTightnessThreshold);
    CHECK(report.witness.w < 0.0);
}

TEST_CASE("rotation ratio envelope is tight for koebe")
{
    const auto report = verify_envelope(koebe(64), EnvelopeKind::RotationRatio, SampleGrid::standard());
    CHECK(report.passed);
    CHECK(std::abs(report.tightness) < kTightnessThreshold);
}

TEST_CASE("envelope preconditions")
{
    const auto grid = SampleGrid::standard();
    CHECK_THROWS_AS((void)verify_envelope(geometric(8), EnvelopeKind::Growth, grid), DomainFault);

    TruncatedSeries not_intrinsic(2);
    not_intrinsic.at(1) = Quaternion::one();
    not_intrinsic.at(2) = qj * 0.1;
    CHECK_THROWS_AS((void)verify_envelope(not_intrinsic, EnvelopeKind::Growth, grid), DomainFault);

    TruncatedSeries wild(2);
    wild.at(1) = Quaternion::one();
    wild.at(2) = Quaternion::real(2); // Re d_s f changes sign
    CHECK_THROWS_AS((void)verify_envelope(wild, EnvelopeKind::Caratheodory, grid), HypothesisFault);
}

TEST_CASE("integral mean bound")
{
    const auto id_report = integral_mean_bound(TruncatedSeries::identity(4), UnitImaginary::i(), 0.5, 128);
    CHECK(id_report.passed);
    const double two_pi = 2.0 * std::acos(-1.0);
    // for f = q the integral is exactly 2 pi r
    CHECK(id_report.slacks[0].second ==
          doctest::Approx(two_pi * 0.5 * 1.5 / 0.25 - two_pi * 0.5).epsilon(1e-10));

    const auto k = koebe(64);
    const auto report = integral_mean_bound(k, UnitImaginary::i(), 0.5, 256);
    CHECK(report.passed);

    // quadrature refinement at r = 0.9; degree 256 keeps the integrand smooth there
    const auto k_long = koebe(256);
    const auto fine = integral_mean_bound(k_long, UnitImaginary::j(), 0.9, 1024);
    const auto coarse = integral_mean_bound(k_long, UnitImaginary::j(), 0.9, 512);
    CHECK(std::abs(fine.slacks[0].second - coarse.slacks[0].second) < 1e-8);

    CHECK_THROWS_AS((void)integral_mean_bound(k, UnitImaginary::i(), 1.5, 64), DomainFault);
}

TEST_CASE("koebe quarter covering")
{
    CHECK(koebe_quarter(TruncatedSeries::identity(4), SampleGrid::standard()).passed);
    CHECK(koebe_quarter(caratheodory_extremal(0.0, UnitImaginary::i(), 128), SampleGrid::standard()).passed);

    const auto report = koebe_quarter(koebe(64), SampleGrid::standard());
    CHECK(report.passed);
    CHECK(std::abs(report.tightness) < kTightnessThreshold);

    // near the boundary: at r = 0.99 the sampled minimum stays above 0.2487
    auto grid = SampleGrid::make({0.99}, 64, 4, 3);
    const auto near_boundary = koebe_quarter(koebe(4096), grid, 1e-3);
    CHECK(near_boundary.passed);
    const double bound = 0.99 / (1.99 * 1.99);
    CHECK(bound + near_boundary.tightness >= 0.2487);
    CHECK(near_boundary.skipped_truncated == 0);
}

TEST_CASE("area theorem: formula versus contour oracle")
{
    // all a_n = 0: two unit disks, 2 pi on both routes
    const LaurentTail trivial({Quaternion::zero(), Quaternion::zero()});
    const auto t0 = area_complement(trivial, UnitImaginary::i(), 4096);
    const double pi = std::acos(-1.0);
    CHECK(t0.formula_value == doctest::Approx(2 * pi).epsilon(1e-12));
    CHECK(std::abs(t0.formula_value - t0.oracle_value) / t0.formula_value < 0.01);

    // f = q + q^{-1} a: formula pi (2 - ||a||^2)
    const LaurentTail half({Quaternion::zero(), Quaternion::real(0.5)});
    const auto t1 = area_complement(half, UnitImaginary::i(), 4096);
    CHECK(t1.formula_value == doctest::Approx(pi * (2 - 0.25)).epsilon(1e-12));
    CHECK(std::abs(t1.formula_value - t1.oracle_value) / t1.formula_value < 0.01);

    const LaurentTail mixed({Quaternion::zero(), qi * 0.5, qj * 0.25});
    const auto t2 = area_complement(mixed, UnitImaginary::i(), 4096);
    CHECK(t2.formula_value == doctest::Approx(pi * (2 - (0.25 + 2 * 0.0625))).epsilon(1e-12));
    CHECK(std::abs(t2.formula_value - t2.oracle_value) / t2.formula_value < 0.01);

    // a tail with weighted coefficient mass close to the theorem's ceiling
    const LaurentTail heavy({Quaternion::zero(), Quaternion::real(0.9), qj * 0.35});
    const auto t3 = area_complement(heavy, UnitImaginary::i(), 4096);
    CHECK(t3.formula_value == doctest::Approx(pi * (2 - (0.81 + 2 * 0.1225))).epsilon(1e-12));
    CHECK(std::abs(t3.formula_value - t3.oracle_value) / t3.formula_value < 0.01);

    // random tails with sum n ||a_n|| < 1 keep both split curves univalent
    oracles::TestRng rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Quaternion> coeffs(5, Quaternion::zero());
        for (size_t n = 1; n < coeffs.size(); ++n)
            coeffs[n] = rng.quaternion(0.1 / static_cast<double>(n * n));
        const auto cmp = area_complement(LaurentTail(coeffs), UnitImaginary::k(), 4096);
        CHECK(std::abs(cmp.formula_value - cmp.oracle_value) / cmp.formula_value < 0.01);
    }

    // a self-crossing boundary curve refutes the sampled univalence hypothesis
    const LaurentTail trefoil({Quaternion::zero(), Quaternion::zero(), Quaternion::real(2)});
    CHECK_THROWS_AS((void)area_complement(trefoil, UnitImaginary::i(), 1024), HypothesisFault);
}

TEST_CASE("coefficient bounds")
{
    const auto bieberbach = coefficient_bounds(koebe(128), CoeffBoundKind::Bieberbach);
    CHECK(bieberbach.passed);
    CHECK(bieberbach.tightness == 0.0);

    const auto starlike = coefficient_bounds(koebe(64), CoeffBoundKind::StarlikeCoeff);
    CHECK(starlike.passed);
    CHECK(starlike.tightness == 0.0);

    // q(1-q)^{-1} = q + q^2 + ... attains the convex bound with equality
    const auto convex = coefficient_bounds(shift_up(geometric(15)), CoeffBoundKind::ConvexCoeff);
    CHECK(convex.passed);
    CHECK(convex.tightness == 0.0);

    TruncatedSeries tail(2);
    tail.at(1) = Quaternion::one();
    const auto area_ok = coefficient_bounds(tail, CoeffBoundKind::AreaSum);
    CHECK(area_ok.passed);
    CHECK(area_ok.tightness == doctest::Approx(std::sqrt(2.0) - 1.0));

    TruncatedSeries big(1);
    big.at(1) = Quaternion::real(1.5);
    const auto area_bad = coefficient_bounds(big, CoeffBoundKind::AreaSum);
    CHECK_FALSE(area_bad.passed);
    CHECK(area_bad.max_violation == doctest::Approx(0.25));

    TruncatedSeries two_planes(2);
    two_planes.at(1) = Quaternion::one();
    two_planes.at(2) = qi + qj; // fine: one plane
    two_planes.at(2) = qi;
    two_planes.at(0) = Quaternion::zero();
    TruncatedSeries general(3);
    general.at(1) = Quaternion::one();
    general.at(2) = qi;
    general.at(3) = qj;
    CHECK_THROWS_AS((void)coefficient_bounds(general, CoeffBoundKind::Bieberbach), HypothesisFault);
}

TEST_CASE("rogosinski partial sums")
{
    oracles::TestRng rng(62);
    const auto g = rng.series(24);
    const auto equal = rogosinski(g, g);
    CHECK(equal.passed);
    CHECK(equal.tightness == 0.0);

    const auto k = koebe(32);
    const auto f = bullet_compose(k, TruncatedSeries::monomial(1, Quaternion::real(0.5), 32), 32);
    const auto strict = rogosinski(f, k);
    CHECK(strict.passed);
    CHECK(strict.tightness > 0.5); // first partial sum already leaves 1 - 1/4

    Quaternion lambda = rng.quaternion();
    lambda = lambda * (1.0 / norm(lambda));
    const auto rotated = rogosinski(TruncatedSeries::monomial(1, lambda, 4), TruncatedSeries::identity(4));
    CHECK(rotated.passed);
    CHECK(std::abs(rotated.tightness) < 1e-12);
}

TEST_CASE("m norms")
{
    const auto f = TruncatedSeries::identity(4);
    CHECK(m_norm(f, NormKind::MInfSlice, 0.7, 128) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(m_norm(f, NormKind::MPSlice, 0.7, 128, 2.0) == doctest::Approx(0.7).epsilon(1e-12));

    // koebe attains its slice max on the positive real axis: r/(1-r)^2
    const auto k = koebe(64);
    CHECK(m_norm(k, NormKind::MInfSlice, 0.5, 256, 2.0, UnitImaginary::j()) ==
          doctest::Approx(2.0).epsilon(1e-6));

    // p-mean quadrature converges under refinement
    const auto poly = koebe(16);
    const double coarse = m_norm(poly, NormKind::MPSlice, 0.9, 256, 2.0);
    const double fine = m_norm(poly, NormKind::MPSlice, 0.9, 512, 2.0);
    CHECK(std::abs(coarse - fine) < 1e-8);

    // the sphere max dominates the slice max
    CHECK(m_norm(k, NormKind::MInf, 0.5, 64) >= m_norm(k, NormKind::MInfSlice, 0.5, 64) - 1e-12);

    // the 1/(4 pi) normalization gives (pi r^{3+p})^{1/p} for f = q
    const double r = 0.6;
    const double p = 2.0;
    const double expected = std::pow(std::acos(-1.0) * std::pow(r, 3 + p), 1.0 / p);
    CHECK(m_norm(f, NormKind::MP, r, 64, p) == doctest::Approx(expected).epsilon(1e-3));
    CHECK(mp_measure_total(r) == doctest::Approx(4 * std::pow(std::acos(-1.0), 2) * r * r * r));

    CHECK_THROWS_AS((void)m_norm(f, NormKind::MP, 1.2, 64), DomainFault);
    CHECK_THROWS_AS((void)m_norm(f, NormKind::MP, 0.5, 64, 0.5), DomainFault);
}

TEST_CASE("build subordinate")
{
    const auto g = koebe(16);
    const auto grid = SampleGrid::standard();

    const auto trivial = build_subordinate(g, TruncatedSeries::identity(16), grid);
    CHECK(max_coeff_dist(trivial.f, g) == 0.0);
    CHECK(trivial.schwarz_sampled);

    const auto halved = build_subordinate(g, TruncatedSeries::monomial(1, Quaternion::real(0.5), 16), grid);
    for (int n = 1; n <= 16; ++n)
        CHECK(norm(halved.f.coeff(n) - g.coeff(n) * std::pow(0.5, n)) < 1e-14);

    const auto squared = build_subordinate(geometric(16), TruncatedSeries::monomial(2, Quaternion::one(), 16),
                                           grid);
    for (int n = 1; n <= 16; n += 2)
        CHECK(norm(squared.f.coeff(n)) == 0.0);

    CHECK_THROWS_AS((void)build_subordinate(g, TruncatedSeries::constant(Quaternion::real(0.5), 4), grid),
                    DomainFault);
    CHECK_THROWS_AS(
        (void)build_subordinate(g, TruncatedSeries::monomial(1, Quaternion::real(2), 4), grid),
        HypothesisFault);
    // non-intrinsic w only needs ||w|| < 1 on the grid
    const auto rotated = build_subordinate(g, TruncatedSeries::monomial(1, qj, 16), grid);
    CHECK_FALSE(rotated.schwarz_sampled);
    CHECK_THROWS_AS(
        (void)build_subordinate(g, TruncatedSeries::monomial(1, qj * 1.2, 4), grid),
        HypothesisFault);
}

TEST_CASE("subordination suite")
{
    const auto g = koebe(16);
    const auto same = subordination_suite(g, g, UnitImaginary::i(), 0.5, 2.0);
    CHECK(same.passed);
    for (const auto& [name, slack] : same.slacks)
        CHECK(slack >= -1e-12);

    const auto grid = SampleGrid::standard();
    const auto halved = build_subordinate(g, TruncatedSeries::monomial(1, Quaternion::real(0.5), 16), grid);
    const auto report = subordination_suite(halved.f, g, UnitImaginary::i(), 0.5, 2.0);
    CHECK(report.passed);
    REQUIRE(report.slacks.back().first == std::string("derivative-at-zero"));
    CHECK(report.slacks.back().second == doctest::Approx(0.5)); // 1 - 1/2

    // f = q lambda against g = q: derivative bound tight
    oracles::TestRng rng(63);
    Quaternion lambda = rng.quaternion();
    lambda = lambda * (1.0 / norm(lambda));
    const auto tight = subordination_suite(TruncatedSeries::monomial(1, lambda, 4),
                                           TruncatedSeries::identity(4), UnitImaginary::i(), 0.5, 2.0);
    CHECK(tight.passed);
    CHECK(std::abs(tight.slacks.back().second) < 1e-12);

    CHECK_THROWS_AS((void)subordination_suite(geometric(4), TruncatedSeries::identity(4),
                                              UnitImaginary::i(), 0.5, 2.0),
                    DomainFault);
}

TEST_CASE("t-transform bounds")
{
    const auto id = TruncatedSeries::identity(4);
    const auto report = t_transform_bounds(id, 0.9, 201);
    CHECK(report.passed);
    // second bound slack for f = q is 1/(1-t^2) - 2|t|, minimized near t = 0.45
    REQUIRE(report.slacks.size() == 2);
    CHECK(report.slacks[1].second > 0.2);
    CHECK(report.slacks[0].second > std::sqrt(2.0) - 1.0 - 1e-12);

    TruncatedSeries f(2);
    f.at(1) = Quaternion::one();
    f.at(2) = Quaternion::real(0.25);
    CHECK(t_transform_bounds(f, 0.5, 101).passed);

    CHECK_THROWS_AS((void)t_transform_bounds(id, 1.5, 10), DomainFault);
}
