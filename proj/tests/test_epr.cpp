#include "doctest.h"

#include <cmath>
#include <numbers>

#include "qdn/epr.hpp"
#include "qdn/questions.hpp"
#include "qdn/random_states.hpp"

using namespace qdn;

namespace {

constexpr double kPi = std::numbers::pi;

SGCoefficients random_coefficients(Rng& rng) {
    const auto u = random_unitary(2, rng);  // row-major 2x2; columns orthonormal
    return SGCoefficients{u[0], u[2], u[1], u[3]};
}

EPRSetup random_environment_setup(int rank, Rng& rng) {
    EPRSetup setup;
    setup.rank = rank;
    const Labstate env = random_labstate(rank - 4, rng);
    setup.environment = env.amplitudes();
    return setup;
}

}  // namespace

TEST_CASE("the singlet puts 1/sqrt(2) on {1,4} and -1/sqrt(2) on {2,3}") {
    const Labstate s = prepare_singlet();
    REQUIRE(s.rank() == 4);
    REQUIRE(s.normalized());
    const double inv = 1.0 / std::sqrt(2.0);
    for (std::uint64_t k = 0; k < 16; ++k) {
        if (k == 9) {
            CHECK(s.amplitude(k) == cplx{inv, 0.0});
        } else if (k == 6) {
            CHECK(s.amplitude(k) == cplx{-inv, 0.0});
        } else {
            CHECK(s.amplitude(k) == cplx{0.0, 0.0});
        }
    }

    CHECK(partial_probability(s, Proposition().fired(1)) ==
          doctest::Approx(0.5).epsilon(1e-13));
    CHECK(partial_probability(s, Proposition().fired(1).fired(2)) == 0.0);
}

TEST_CASE("setup validation") {
    CHECK_THROWS_AS(prepare_singlet(EPRSetup{3, {}}), RankError);
    CHECK_THROWS_AS(prepare_singlet(EPRSetup{5, {cplx{1, 0}}}), ShapeError);
    CHECK_THROWS_AS(prepare_singlet(EPRSetup{5, {cplx{1, 0}, cplx{1, 0}}}),
                    NormalizationError);
    CHECK_NOTHROW(prepare_singlet(EPRSetup{5, {cplx{0, 0}, cplx{1, 0}}}));
}

TEST_CASE("identity rotations leave the singlet untouched") {
    const Labstate s = prepare_singlet();
    const Labstate rotated = joint_rotation(s, SGCoefficients{}, SGCoefficients{});
    CHECK(max_abs_diff(rotated, s) == 0.0);
}

TEST_CASE("rotated singlet amplitudes carry the antisymmetric brackets") {
    Rng rng(61);
    for (int t = 0; t < 25; ++t) {
        const SGCoefficients a = random_coefficients(rng);
        const SGCoefficients b = random_coefficients(rng);
        const Labstate rotated = joint_rotation(prepare_singlet(), a, b);
        const double inv = 1.0 / std::sqrt(2.0);

        CHECK(std::abs(rotated.amplitude(5) -
                       inv * (a.alpha * b.gamma - a.gamma * b.alpha)) <= 1e-12);
        CHECK(std::abs(rotated.amplitude(9) -
                       inv * (a.alpha * b.delta - a.gamma * b.beta)) <= 1e-12);
        CHECK(std::abs(rotated.amplitude(6) -
                       inv * (a.beta * b.gamma - a.delta * b.alpha)) <= 1e-12);
        CHECK(std::abs(rotated.amplitude(10) -
                       inv * (a.beta * b.delta - a.delta * b.beta)) <= 1e-12);
    }
}

TEST_CASE("equal axes give no joint up-up signal") {
    for (int k = 0; k < 20; ++k) {
        const double theta = -kPi + k * (2.0 * kPi / 20.0);
        const SGCoefficients w = wigner_coefficients(theta);
        const Labstate rotated = joint_rotation(prepare_singlet(), w, w);
        CHECK(partial_probability(rotated, Proposition().fired(1).fired(3)) == 0.0);
    }
}

TEST_CASE("opposite axes fire both up detectors half the time") {
    const Labstate rotated = joint_rotation(
        prepare_singlet(), wigner_coefficients(0.0), wigner_coefficients(kPi));
    CHECK(partial_probability(rotated, Proposition().fired(1).fired(3)) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("simulated joint probability matches the closed form") {
    SUBCASE("along the single-angle family") {
        const auto p1 = p_plus_plus(wigner_coefficients(0.0), wigner_coefficients(kPi / 3.0));
        CHECK(std::abs(p1.simulated - 0.125) <= 1e-12);
        CHECK(std::abs(p1.closed_form - 0.125) <= 1e-12);
        CHECK(std::abs(p1.simulated - p1.closed_form) <= 1e-12);

        const auto p2 = p_plus_plus(wigner_coefficients(0.0), wigner_coefficients(kPi));
        CHECK(std::abs(p2.simulated - 0.5) <= 1e-12);
    }
    SUBCASE("over random coefficient pairs") {
        Rng rng(62);
        for (int t = 0; t < 200; ++t) {
            const SGCoefficients a = random_coefficients(rng);
            const SGCoefficients b = random_coefficients(rng);
            const auto p = p_plus_plus(a, b);
            CHECK(std::abs(p.simulated - p.closed_form) <= 1e-12);
        }
    }
    SUBCASE("perfect anticorrelation is exact") {
        Rng rng(63);
        for (int t = 0; t < 100; ++t) {
            const SGCoefficients a = random_coefficients(rng);
            const auto p = p_plus_plus(a, a);
            CHECK(p.simulated == 0.0);
            CHECK(p.closed_form == 0.0);
        }
    }
}

TEST_CASE("the four joint outcomes exhaust the rotated singlet") {
    Rng rng(64);
    for (int t = 0; t < 25; ++t) {
        const SGCoefficients a = random_coefficients(rng);
        const SGCoefficients b = random_coefficients(rng);
        const Labstate rotated = joint_rotation(prepare_singlet(), a, b);
        const double total =
            partial_probability(rotated, Proposition().fired(1).fired(3)) +
            partial_probability(rotated, Proposition().fired(1).fired(4)) +
            partial_probability(rotated, Proposition().fired(2).fired(3)) +
            partial_probability(rotated, Proposition().fired(2).fired(4));
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("each observer's statistics ignore the other observer's axis") {
    Rng rng(65);
    const SGCoefficients a = random_coefficients(rng);
    const Labstate reference = joint_rotation(prepare_singlet(), a, random_coefficients(rng));
    const double alice_up = partial_probability(reference, Proposition().fired(1));
    const double alice_exclusive =
        partial_probability(reference, Proposition().fired(1).voided(2));
    for (int t = 0; t < 10; ++t) {
        const Labstate other = joint_rotation(prepare_singlet(), a, random_coefficients(rng));
        CHECK(std::abs(partial_probability(other, Proposition().fired(1)) - alice_up) <=
              1e-12);
        CHECK(std::abs(partial_probability(other, Proposition().fired(1).voided(2)) -
                       alice_exclusive) <= 1e-12);
    }

    const SGCoefficients b = random_coefficients(rng);
    const Labstate bob_reference =
        joint_rotation(prepare_singlet(), random_coefficients(rng), b);
    const double bob_up = partial_probability(bob_reference, Proposition().fired(3));
    for (int t = 0; t < 10; ++t) {
        const Labstate other = joint_rotation(prepare_singlet(), random_coefficients(rng), b);
        CHECK(std::abs(partial_probability(other, Proposition().fired(3)) - bob_up) <=
              1e-12);
    }
}

TEST_CASE("environment detectors change nothing") {
    Rng rng(66);
    const EPRSetup setup = random_environment_setup(6, rng);
    const Labstate s = prepare_singlet(setup);
    REQUIRE(s.normalized());
    CHECK(partial_probability(s, Proposition().fired(1)) ==
          doctest::Approx(0.5).epsilon(1e-12));

    for (int t = 0; t < 10; ++t) {
        const SGCoefficients a = random_coefficients(rng);
        const SGCoefficients b = random_coefficients(rng);
        const auto with_env = p_plus_plus(a, b, setup);
        CHECK(std::abs(with_env.simulated - with_env.closed_form) <= 1e-12);
        const auto anti = p_plus_plus(a, a, setup);
        CHECK(anti.simulated == 0.0);

        const Labstate rotated = joint_rotation(prepare_singlet(setup), a, b);
        const double total =
            partial_probability(rotated, Proposition().fired(1).fired(3)) +
            partial_probability(rotated, Proposition().fired(1).fired(4)) +
            partial_probability(rotated, Proposition().fired(2).fired(3)) +
            partial_probability(rotated, Proposition().fired(2).fired(4));
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("inequality rows: trivial, violated and boundary triples") {
    const WignerScanRow trivial = wigner_inequality(0.0, 0.0, 0.0);
    CHECK(trivial.lhs == 0.0);
    CHECK(trivial.rhs == 0.0);
    CHECK_FALSE(trivial.violated);

    const WignerScanRow violated = wigner_inequality(0.0, kPi / 3.0, 2.0 * kPi / 3.0);
    CHECK(std::abs(violated.p_ab - 0.125) <= 1e-12);
    CHECK(std::abs(violated.p_bc - 0.125) <= 1e-12);
    CHECK(std::abs(violated.p_ac - 0.375) <= 1e-12);
    CHECK(violated.lhs < violated.rhs);
    CHECK(violated.violated);

    const WignerScanRow boundary = wigner_inequality(0.0, kPi / 2.0, kPi);
    CHECK(std::abs(boundary.lhs - 0.5) <= 1e-12);
    CHECK(std::abs(boundary.rhs - 0.5) <= 1e-12);
    CHECK_FALSE(boundary.violated);

    CHECK_THROWS_AS(wigner_inequality(0.0, 0.0, std::nan("")), DomainError);
}

TEST_CASE("scan walks the grid in order and counts violations") {
    const WignerScanResult single = wigner_scan({{0.0, 0.0, 0.0}});
    REQUIRE(single.rows.size() == 1);
    CHECK(single.violations == 0);

    const WignerScanResult hit = wigner_scan({{0.0, kPi / 3.0, 2.0 * kPi / 3.0}});
    CHECK(hit.violations == 1);

    CHECK_THROWS_AS(wigner_scan({}), DomainError);
}

TEST_CASE("pi/6 mesh over [0,pi)^3 reproduces the frozen violation count") {
    const auto grid = mesh_grid(0.0, kPi, kPi / 6.0);
    REQUIRE(grid.size() == 216);
    const WignerScanResult result = wigner_scan(grid);
    CHECK(result.violations == 40);

    // independent closed-form sweep over the same grid
    int expected = 0;
    const auto closed = [](double da) {
        const double s = std::sin(da / 2.0);
        return 0.5 * s * s;
    };
    for (const auto& [ta, tb, tc] : grid) {
        if (closed(ta - tb) + closed(tb - tc) < closed(ta - tc) - 1e-12) ++expected;
    }
    CHECK(expected == 40);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& [ta, tb, tc] = grid[i];
        const bool oracle_violated =
            closed(ta - tb) + closed(tb - tc) < closed(ta - tc) - 1e-12;
        CHECK(result.rows[i].violated == oracle_violated);
    }
}

TEST_CASE("mesh construction") {
    const auto pts = mesh_points(0.0, kPi, kPi / 6.0);
    REQUIRE(pts.size() == 6);
    CHECK(pts[0] == 0.0);
    CHECK(pts[5] == doctest::Approx(5.0 * kPi / 6.0).epsilon(1e-14));
    CHECK_THROWS_AS(mesh_points(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(mesh_points(1.0, 0.0, 0.1), DomainError);
    CHECK_THROWS_AS(mesh_points(0.0, std::nan(""), 0.1), DomainError);
}
