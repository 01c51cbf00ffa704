#include "doctest.h"

#include <cmath>

#include "qdn/random_states.hpp"
#include "qdn/signal_ops.hpp"

using namespace qdn;

TEST_CASE("creation moves the void branch up by 2^(i-1)") {
    const Labstate v = Labstate::void_state(2);
    CHECK(max_abs_diff(apply_create(1, v), Labstate::basis_state(2, 1)) == 0.0);
    CHECK(max_abs_diff(apply_create(2, apply_create(1, v)), Labstate::basis_state(2, 3)) ==
          0.0);

    // repeated creation on the same detector annihilates the branch
    const Labstate twice = apply_create(1, Labstate::basis_state(2, 1));
    CHECK(max_abs(twice) == 0.0);
    CHECK_FALSE(twice.normalized());
}

TEST_CASE("annihilation mirrors creation") {
    CHECK(max_abs(apply_annihilate(1, Labstate::void_state(2))) == 0.0);
    CHECK(max_abs_diff(apply_annihilate(1, Labstate::basis_state(2, 1)),
                       Labstate::void_state(2)) == 0.0);
    CHECK(max_abs_diff(apply_annihilate(2, Labstate::basis_state(2, 3)),
                       Labstate::basis_state(2, 1)) == 0.0);
}

TEST_CASE("projectors keep or drop the matching branch") {
    const Labstate v = Labstate::void_state(2);
    CHECK(max_abs_diff(apply_projector(1, false, v), v) == 0.0);
    CHECK(max_abs(apply_projector(1, true, v)) == 0.0);

    const Labstate s = Labstate::from_amplitudes(
        2, {cplx{0.5, 0.0}, cplx{0.5, 0.0}, cplx{0.5, 0.0}, cplx{0.5, 0.0}});
    const Labstate projected = apply_projector(1, true, s);
    CHECK(projected.amplitude(0) == cplx{0.0, 0.0});
    CHECK(projected.amplitude(1) == cplx{0.5, 0.0});
    CHECK(projected.amplitude(2) == cplx{0.0, 0.0});
    CHECK(projected.amplitude(3) == cplx{0.5, 0.0});
}

TEST_CASE("detector index is validated") {
    const Labstate v = Labstate::void_state(2);
    CHECK_THROWS_AS(apply_create(0, v), DetectorError);
    CHECK_THROWS_AS(apply_create(3, v), DetectorError);
    CHECK_THROWS_AS(apply_annihilate(-1, v), DetectorError);
    CHECK_THROWS_AS(apply_projector(5, true, v), DetectorError);
}

TEST_CASE("operator identities hold per amplitude on random states") {
    Rng rng(23);
    for (int rank = 1; rank <= 5; ++rank) {
        for (int t = 0; t < 10; ++t) {
            const Labstate s = random_labstate(rank, rng);
            for (int i = 1; i <= rank; ++i) {
                // nilpotency
                CHECK(max_abs(apply_create(i, apply_create(i, s))) == 0.0);
                CHECK(max_abs(apply_annihilate(i, apply_annihilate(i, s))) == 0.0);
                // {A_i, A_i^+} = I
                const Labstate anti = apply_create(i, apply_annihilate(i, s)) +
                                      apply_annihilate(i, apply_create(i, s));
                CHECK(max_abs_diff(anti, s) == 0.0);
                // completeness and orthogonality of the projector pair
                const Labstate sum =
                    apply_projector(i, true, s) + apply_projector(i, false, s);
                CHECK(max_abs_diff(sum, s) == 0.0);
                CHECK(max_abs(apply_projector(i, true, apply_projector(i, false, s))) ==
                      0.0);
            }
            for (int i = 1; i <= rank; ++i) {
                for (int j = 1; j <= rank; ++j) {
                    if (i == j) continue;
                    CHECK(max_abs_diff(apply_create(i, apply_create(j, s)),
                                       apply_create(j, apply_create(i, s))) == 0.0);
                    CHECK(max_abs_diff(apply_annihilate(i, apply_create(j, s)),
                                       apply_create(j, apply_annihilate(i, s))) == 0.0);
                    CHECK(max_abs_diff(apply_projector(i, true, apply_projector(j, true, s)),
                                       apply_projector(j, true, apply_projector(i, true, s))) ==
                          0.0);
                }
            }
        }
    }
}

TEST_CASE("algebra check reports residuals at machine precision") {
    const AlgebraReport report = algebra_check(2, 50, 7);
    REQUIRE(!report.residuals.empty());
    CHECK(report.all_within(1e-12));
    CHECK(report.max_residual() <= 1e-12);

    bool found_anti = false;
    for (const auto& [name, residual] : report.residuals) {
        if (name == "anticommutator_annihilate_create") {
            found_anti = true;
            CHECK(residual <= 1e-12);
        }
    }
    CHECK(found_anti);
}

TEST_CASE("algebra check covers the void relations and cross commutators") {
    const AlgebraReport r1 = algebra_check(1, 1, 0);
    bool saw_void = false;
    for (const auto& [name, residual] : r1.residuals) {
        if (name == "proj_fired_on_void") {
            saw_void = true;
            CHECK(residual == 0.0);
        }
    }
    CHECK(saw_void);

    const AlgebraReport r4 = algebra_check(4, 20, 3);
    bool saw_comm = false;
    for (const auto& [name, residual] : r4.residuals) {
        if (name == "commutator_proj_fired_fired") {
            saw_comm = true;
            CHECK(residual <= 1e-12);
        }
    }
    CHECK(saw_comm);
}

TEST_CASE("algebra check validates its parameters") {
    CHECK_THROWS_AS(algebra_check(7, 10, 0), RankError);
    CHECK_THROWS_AS(algebra_check(0, 10, 0), RankError);
    CHECK_THROWS_AS(algebra_check(2, 0, 0), DomainError);
}
