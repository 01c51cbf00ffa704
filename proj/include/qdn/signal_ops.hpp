#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qdn/labstate.hpp"

namespace qdn {

enum class SignalOpKind { Create, Annihilate, ProjFired, ProjVoid };

/// A_i^+ : amplitudes with bit (i-1) clear move up by 2^(i-1); amplitudes with
/// the bit already set are dropped (nilpotency). Distinct detectors commute,
/// so there are no sign strings.
Labstate apply_create(int detector, const Labstate& state);

/// A_i : mirror image of apply_create; annihilates the void branch.
Labstate apply_annihilate(int detector, const Labstate& state);

/// P_i (fired = true) or P-bar_i (fired = false): zeroes every amplitude whose
/// bit (i-1) disagrees with `fired`.
Labstate apply_projector(int detector, bool fired, const Labstate& state);

/// Worst residual seen for each operator relation, over a set of random
/// normalized labstates. Relation order is fixed, so serialized output is
/// deterministic.
struct AlgebraReport {
    std::vector<std::pair<std::string, double>> residuals;

    double max_residual() const;
    bool all_within(double tol) const;
};

/// Evaluates the signal algebra together with the quadratic, cubic and quartic
/// projector relations on `trials` random normalized labstates of the given
/// rank, plus the dense-oracle equivalence of each sparse operator. The
/// same-index anticommutator with the adjoint is checked as {A_i, A_i^+} = I.
AlgebraReport algebra_check(int rank, int trials, std::uint64_t seed);

}  // namespace qdn
