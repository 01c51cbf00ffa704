#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qdn/local_ops.hpp"
#include "qdn/questions.hpp"

namespace qdn {

using Rng = std::mt19937_64;

/// I.i.d. standard complex Gaussian amplitudes, normalized to unit norm.
Labstate random_labstate(int rank, Rng& rng);

/// Haar-ish random unitary: complex Gaussian matrix orthonormalized by
/// modified Gram-Schmidt with one reorthogonalization pass. Row-major.
std::vector<cplx> random_unitary(std::uint64_t dim, Rng& rng);

LocalOperator random_local_operator(std::vector<int> targets, Rng& rng);

/// Uniform nonempty sub-collection of `detectors` with a uniform fired/void
/// assertion per chosen detector.
Proposition random_proposition(const std::vector<int>& detectors, Rng& rng);

/// Uniform nonempty proper subset of {1..rank}, ascending.
std::vector<int> random_proper_subset(int rank, Rng& rng);

}  // namespace qdn
