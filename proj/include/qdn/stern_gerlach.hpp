#pragma once

#include "qdn/local_ops.hpp"

namespace qdn {

/// Coefficient quadruple of a Stern-Gerlach axis rotation. Valid quadruples
/// satisfy |alpha|^2 + |beta|^2 = 1, |gamma|^2 + |delta|^2 = 1 and
/// conj(alpha) gamma + conj(beta) delta = 0.
struct SGCoefficients {
    cplx alpha{1.0, 0.0};
    cplx beta{0.0, 0.0};
    cplx gamma{0.0, 0.0};
    cplx delta{1.0, 0.0};
};

/// Largest violation of the three coefficient conditions.
double coefficients_residual(const SGCoefficients& c);

/// Single-angle family: alpha = cos(theta/2), beta = sin(theta/2),
/// gamma = -sin(theta/2), delta = cos(theta/2).
SGCoefficients wigner_coefficients(double theta);

/// Local operator for an active rotation of the quantization axis of a
/// detector pair (up_detector, down_detector). The void and double-fire local
/// states are invariant; the one-signal states mix through the 2x2 block.
LocalOperator sg_rotation(int up_detector, int down_detector, const SGCoefficients& c);

}  // namespace qdn
