#include "qdn/stern_gerlach.hpp"

#include <cmath>

namespace qdn {

double coefficients_residual(const SGCoefficients& c) {
    const double up = std::abs(std::norm(c.alpha) + std::norm(c.beta) - 1.0);
    const double down = std::abs(std::norm(c.gamma) + std::norm(c.delta) - 1.0);
    const double cross =
        std::abs(std::conj(c.alpha) * c.gamma + std::conj(c.beta) * c.delta);
    return std::max({up, down, cross});
}

SGCoefficients wigner_coefficients(double theta) {
    if (!std::isfinite(theta)) throw DomainError("rotation angle must be finite");
    const double half = 0.5 * theta;
    return SGCoefficients{
        cplx{std::cos(half), 0.0},
        cplx{std::sin(half), 0.0},
        cplx{-std::sin(half), 0.0},
        cplx{std::cos(half), 0.0},
    };
}

LocalOperator sg_rotation(int up_detector, int down_detector, const SGCoefficients& c) {
    if (up_detector == down_detector) {
        throw OverlapError("rotation needs two distinct detectors, got " +
                           std::to_string(up_detector) + " twice");
    }
    // Local basis on (up, down): 0 both void, 1 up fired, 2 down fired, 3 both.
    // The void column is fixed (no spontaneous signals from moving apparatus);
    // the double-fire column is fixed up to a phase absorbed into the basis.
    std::vector<cplx> m(16, cplx{0.0, 0.0});
    m[0 * 4 + 0] = cplx{1.0, 0.0};
    m[1 * 4 + 1] = c.alpha;
    m[2 * 4 + 1] = c.beta;
    m[1 * 4 + 2] = c.gamma;
    m[2 * 4 + 2] = c.delta;
    m[3 * 4 + 3] = cplx{1.0, 0.0};
    return LocalOperator({up_detector, down_detector}, std::move(m));
}

}  // namespace qdn
