#include "qdn/epr.hpp"

#include <cmath>

#include "qdn/signal_ops.hpp"

namespace qdn {

namespace {

void validate_setup(const EPRSetup& setup) {
    if (setup.rank < 4) {
        throw RankError("spin-pair setup needs rank >= 4, got " +
                        std::to_string(setup.rank));
    }
    detail::check_rank(setup.rank);
    if (setup.environment.empty()) return;
    const std::uint64_t env_dim = std::uint64_t{1} << (setup.rank - 4);
    if (setup.environment.size() != env_dim) {
        throw ShapeError("environment needs " + std::to_string(env_dim) +
                         " amplitudes, got " + std::to_string(setup.environment.size()));
    }
    double n2 = 0.0;
    for (const cplx& a : setup.environment) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw NormalizationError("environment amplitudes are not normalized");
    }
}

// |Phi): detectors 1..4 void, environment pattern on the rest.
Labstate base_state(const EPRSetup& setup) {
    std::vector<cplx> amps(std::uint64_t{1} << setup.rank, cplx{0.0, 0.0});
    if (setup.environment.empty()) {
        amps[0] = cplx{1.0, 0.0};
    } else {
        for (std::uint64_t e = 0; e < setup.environment.size(); ++e) {
            amps[e << 4] = setup.environment[e];
        }
    }
    return Labstate::from_amplitudes(setup.rank, std::move(amps));
}

}  // namespace

Labstate prepare_singlet(const EPRSetup& setup) {
    validate_setup(setup);
    const Labstate phi = base_state(setup);
    const Labstate up_pair = apply_create(1, apply_create(4, phi));
    const Labstate down_pair = apply_create(2, apply_create(3, phi));
    return (up_pair - down_pair).scaled(cplx{1.0 / std::sqrt(2.0), 0.0});
}

Labstate joint_rotation(const Labstate& state, const SGCoefficients& a,
                        const SGCoefficients& b) {
    if (state.rank() < 4) {
        throw RankError("joint rotation needs rank >= 4");
    }
    const LocalOperator combined =
        compose_disjoint(sg_rotation(1, 2, a), sg_rotation(3, 4, b));
    return apply_local(combined, state);
}

PlusPlusProbability p_plus_plus(const SGCoefficients& a, const SGCoefficients& b,
                                const EPRSetup& setup) {
    const Labstate rotated = joint_rotation(prepare_singlet(setup), a, b);
    PlusPlusProbability p;
    p.simulated = partial_probability(rotated, Proposition().fired(1).fired(3));
    p.closed_form = 0.5 * std::norm(a.alpha * b.gamma - a.gamma * b.alpha);
    return p;
}

WignerScanRow wigner_inequality(double theta_a, double theta_b, double theta_c) {
    if (!std::isfinite(theta_a) || !std::isfinite(theta_b) || !std::isfinite(theta_c)) {
        throw DomainError("angles must be finite");
    }
    const SGCoefficients a = wigner_coefficients(theta_a);
    const SGCoefficients b = wigner_coefficients(theta_b);
    const SGCoefficients c = wigner_coefficients(theta_c);

    WignerScanRow row;
    row.theta_a = theta_a;
    row.theta_b = theta_b;
    row.theta_c = theta_c;
    row.p_ab = p_plus_plus(a, b).simulated;
    row.p_bc = p_plus_plus(b, c).simulated;
    row.p_ac = p_plus_plus(a, c).simulated;
    row.lhs = row.p_ab + row.p_bc;
    row.rhs = row.p_ac;
    row.violated = row.lhs < row.rhs - kViolationTolerance;
    return row;
}

WignerScanResult wigner_scan(const std::vector<std::array<double, 3>>& grid) {
    if (grid.empty()) throw DomainError("scan grid must be nonempty");
    WignerScanResult result;
    result.rows.reserve(grid.size());
    for (const auto& [a, b, c] : grid) {
        result.rows.push_back(wigner_inequality(a, b, c));
        if (result.rows.back().violated) ++result.violations;
    }
    return result;
}

std::vector<double> mesh_points(double start, double stop, double step) {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) ||
        step <= 0.0 || stop <= start) {
        throw DomainError("mesh needs finite start < stop and step > 0");
    }
    // Small guard keeps k*step == stop-start from producing an extra point.
    const auto count = static_cast<std::uint64_t>(
        std::ceil((stop - start) / step - 1e-9));
    std::vector<double> points;
    points.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) points.push_back(start + k * step);
    return points;
}

std::vector<std::array<double, 3>> mesh_grid(double start, double stop, double step) {
    const std::vector<double> pts = mesh_points(start, stop, step);
    std::vector<std::array<double, 3>> grid;
    grid.reserve(pts.size() * pts.size() * pts.size());
    for (double a : pts) {
        for (double b : pts) {
            for (double c : pts) grid.push_back({a, b, c});
        }
    }
    return grid;
}

}  // namespace qdn
