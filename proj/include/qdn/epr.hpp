#pragma once

#include <array>
#include <vector>

#include "qdn/stern_gerlach.hpp"

namespace qdn {

/// Spin-pair geometry: Alice reads detectors (1,2), Bob reads (3,4); detectors
/// 5..rank are untouched environment. `environment` holds the 2^(rank-4)
/// amplitudes of the environment pattern; leave it empty for all-void.
struct EPRSetup {
    int rank = 4;
    std::vector<cplx> environment;
};

/// (1/sqrt(2)) (A_1^+ A_4^+ - A_2^+ A_3^+) |Phi), with |Phi) void on the first
/// four detectors and carrying the environment amplitudes on the rest.
Labstate prepare_singlet(const EPRSetup& setup = {});

/// Applies Alice's axis rotation on (1,2) and Bob's on (3,4) simultaneously.
Labstate joint_rotation(const Labstate& state, const SGCoefficients& a,
                        const SGCoefficients& b);

struct PlusPlusProbability {
    double simulated = 0.0;    // through singlet + rotation + partial question
    double closed_form = 0.0;  // 0.5 |alpha_a gamma_b - gamma_a alpha_b|^2
};

/// P(+a,+b): both observers catching a signal in their "up" detector.
PlusPlusProbability p_plus_plus(const SGCoefficients& a, const SGCoefficients& b,
                                const EPRSetup& setup = {});

inline constexpr double kViolationTolerance = 1e-12;

/// One evaluation of P(+a,+b) + P(+b,+c) >= P(+a,+c) on the Wigner
/// single-angle family. `violated` uses a 1e-12 guard so exact ties at the
/// boundary do not count as violations.
struct WignerScanRow {
    double theta_a = 0.0;
    double theta_b = 0.0;
    double theta_c = 0.0;
    double p_ab = 0.0;
    double p_bc = 0.0;
    double p_ac = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool violated = false;
};

WignerScanRow wigner_inequality(double theta_a, double theta_b, double theta_c);

struct WignerScanResult {
    std::vector<WignerScanRow> rows;
    int violations = 0;
};

/// Evaluates the inequality on every triple of the grid, in grid order.
WignerScanResult wigner_scan(const std::vector<std::array<double, 3>>& grid);

/// Uniform 1-D mesh start, start+step, ... below stop (half-open).
std::vector<double> mesh_points(double start, double stop, double step);

/// All triples of a 1-D mesh, theta_a outermost.
std::vector<std::array<double, 3>> mesh_grid(double start, double stop, double step);

}  // namespace qdn
