#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qdn/errors.hpp"

namespace qdn {

using cplx = std::complex<double>;

/// Highest supported register rank; keeps amplitude vectors at most 2^24 entries.
inline constexpr int kMaxRank = 24;

/// Tolerance for treating a squared norm as exactly 1.
inline constexpr double kNormTolerance = 1e-12;

/// State of a rank-r register of elementary signal detectors, expanded over the
/// computational basis. Basis index k has bit (i-1) set iff detector i is fired.
/// Labstates are immutable values; every operation on them returns a new one.
class Labstate {
public:
    /// The void state |0): amplitude 1 on the all-void basis element.
    static Labstate void_state(int rank);

    /// Basis state |index) for 0 <= index < 2^rank.
    static Labstate basis_state(int rank, std::uint64_t index);

    /// Wraps an amplitude vector of length 2^rank. The result is flagged
    /// normalized iff the squared norm is within 1e-12 of 1; amplitudes are
    /// never rescaled.
    static Labstate from_amplitudes(int rank, std::vector<cplx> amplitudes);

    int rank() const { return rank_; }
    std::uint64_t dim() const { return std::uint64_t{1} << rank_; }
    bool normalized() const { return normalized_; }

    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx amplitude(std::uint64_t index) const { return amps_.at(index); }

    double norm_squared() const;

    Labstate operator+(const Labstate& other) const;
    Labstate operator-(const Labstate& other) const;
    Labstate scaled(cplx factor) const;

private:
    Labstate(int rank, std::vector<cplx> amps);

    int rank_;
    std::vector<cplx> amps_;
    bool normalized_;
};

/// (a|b), conjugate-linear in the first argument.
cplx inner_product(const Labstate& a, const Labstate& b);

/// Largest |a_k - b_k| over the basis; states must share a rank.
double max_abs_diff(const Labstate& a, const Labstate& b);

/// Largest |a_k| over the basis.
double max_abs(const Labstate& a);

/// A maximal observation outcome: the set of detectors found fired.
struct BasisOutcome {
    int rank = 0;
    std::vector<int> fired;  // ascending detector indices in 1..rank
};

/// Basis index k = sum of 2^(i-1) over fired detectors i.
std::uint64_t basis_index(const BasisOutcome& outcome);

/// Inverse of basis_index.
BasisOutcome outcome_from_index(int rank, std::uint64_t index);

namespace detail {
void check_rank(int rank);
void check_detector(int detector, int rank);
}  // namespace detail

}  // namespace qdn
