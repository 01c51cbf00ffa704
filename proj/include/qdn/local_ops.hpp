#pragma once

#include <cstdint>
#include <vector>

#include "qdn/labstate.hpp"
#include "qdn/questions.hpp"

namespace qdn {

/// A semi-unitary operation confined to an ordered subset of detectors.
/// The coefficient matrix is 2^p x 2^p, row-major; column i is the image of
/// the local basis state i, where bit m of a local index corresponds to
/// detector targets[m]. Targets need not be contiguous or sorted.
class LocalOperator {
public:
    LocalOperator(std::vector<int> targets, std::vector<cplx> matrix);

    static LocalOperator identity(std::vector<int> targets);

    int arity() const { return static_cast<int>(targets_.size()); }
    std::uint64_t dim() const { return std::uint64_t{1} << targets_.size(); }
    const std::vector<int>& targets() const { return targets_; }
    const std::vector<cplx>& matrix() const { return matrix_; }
    cplx entry(std::uint64_t row, std::uint64_t col) const {
        return matrix_[row * dim() + col];
    }

private:
    std::vector<int> targets_;
    std::vector<cplx> matrix_;  // row-major, dim() x dim()
};

struct SemiUnitarityCheck {
    bool ok = false;
    double max_residual = 0.0;
};

/// Max |(U^dagger U)_{ik} - delta_ik| against the tolerance.
SemiUnitarityCheck check_semiunitary(const LocalOperator& op, double tol);

/// Transforms the local amplitudes for every remote bit pattern, leaving
/// remote bits untouched. Semi-unitarity is verified at tolerance 1e-10.
Labstate apply_local(const LocalOperator& op, const Labstate& state);

/// Kronecker-structured operator on the union of two disjoint target sets,
/// acting exactly like applying the two operators in either order.
LocalOperator compose_disjoint(const LocalOperator& first, const LocalOperator& second);

/// Outcome of an Einstein-locality audit. max_remote_delta is the largest
/// probability shift observed on any detector subset that the audited
/// operation should not be able to influence.
struct AuditReport {
    double max_remote_delta = 0.0;
    int trials = 0;
    bool pass = false;
};

inline constexpr double kAuditTolerance = 1e-12;

/// Compares every remote question before and after the operation: the full
/// outcome distribution over the complement of op.targets plus `trials`
/// random partial propositions there. Also runs the two-operation variant
/// with a random semi-unitary V on the complement, checking that each side's
/// probabilities depend only on its own operator.
AuditReport locality_audit(const Labstate& state, const LocalOperator& op,
                           int trials, std::uint64_t seed);

}  // namespace qdn
