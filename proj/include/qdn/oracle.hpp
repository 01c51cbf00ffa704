#pragma once

#include <cstdint>
#include <vector>

#include "qdn/local_ops.hpp"
#include "qdn/signal_ops.hpp"

namespace qdn {

/// Oracle matrices stay at or below rank 6 (64 x 64).
inline constexpr int kMaxOracleRank = 6;

/// Explicit dense matrix of an operator on a full rank-r register; the
/// brute-force reference every sparse code path is checked against.
struct DenseOperator {
    int rank = 0;
    std::vector<cplx> matrix;  // row-major, 2^rank x 2^rank

    std::uint64_t dim() const { return std::uint64_t{1} << rank; }
    cplx entry(std::uint64_t row, std::uint64_t col) const {
        return matrix[row * dim() + col];
    }
};

/// Kronecker product with the 2x2 block of the requested operator at detector
/// position i and identities elsewhere, honoring the bit convention.
DenseOperator dense_signal_op(SignalOpKind kind, int detector, int rank);

/// Embeds a local operator into the full register: the sum of
/// |image, remote)(source, remote| terms over all local/remote index pairs.
DenseOperator dense_embed(const LocalOperator& op, int rank);

DenseOperator dense_identity(int rank);
DenseOperator dense_multiply(const DenseOperator& a, const DenseOperator& b);
DenseOperator dense_add(const DenseOperator& a, const DenseOperator& b);
double dense_max_abs_diff(const DenseOperator& a, const DenseOperator& b);

/// Plain matrix-vector application.
Labstate dense_apply(const DenseOperator& op, const Labstate& state);

}  // namespace qdn
