#include "qdn/oracle.hpp"

#include <cmath>

namespace qdn {

namespace {

void check_oracle_rank(int rank) {
    if (rank < 1 || rank > kMaxOracleRank) {
        throw RankError("dense oracle supports ranks 1.." +
                        std::to_string(kMaxOracleRank) + ", got " + std::to_string(rank));
    }
}

struct Square {
    std::uint64_t dim = 0;
    std::vector<cplx> data;  // row-major
};

Square identity(std::uint64_t dim) {
    Square m{dim, std::vector<cplx>(dim * dim, cplx{0.0, 0.0})};
    for (std::uint64_t i = 0; i < dim; ++i) m.data[i * dim + i] = cplx{1.0, 0.0};
    return m;
}

// kron(a, b)[ia*db + ib][ja*db + jb] = a[ia][ja] * b[ib][jb]
Square kron(const Square& a, const Square& b) {
    Square out{a.dim * b.dim, std::vector<cplx>(a.dim * b.dim * a.dim * b.dim)};
    for (std::uint64_t ia = 0; ia < a.dim; ++ia) {
        for (std::uint64_t ja = 0; ja < a.dim; ++ja) {
            const cplx f = a.data[ia * a.dim + ja];
            for (std::uint64_t ib = 0; ib < b.dim; ++ib) {
                for (std::uint64_t jb = 0; jb < b.dim; ++jb) {
                    out.data[(ia * b.dim + ib) * out.dim + (ja * b.dim + jb)] =
                        f * b.data[ib * b.dim + jb];
                }
            }
        }
    }
    return out;
}

// Single-qubit basis order (void, fired).
Square qubit_block(SignalOpKind kind) {
    Square m{2, std::vector<cplx>(4, cplx{0.0, 0.0})};
    switch (kind) {
        case SignalOpKind::Create:
            m.data[1 * 2 + 0] = cplx{1.0, 0.0};  // |fired)(void|
            break;
        case SignalOpKind::Annihilate:
            m.data[0 * 2 + 1] = cplx{1.0, 0.0};  // |void)(fired|
            break;
        case SignalOpKind::ProjFired:
            m.data[1 * 2 + 1] = cplx{1.0, 0.0};
            break;
        case SignalOpKind::ProjVoid:
            m.data[0 * 2 + 0] = cplx{1.0, 0.0};
            break;
    }
    return m;
}

}  // namespace

DenseOperator dense_signal_op(SignalOpKind kind, int detector, int rank) {
    check_oracle_rank(rank);
    detail::check_detector(detector, rank);
    // Detector 1 is the least significant bit, so it sits rightmost in the
    // Kronecker chain: high identities x block x low identities.
    const Square low = identity(std::uint64_t{1} << (detector - 1));
    const Square high = identity(std::uint64_t{1} << (rank - detector));
    Square full = kron(high, kron(qubit_block(kind), low));
    return DenseOperator{rank, std::move(full.data)};
}

DenseOperator dense_embed(const LocalOperator& op, int rank) {
    check_oracle_rank(rank);
    for (int t : op.targets()) detail::check_detector(t, rank);

    const std::uint64_t dim = std::uint64_t{1} << rank;
    const std::uint64_t local_dim = op.dim();
    std::vector<std::uint64_t> offsets(local_dim, 0);
    for (std::uint64_t i = 0; i < local_dim; ++i) {
        for (int m = 0; m < op.arity(); ++m) {
            if (i & (std::uint64_t{1} << m)) {
                offsets[i] |= std::uint64_t{1} << (op.targets()[m] - 1);
            }
        }
    }
    std::uint64_t target_mask = 0;
    for (int t : op.targets()) target_mask |= std::uint64_t{1} << (t - 1);

    std::vector<cplx> matrix(dim * dim, cplx{0.0, 0.0});
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & target_mask) continue;  // enumerate remote patterns once
        for (std::uint64_t j = 0; j < local_dim; ++j) {
            for (std::uint64_t i = 0; i < local_dim; ++i) {
                matrix[(base + offsets[j]) * dim + (base + offsets[i])] = op.entry(j, i);
            }
        }
    }
    return DenseOperator{rank, std::move(matrix)};
}

DenseOperator dense_identity(int rank) {
    check_oracle_rank(rank);
    Square m = identity(std::uint64_t{1} << rank);
    return DenseOperator{rank, std::move(m.data)};
}

DenseOperator dense_multiply(const DenseOperator& a, const DenseOperator& b) {
    if (a.rank != b.rank) throw RankError("rank mismatch in dense product");
    const std::uint64_t dim = a.dim();
    std::vector<cplx> out(dim * dim, cplx{0.0, 0.0});
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t k = 0; k < dim; ++k) {
            const cplx f = a.matrix[r * dim + k];
            if (f == cplx{0.0, 0.0}) continue;
            for (std::uint64_t c = 0; c < dim; ++c) {
                out[r * dim + c] += f * b.matrix[k * dim + c];
            }
        }
    }
    return DenseOperator{a.rank, std::move(out)};
}

DenseOperator dense_add(const DenseOperator& a, const DenseOperator& b) {
    if (a.rank != b.rank) throw RankError("rank mismatch in dense sum");
    DenseOperator out = a;
    for (std::size_t i = 0; i < out.matrix.size(); ++i) out.matrix[i] += b.matrix[i];
    return out;
}

double dense_max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
    if (a.rank != b.rank) throw RankError("rank mismatch in dense comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.matrix.size(); ++i) {
        worst = std::max(worst, std::abs(a.matrix[i] - b.matrix[i]));
    }
    return worst;
}

Labstate dense_apply(const DenseOperator& op, const Labstate& state) {
    if (op.rank != state.rank()) throw RankError("operator/state rank mismatch");
    const std::uint64_t dim = op.dim();
    const auto& in = state.amplitudes();
    std::vector<cplx> out(dim, cplx{0.0, 0.0});
    for (std::uint64_t r = 0; r < dim; ++r) {
        cplx acc{0.0, 0.0};
        for (std::uint64_t c = 0; c < dim; ++c) acc += op.matrix[r * dim + c] * in[c];
        out[r] = acc;
    }
    return Labstate::from_amplitudes(op.rank, std::move(out));
}

}  // namespace qdn
