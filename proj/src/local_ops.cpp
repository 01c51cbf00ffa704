#include "qdn/local_ops.hpp"

#include <algorithm>
#include <cmath>

#include "qdn/random_states.hpp"

namespace qdn {

namespace {

constexpr double kApplyTolerance = 1e-10;

std::vector<std::uint64_t> local_offsets(const std::vector<int>& targets) {
    const std::uint64_t dim = std::uint64_t{1} << targets.size();
    std::vector<std::uint64_t> offsets(dim, 0);
    for (std::uint64_t i = 0; i < dim; ++i) {
        for (std::size_t m = 0; m < targets.size(); ++m) {
            if (i & (std::uint64_t{1} << m)) {
                offsets[i] |= std::uint64_t{1} << (targets[m] - 1);
            }
        }
    }
    return offsets;
}

// Spreads a remote counter over the bit positions not covered by target_mask.
std::uint64_t deposit_remote(std::uint64_t counter, int rank, std::uint64_t target_mask) {
    std::uint64_t k = 0;
    for (int bit = 0; bit < rank; ++bit) {
        const std::uint64_t pos = std::uint64_t{1} << bit;
        if (target_mask & pos) continue;
        if (counter & 1) k |= pos;
        counter >>= 1;
    }
    return k;
}

}  // namespace

LocalOperator::LocalOperator(std::vector<int> targets, std::vector<cplx> matrix)
    : targets_(std::move(targets)), matrix_(std::move(matrix)) {
    if (targets_.empty()) throw DetectorError("local operator needs at least one target");
    std::uint64_t seen = 0;
    for (int t : targets_) {
        if (t < 1) throw DetectorError("detector index must be >= 1, got " + std::to_string(t));
        if (t > kMaxRank) {
            throw DetectorError("detector index " + std::to_string(t) + " above rank cap");
        }
        const std::uint64_t mask = std::uint64_t{1} << (t - 1);
        if (seen & mask) {
            throw OverlapError("duplicate target detector " + std::to_string(t));
        }
        seen |= mask;
    }
    const std::uint64_t d = dim();
    if (matrix_.size() != d * d) {
        throw ShapeError("coefficient matrix must be " + std::to_string(d) + "x" +
                         std::to_string(d) + ", got " + std::to_string(matrix_.size()) +
                         " entries");
    }
}

LocalOperator LocalOperator::identity(std::vector<int> targets) {
    const std::uint64_t d = std::uint64_t{1} << targets.size();
    std::vector<cplx> m(d * d, cplx{0.0, 0.0});
    for (std::uint64_t i = 0; i < d; ++i) m[i * d + i] = cplx{1.0, 0.0};
    return LocalOperator(std::move(targets), std::move(m));
}

SemiUnitarityCheck check_semiunitary(const LocalOperator& op, double tol) {
    const std::uint64_t d = op.dim();
    const auto& m = op.matrix();
    double worst = 0.0;
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t k = i; k < d; ++k) {
            cplx acc{0.0, 0.0};
            for (std::uint64_t j = 0; j < d; ++j) {
                acc += std::conj(m[j * d + i]) * m[j * d + k];
            }
            if (i == k) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return {worst <= tol, worst};
}

Labstate apply_local(const LocalOperator& op, const Labstate& state) {
    for (int t : op.targets()) detail::check_detector(t, state.rank());
    const auto check = check_semiunitary(op, kApplyTolerance);
    if (!check.ok) {
        throw SemiUnitarityError("coefficient matrix fails semi-unitarity, residual " +
                                 std::to_string(check.max_residual));
    }

    const int rank = state.rank();
    const std::uint64_t local_dim = op.dim();
    const auto offsets = local_offsets(op.targets());
    std::uint64_t target_mask = 0;
    for (int t : op.targets()) target_mask |= std::uint64_t{1} << (t - 1);

    const auto& in = state.amplitudes();
    std::vector<cplx> out(in.size(), cplx{0.0, 0.0});
    std::vector<cplx> local(local_dim);
    const auto& m = op.matrix();

    const std::uint64_t remote_count = std::uint64_t{1} << (rank - op.arity());
    for (std::uint64_t c = 0; c < remote_count; ++c) {
        const std::uint64_t base = deposit_remote(c, rank, target_mask);
        for (std::uint64_t i = 0; i < local_dim; ++i) local[i] = in[base + offsets[i]];
        for (std::uint64_t j = 0; j < local_dim; ++j) {
            cplx acc{0.0, 0.0};
            const cplx* row = &m[j * local_dim];
            for (std::uint64_t i = 0; i < local_dim; ++i) acc += row[i] * local[i];
            out[base + offsets[j]] = acc;
        }
    }
    return Labstate::from_amplitudes(rank, std::move(out));
}

LocalOperator compose_disjoint(const LocalOperator& first, const LocalOperator& second) {
    for (int t1 : first.targets()) {
        for (int t2 : second.targets()) {
            if (t1 == t2) {
                throw OverlapError("operators overlap on detector " + std::to_string(t1));
            }
        }
    }
    std::vector<int> targets = first.targets();
    targets.insert(targets.end(), second.targets().begin(), second.targets().end());

    const std::uint64_t d1 = first.dim();
    const std::uint64_t d2 = second.dim();
    const std::uint64_t d = d1 * d2;
    std::vector<cplx> m(d * d, cplx{0.0, 0.0});
    for (std::uint64_t j2 = 0; j2 < d2; ++j2) {
        for (std::uint64_t j1 = 0; j1 < d1; ++j1) {
            for (std::uint64_t i2 = 0; i2 < d2; ++i2) {
                for (std::uint64_t i1 = 0; i1 < d1; ++i1) {
                    m[((j2 * d1 + j1) * d) + (i2 * d1 + i1)] =
                        first.entry(j1, i1) * second.entry(j2, i2);
                }
            }
        }
    }
    return LocalOperator(std::move(targets), std::move(m));
}

AuditReport locality_audit(const Labstate& state, const LocalOperator& op,
                           int trials, std::uint64_t seed) {
    if (!state.normalized()) {
        throw NormalizationError("locality audit needs a normalized labstate");
    }
    if (trials < 0) throw DomainError("trials must be >= 0");
    for (int t : op.targets()) detail::check_detector(t, state.rank());

    std::vector<int> complement;
    for (int d = 1; d <= state.rank(); ++d) {
        if (std::find(op.targets().begin(), op.targets().end(), d) ==
            op.targets().end()) {
            complement.push_back(d);
        }
    }
    if (complement.empty()) {
        throw DetectorError("audit needs at least one remote detector");
    }

    Rng rng(seed);
    double delta = 0.0;
    const auto bump = [&delta](double d) { delta = std::max(delta, d); };
    const auto compare_dist = [&bump](const std::vector<double>& a,
                                      const std::vector<double>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) bump(std::abs(a[i] - b[i]));
    };

    const Labstate after = apply_local(op, state);

    compare_dist(subset_distribution(after, complement),
                 subset_distribution(state, complement));
    for (int t = 0; t < trials; ++t) {
        const Proposition q = random_proposition(complement, rng);
        bump(std::abs(partial_probability(after, q) - partial_probability(state, q)));
    }

    // Two-operation variant: a second operation V on the remote side. Each
    // side's statistics must depend only on its own operator. Disjoint
    // operations commute, so sequential application realizes the combined one.
    const LocalOperator v = random_local_operator(complement, rng);
    const Labstate v_only = apply_local(v, state);
    const Labstate both = apply_local(v, after);

    compare_dist(subset_distribution(both, complement),
                 subset_distribution(v_only, complement));
    compare_dist(subset_distribution(both, op.targets()),
                 subset_distribution(after, op.targets()));
    for (int t = 0; t < trials; ++t) {
        const Proposition q_remote = random_proposition(complement, rng);
        bump(std::abs(partial_probability(both, q_remote) -
                      partial_probability(v_only, q_remote)));
        const Proposition q_local = random_proposition(op.targets(), rng);
        bump(std::abs(partial_probability(both, q_local) -
                      partial_probability(after, q_local)));
    }

    AuditReport report;
    report.max_remote_delta = delta;
    report.trials = trials;
    report.pass = delta <= kAuditTolerance;
    return report;
}

}  // namespace qdn
