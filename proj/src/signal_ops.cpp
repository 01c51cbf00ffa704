#include "qdn/signal_ops.hpp"

#include <algorithm>
#include <cmath>

#include "qdn/oracle.hpp"
#include "qdn/random_states.hpp"

namespace qdn {

namespace {

std::uint64_t detector_mask(int detector) {
    return std::uint64_t{1} << (detector - 1);
}

}  // namespace

Labstate apply_create(int detector, const Labstate& state) {
    detail::check_detector(detector, state.rank());
    const std::uint64_t mask = detector_mask(detector);
    const auto& in = state.amplitudes();
    std::vector<cplx> out(in.size(), cplx{0.0, 0.0});
    for (std::uint64_t k = 0; k < in.size(); ++k) {
        if (!(k & mask)) out[k | mask] = in[k];
    }
    return Labstate::from_amplitudes(state.rank(), std::move(out));
}

Labstate apply_annihilate(int detector, const Labstate& state) {
    detail::check_detector(detector, state.rank());
    const std::uint64_t mask = detector_mask(detector);
    const auto& in = state.amplitudes();
    std::vector<cplx> out(in.size(), cplx{0.0, 0.0});
    for (std::uint64_t k = 0; k < in.size(); ++k) {
        if (k & mask) out[k ^ mask] = in[k];
    }
    return Labstate::from_amplitudes(state.rank(), std::move(out));
}

Labstate apply_projector(int detector, bool fired, const Labstate& state) {
    detail::check_detector(detector, state.rank());
    const std::uint64_t mask = detector_mask(detector);
    std::vector<cplx> out(state.amplitudes());
    for (std::uint64_t k = 0; k < out.size(); ++k) {
        const bool bit = (k & mask) != 0;
        if (bit != fired) out[k] = cplx{0.0, 0.0};
    }
    return Labstate::from_amplitudes(state.rank(), std::move(out));
}

double AlgebraReport::max_residual() const {
    double worst = 0.0;
    for (const auto& [name, r] : residuals) worst = std::max(worst, r);
    return worst;
}

bool AlgebraReport::all_within(double tol) const {
    return std::all_of(residuals.begin(), residuals.end(),
                       [tol](const auto& entry) { return entry.second <= tol; });
}

namespace {

using Op = Labstate (*)(int, const Labstate&);

Labstate op_create(int i, const Labstate& s) { return apply_create(i, s); }
Labstate op_annihilate(int i, const Labstate& s) { return apply_annihilate(i, s); }
Labstate op_proj_fired(int i, const Labstate& s) { return apply_projector(i, true, s); }
Labstate op_proj_void(int i, const Labstate& s) { return apply_projector(i, false, s); }

struct ResidualTable {
    std::vector<std::pair<std::string, double>> entries;

    void record(const std::string& name, double value) {
        for (auto& [n, v] : entries) {
            if (n == name) {
                v = std::max(v, value);
                return;
            }
        }
        entries.emplace_back(name, value);
    }
};

// ||(AB + BA)s - rhs|| with A, B single-detector operators.
double anticommutator_residual(Op a, int ia, Op b, int ib, const Labstate& s,
                               const Labstate& rhs) {
    const Labstate lhs = a(ia, b(ib, s)) + b(ib, a(ia, s));
    return max_abs_diff(lhs, rhs);
}

double commutator_residual(Op a, int ia, Op b, int ib, const Labstate& s) {
    return max_abs_diff(a(ia, b(ib, s)), b(ib, a(ia, s)));
}

}  // namespace

AlgebraReport algebra_check(int rank, int trials, std::uint64_t seed) {
    if (rank < 1 || rank > kMaxOracleRank) {
        throw RankError("algebra check supports ranks 1.." +
                        std::to_string(kMaxOracleRank));
    }
    if (trials < 1) throw DomainError("trials must be >= 1");

    ResidualTable table;
    Rng rng(seed);
    const Labstate zero =
        Labstate::void_state(rank).scaled(cplx{0.0, 0.0});
    const Labstate void_state = Labstate::void_state(rank);

    // Dense references, one per operator and detector.
    std::vector<DenseOperator> dense_create, dense_annihilate, dense_pf, dense_pv;
    for (int i = 1; i <= rank; ++i) {
        dense_create.push_back(dense_signal_op(SignalOpKind::Create, i, rank));
        dense_annihilate.push_back(dense_signal_op(SignalOpKind::Annihilate, i, rank));
        dense_pf.push_back(dense_signal_op(SignalOpKind::ProjFired, i, rank));
        dense_pv.push_back(dense_signal_op(SignalOpKind::ProjVoid, i, rank));
    }

    for (int i = 1; i <= rank; ++i) {
        table.record("proj_fired_on_void",
                     max_abs(apply_projector(i, true, void_state)));
        table.record("annihilate_on_void", max_abs(apply_annihilate(i, void_state)));
    }

    for (int t = 0; t < trials; ++t) {
        const Labstate s = random_labstate(rank, rng);

        for (int i = 1; i <= rank; ++i) {
            // signal algebra, same index
            table.record("anticommutator_annihilate_annihilate",
                         anticommutator_residual(op_annihilate, i, op_annihilate, i, s, zero));
            table.record("anticommutator_create_create",
                         anticommutator_residual(op_create, i, op_create, i, s, zero));
            table.record("anticommutator_annihilate_create",
                         anticommutator_residual(op_annihilate, i, op_create, i, s, s));

            // quadratic projector relations
            table.record("projector_completeness",
                         max_abs_diff(apply_projector(i, true, s) +
                                          apply_projector(i, false, s),
                                      s));

            // cubic relations (product notation reads right to left)
            table.record("proj_fired_after_annihilate",
                         max_abs(op_proj_fired(i, op_annihilate(i, s))));
            table.record("create_after_proj_fired",
                         max_abs(op_create(i, op_proj_fired(i, s))));
            table.record("proj_void_after_create",
                         max_abs(op_proj_void(i, op_create(i, s))));
            table.record("annihilate_after_proj_void",
                         max_abs(op_annihilate(i, op_proj_void(i, s))));
            table.record("proj_fired_after_create",
                         max_abs_diff(op_proj_fired(i, op_create(i, s)), op_create(i, s)));
            table.record("create_after_proj_void",
                         max_abs_diff(op_create(i, op_proj_void(i, s)), op_create(i, s)));
            table.record("annihilate_after_proj_fired",
                         max_abs_diff(op_annihilate(i, op_proj_fired(i, s)),
                                      op_annihilate(i, s)));
            table.record("proj_void_after_annihilate",
                         max_abs_diff(op_proj_void(i, op_annihilate(i, s)),
                                      op_annihilate(i, s)));

            // quartic relations, same index
            table.record("proj_fired_idempotent",
                         max_abs_diff(op_proj_fired(i, op_proj_fired(i, s)),
                                      op_proj_fired(i, s)));
            table.record("proj_void_idempotent",
                         max_abs_diff(op_proj_void(i, op_proj_void(i, s)),
                                      op_proj_void(i, s)));
            table.record("proj_orthogonal_fired_void",
                         max_abs(op_proj_fired(i, op_proj_void(i, s))));
            table.record("proj_orthogonal_void_fired",
                         max_abs(op_proj_void(i, op_proj_fired(i, s))));

            // dense-oracle equivalence per operator
            table.record("oracle_create",
                         max_abs_diff(op_create(i, s), dense_apply(dense_create[i - 1], s)));
            table.record("oracle_annihilate",
                         max_abs_diff(op_annihilate(i, s),
                                      dense_apply(dense_annihilate[i - 1], s)));
            table.record("oracle_proj_fired",
                         max_abs_diff(op_proj_fired(i, s), dense_apply(dense_pf[i - 1], s)));
            table.record("oracle_proj_void",
                         max_abs_diff(op_proj_void(i, s), dense_apply(dense_pv[i - 1], s)));
        }

        // cross-detector commutation; vacuous at rank 1
        double comm_aa = 0.0, comm_cc = 0.0, comm_ac = 0.0;
        double comm_pp = 0.0, comm_pv = 0.0, comm_vv = 0.0;
        for (int i = 1; i <= rank; ++i) {
            for (int j = 1; j <= rank; ++j) {
                if (i == j) continue;
                comm_aa = std::max(comm_aa,
                                   commutator_residual(op_annihilate, i, op_annihilate, j, s));
                comm_cc = std::max(comm_cc,
                                   commutator_residual(op_create, i, op_create, j, s));
                comm_ac = std::max(comm_ac,
                                   commutator_residual(op_annihilate, i, op_create, j, s));
                comm_pp = std::max(comm_pp,
                                   commutator_residual(op_proj_fired, i, op_proj_fired, j, s));
                comm_pv = std::max(comm_pv,
                                   commutator_residual(op_proj_fired, i, op_proj_void, j, s));
                comm_vv = std::max(comm_vv,
                                   commutator_residual(op_proj_void, i, op_proj_void, j, s));
            }
        }
        table.record("commutator_annihilate_annihilate", comm_aa);
        table.record("commutator_create_create", comm_cc);
        table.record("commutator_annihilate_create", comm_ac);
        table.record("commutator_proj_fired_fired", comm_pp);
        table.record("commutator_proj_fired_void", comm_pv);
        table.record("commutator_proj_void_void", comm_vv);
    }

    AlgebraReport report;
    report.residuals = std::move(table.entries);
    return report;
}

}  // namespace qdn
