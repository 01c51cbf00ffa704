#include "qdn/labstate.hpp"

#include <cmath>
#include <utility>

namespace qdn {

namespace detail {

void check_rank(int rank) {
    if (rank < 1 || rank > kMaxRank) {
        throw RankError("rank must be in 1.." + std::to_string(kMaxRank) + ", got " +
                        std::to_string(rank));
    }
}

void check_detector(int detector, int rank) {
    if (detector < 1 || detector > rank) {
        throw DetectorError("detector index " + std::to_string(detector) +
                            " outside 1.." + std::to_string(rank));
    }
}

}  // namespace detail

Labstate::Labstate(int rank, std::vector<cplx> amps)
    : rank_(rank), amps_(std::move(amps)) {
    double n2 = 0.0;
    for (const cplx& a : amps_) n2 += std::norm(a);
    normalized_ = std::abs(n2 - 1.0) <= kNormTolerance;
}

Labstate Labstate::void_state(int rank) {
    detail::check_rank(rank);
    std::vector<cplx> amps(std::uint64_t{1} << rank, cplx{0.0, 0.0});
    amps[0] = cplx{1.0, 0.0};
    return Labstate(rank, std::move(amps));
}

Labstate Labstate::basis_state(int rank, std::uint64_t index) {
    detail::check_rank(rank);
    const std::uint64_t dim = std::uint64_t{1} << rank;
    if (index >= dim) {
        throw ShapeError("basis index " + std::to_string(index) + " outside 0.." +
                         std::to_string(dim - 1));
    }
    std::vector<cplx> amps(dim, cplx{0.0, 0.0});
    amps[index] = cplx{1.0, 0.0};
    return Labstate(rank, std::move(amps));
}

Labstate Labstate::from_amplitudes(int rank, std::vector<cplx> amplitudes) {
    detail::check_rank(rank);
    const std::uint64_t dim = std::uint64_t{1} << rank;
    if (amplitudes.size() != dim) {
        throw ShapeError("rank " + std::to_string(rank) + " needs " + std::to_string(dim) +
                         " amplitudes, got " + std::to_string(amplitudes.size()));
    }
    return Labstate(rank, std::move(amplitudes));
}

double Labstate::norm_squared() const {
    double n2 = 0.0;
    for (const cplx& a : amps_) n2 += std::norm(a);
    return n2;
}

Labstate Labstate::operator+(const Labstate& other) const {
    if (rank_ != other.rank_) throw RankError("rank mismatch in labstate sum");
    std::vector<cplx> out(amps_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += other.amps_[k];
    return Labstate(rank_, std::move(out));
}

Labstate Labstate::operator-(const Labstate& other) const {
    if (rank_ != other.rank_) throw RankError("rank mismatch in labstate difference");
    std::vector<cplx> out(amps_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= other.amps_[k];
    return Labstate(rank_, std::move(out));
}

Labstate Labstate::scaled(cplx factor) const {
    std::vector<cplx> out(amps_);
    for (cplx& a : out) a *= factor;
    return Labstate(rank_, std::move(out));
}

cplx inner_product(const Labstate& a, const Labstate& b) {
    if (a.rank() != b.rank()) throw RankError("rank mismatch in inner product");
    cplx acc{0.0, 0.0};
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::size_t k = 0; k < av.size(); ++k) acc += std::conj(av[k]) * bv[k];
    return acc;
}

double max_abs_diff(const Labstate& a, const Labstate& b) {
    if (a.rank() != b.rank()) throw RankError("rank mismatch in comparison");
    double worst = 0.0;
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::size_t k = 0; k < av.size(); ++k) {
        worst = std::max(worst, std::abs(av[k] - bv[k]));
    }
    return worst;
}

double max_abs(const Labstate& a) {
    double worst = 0.0;
    for (const cplx& v : a.amplitudes()) worst = std::max(worst, std::abs(v));
    return worst;
}

std::uint64_t basis_index(const BasisOutcome& outcome) {
    std::uint64_t k = 0;
    for (int detector : outcome.fired) {
        detail::check_detector(detector, outcome.rank);
        k |= std::uint64_t{1} << (detector - 1);
    }
    return k;
}

BasisOutcome outcome_from_index(int rank, std::uint64_t index) {
    detail::check_rank(rank);
    BasisOutcome out;
    out.rank = rank;
    for (int i = 1; i <= rank; ++i) {
        if (index & (std::uint64_t{1} << (i - 1))) out.fired.push_back(i);
    }
    return out;
}

}  // namespace qdn
