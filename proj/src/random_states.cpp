#include "qdn/random_states.hpp"

#include <cmath>

namespace qdn {

Labstate random_labstate(int rank, Rng& rng) {
    detail::check_rank(rank);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(std::uint64_t{1} << rank);
    double n2 = 0.0;
    for (cplx& a : amps) {
        a = cplx{gauss(rng), gauss(rng)};
        n2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (cplx& a : amps) a *= inv;
    return Labstate::from_amplitudes(rank, std::move(amps));
}

std::vector<cplx> random_unitary(std::uint64_t dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    // Column-major scratch so Gram-Schmidt walks contiguous memory.
    std::vector<cplx> cols(dim * dim);
    for (cplx& v : cols) v = cplx{gauss(rng), gauss(rng)};

    const auto column = [&cols, dim](std::uint64_t c) { return &cols[c * dim]; };
    const auto project_out = [dim](const cplx* u, cplx* v) {
        cplx dot{0.0, 0.0};
        for (std::uint64_t r = 0; r < dim; ++r) dot += std::conj(u[r]) * v[r];
        for (std::uint64_t r = 0; r < dim; ++r) v[r] -= dot * u[r];
    };

    for (std::uint64_t c = 0; c < dim; ++c) {
        cplx* v = column(c);
        // two passes keep the columns orthonormal to machine precision
        for (int pass = 0; pass < 2; ++pass) {
            for (std::uint64_t p = 0; p < c; ++p) project_out(column(p), v);
        }
        double n2 = 0.0;
        for (std::uint64_t r = 0; r < dim; ++r) n2 += std::norm(v[r]);
        const double inv = 1.0 / std::sqrt(n2);
        for (std::uint64_t r = 0; r < dim; ++r) v[r] *= inv;
    }

    std::vector<cplx> row_major(dim * dim);
    for (std::uint64_t r = 0; r < dim; ++r) {
        for (std::uint64_t c = 0; c < dim; ++c) row_major[r * dim + c] = cols[c * dim + r];
    }
    return row_major;
}

LocalOperator random_local_operator(std::vector<int> targets, Rng& rng) {
    const std::uint64_t dim = std::uint64_t{1} << targets.size();
    return LocalOperator(std::move(targets), random_unitary(dim, rng));
}

Proposition random_proposition(const std::vector<int>& detectors, Rng& rng) {
    if (detectors.empty()) throw DetectorError("need a nonempty detector pool");
    std::uniform_int_distribution<std::uint64_t> pick(
        1, (std::uint64_t{1} << detectors.size()) - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    const std::uint64_t chosen = pick(rng);
    Proposition q;
    for (std::size_t m = 0; m < detectors.size(); ++m) {
        if (chosen & (std::uint64_t{1} << m)) {
            if (coin(rng)) {
                q.fired(detectors[m]);
            } else {
                q.voided(detectors[m]);
            }
        }
    }
    return q;
}

std::vector<int> random_proper_subset(int rank, Rng& rng) {
    detail::check_rank(rank);
    if (rank < 2) throw DetectorError("no proper nonempty subset exists at rank 1");
    const std::uint64_t full = (std::uint64_t{1} << rank) - 1;
    std::uniform_int_distribution<std::uint64_t> pick(1, full - 1);
    const std::uint64_t mask = pick(rng);
    std::vector<int> subset;
    for (int d = 1; d <= rank; ++d) {
        if (mask & (std::uint64_t{1} << (d - 1))) subset.push_back(d);
    }
    return subset;
}

}  // namespace qdn
