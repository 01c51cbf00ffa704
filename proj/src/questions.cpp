#include "qdn/questions.hpp"

#include <cctype>
#include <cmath>

namespace qdn {

Proposition& Proposition::fired(int detector) {
    clauses_.push_back({detector, true});
    return *this;
}

Proposition& Proposition::voided(int detector) {
    clauses_.push_back({detector, false});
    return *this;
}

Proposition Proposition::parse(std::string_view text) {
    std::vector<Clause> clauses;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == start || pos >= text.size() ||
            (text[pos] != '+' && text[pos] != '-')) {
            throw DomainError("bad proposition token near '" +
                              std::string(text.substr(start)) +
                              "' (expected forms like 1+ or 2-)");
        }
        const int detector = std::stoi(std::string(text.substr(start, pos - start)));
        clauses.push_back({detector, text[pos] == '+'});
        ++pos;
    }
    return Proposition(std::move(clauses));
}

std::string Proposition::to_string() const {
    std::string out;
    for (const Clause& c : clauses_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(c.detector);
        out += c.fired ? '+' : '-';
    }
    return out;
}

namespace {

void require_normalized(const Labstate& state) {
    if (!state.normalized()) {
        throw NormalizationError("labstate is not normalized (|norm^2 - 1| > 1e-12)");
    }
}

}  // namespace

double partial_probability(const Labstate& state, const Proposition& question) {
    require_normalized(state);
    std::uint64_t must_fire = 0;
    std::uint64_t must_void = 0;
    for (const Clause& c : question.clauses()) {
        detail::check_detector(c.detector, state.rank());
        const std::uint64_t mask = std::uint64_t{1} << (c.detector - 1);
        if (c.fired) {
            must_fire |= mask;
        } else {
            must_void |= mask;
        }
    }
    // A contradictory product contains P-bar_i P_i = 0, which annihilates
    // every state.
    if (must_fire & must_void) return 0.0;

    const auto& amps = state.amplitudes();
    double prob = 0.0;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & must_fire) == must_fire && (k & must_void) == 0) {
            prob += std::norm(amps[k]);
        }
    }
    return prob;
}

std::vector<double> maximal_distribution(const Labstate& state) {
    require_normalized(state);
    const auto& amps = state.amplitudes();
    std::vector<double> out(amps.size());
    for (std::size_t k = 0; k < amps.size(); ++k) out[k] = std::norm(amps[k]);
    return out;
}

std::vector<double> subset_distribution(const Labstate& state,
                                        const std::vector<int>& detectors) {
    require_normalized(state);
    if (detectors.empty()) throw DetectorError("subset must be nonempty");
    std::uint64_t seen = 0;
    for (int d : detectors) {
        detail::check_detector(d, state.rank());
        const std::uint64_t mask = std::uint64_t{1} << (d - 1);
        if (seen & mask) {
            throw DetectorError("subset indices must be distinct, duplicate " +
                                std::to_string(d));
        }
        seen |= mask;
    }

    const auto& amps = state.amplitudes();
    std::vector<double> out(std::size_t{1} << detectors.size(), 0.0);
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        std::uint64_t pattern = 0;
        for (std::size_t m = 0; m < detectors.size(); ++m) {
            if (k & (std::uint64_t{1} << (detectors[m] - 1))) {
                pattern |= std::uint64_t{1} << m;
            }
        }
        out[pattern] += std::norm(amps[k]);
    }
    return out;
}

}  // namespace qdn
