#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdn/labstate.hpp"

namespace qdn {

/// One asserted outcome: detector i fired (s_i = 1) or void (s_i = 0).
struct Clause {
    int detector = 0;
    bool fired = false;

    friend bool operator==(const Clause&, const Clause&) = default;
};

/// An ordered product of projector assertions over a subset of detectors.
/// A detector may appear twice with contradictory outcomes; that product
/// annihilates every state, so the question's answer is exactly zero.
class Proposition {
public:
    Proposition() = default;
    explicit Proposition(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {}

    Proposition& fired(int detector);
    Proposition& voided(int detector);

    /// Parses tokens like "1+ 2- 4+" (+ fired, - void). Whitespace separated.
    static Proposition parse(std::string_view text);

    const std::vector<Clause>& clauses() const { return clauses_; }
    bool empty() const { return clauses_.empty(); }

    std::string to_string() const;

private:
    std::vector<Clause> clauses_;
};

/// (Psi| EPO-product |Psi) for the product named by the proposition: apply each
/// asserted projector, then take the squared norm. The empty proposition is the
/// normalization question. Requires a normalized state.
double partial_probability(const Labstate& state, const Proposition& question);

/// Probability |Psi_k|^2 of every maximal outcome, indexed by basis index.
std::vector<double> maximal_distribution(const Labstate& state);

/// Probabilities of the 2^m fired/void patterns over an ordered detector
/// subset; pattern bit j corresponds to detectors[j]. Sums to 1.
std::vector<double> subset_distribution(const Labstate& state,
                                        const std::vector<int>& detectors);

}  // namespace qdn
