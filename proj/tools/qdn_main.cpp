// Command-line front end: algebra verification, locality audits, Wigner
// inequality scans and single partial questions, with deterministic seeded
// output (JSON or CSV).

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdn/epr.hpp"
#include "qdn/local_ops.hpp"
#include "qdn/questions.hpp"
#include "qdn/random_states.hpp"
#include "qdn/serialize.hpp"
#include "qdn/signal_ops.hpp"

#ifndef QDN_VERSION
#define QDN_VERSION "0.0.0"
#endif

namespace {

constexpr double kCheckTolerance = 1e-12;

int run_algebra_check(int rank, int trials, std::uint64_t seed,
                      const std::string& format) {
    const qdn::AlgebraReport report = qdn::algebra_check(rank, trials, seed);
    if (format == "csv") {
        std::cout << "relation,max_residual\n";
        for (const auto& [name, residual] : report.residuals) {
            std::cout << name << ',' << qdn::format_significant(residual) << '\n';
        }
    } else {
        nlohmann::ordered_json out{
            {"rank", rank},
            {"trials", trials},
            {"seed", seed},
            {"relations", qdn::algebra_report_to_json(report)},
            {"max_residual", report.max_residual()},
            {"pass", report.all_within(kCheckTolerance)},
        };
        std::cout << out.dump(2) << '\n';
    }
    return report.all_within(kCheckTolerance) ? 0 : 1;
}

int run_locality_audit(int rank, const std::vector<int>& targets, int trials,
                       std::uint64_t seed) {
    qdn::Rng rng(seed);
    const qdn::Labstate state = qdn::random_labstate(rank, rng);
    const qdn::LocalOperator op = qdn::random_local_operator(targets, rng);
    const qdn::AuditReport report = qdn::locality_audit(state, op, trials, rng());
    std::cout << qdn::audit_report_to_json(report).dump(2) << '\n';
    return report.pass ? 0 : 1;
}

int run_epr_scan(const std::vector<std::array<double, 3>>& grid,
                 const std::string& format) {
    const qdn::WignerScanResult result = qdn::wigner_scan(grid);

    // The scan computes every probability through the full simulation path;
    // cross-check each row against the closed form before emitting it.
    bool consistent = true;
    for (const auto& row : result.rows) {
        const auto a = qdn::wigner_coefficients(row.theta_a);
        const auto b = qdn::wigner_coefficients(row.theta_b);
        const auto c = qdn::wigner_coefficients(row.theta_c);
        const double ab = 0.5 * std::norm(a.alpha * b.gamma - a.gamma * b.alpha);
        const double bc = 0.5 * std::norm(b.alpha * c.gamma - b.gamma * c.alpha);
        const double ac = 0.5 * std::norm(a.alpha * c.gamma - a.gamma * c.alpha);
        if (std::abs(row.p_ab - ab) > kCheckTolerance ||
            std::abs(row.p_bc - bc) > kCheckTolerance ||
            std::abs(row.p_ac - ac) > kCheckTolerance) {
            consistent = false;
        }
    }

    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : result.rows) rows.push_back(qdn::scan_row_to_json(row));
        nlohmann::ordered_json out{{"rows", std::move(rows)},
                                   {"violations", result.violations}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << qdn::scan_csv_header() << '\n';
        for (const auto& row : result.rows) std::cout << qdn::scan_csv_row(row) << '\n';
    }
    std::cerr << "violations: " << result.violations << " / " << result.rows.size()
              << '\n';
    return consistent ? 0 : 1;
}

int run_question(const std::string& state_path, const std::string& proposition) {
    const qdn::Labstate state = qdn::load_labstate(state_path);
    const qdn::Proposition q = qdn::Proposition::parse(proposition);
    std::cout << qdn::format_significant(qdn::partial_probability(state, q)) << '\n';
    return 0;
}

std::array<double, 3> parse_separated(const std::string& text, char sep,
                                      const char* what) {
    std::array<double, 3> out{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t used = 0;
        out[i] = std::stod(text.substr(pos), &used);
        pos += used;
        if (i < 2) {
            if (pos >= text.size() || text[pos] != sep) {
                throw qdn::DomainError(std::string("expected ") + what + ": " + text);
            }
            ++pos;
        }
    }
    if (pos != text.size()) {
        throw qdn::DomainError(std::string("trailing characters in ") + what + ": " + text);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantized detector network simulator"};
    app.set_version_flag("--version", std::string(QDN_VERSION));
    app.require_subcommand(1);

    int rank = 2;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string format = "json";

    auto* algebra = app.add_subcommand(
        "algebra-check", "Verify the signal operator relations on random labstates");
    algebra->add_option("--rank", rank, "Register rank (1..6)")->required();
    algebra->add_option("--trials", trials, "Random labstates per relation")
        ->default_val(100);
    algebra->add_option("--seed", seed, "RNG seed")->default_val(0);
    algebra->add_option("--format", format, "json or csv")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));

    std::vector<int> targets;
    auto* audit = app.add_subcommand(
        "locality-audit",
        "Check that a random local operation cannot shift remote probabilities");
    audit->add_option("--rank", rank, "Register rank")->required();
    audit->add_option("--targets", targets, "Detectors the operation acts on (1-based)")
        ->required()
        ->delimiter(',');
    audit->add_option("--trials", trials, "Random partial questions to try")
        ->default_val(100);
    audit->add_option("--seed", seed, "RNG seed")->default_val(0);

    std::vector<std::string> triples;
    std::string mesh;
    std::string scan_format = "csv";
    auto* scan = app.add_subcommand(
        "epr-scan", "Evaluate the Wigner inequality on singlet-pair rotations");
    scan->add_option("--triple", triples, "Angle triple a,b,c in radians (repeatable)");
    scan->add_option("--mesh", mesh, "Uniform mesh start:stop:step applied to all axes");
    scan->add_option("--format", scan_format, "csv or json")
        ->default_val("csv")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string state_path;
    std::vector<std::string> prop_tokens;
    auto* question = app.add_subcommand(
        "question", "Probability of a signal/void conjunction on a stored labstate");
    question->add_option("--state", state_path, "Labstate JSON file")->required();
    question->add_option("proposition", prop_tokens,
                         "Clauses like 1+ 2- (+ fired, - void); empty asks the "
                         "normalization question");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (algebra->parsed()) return run_algebra_check(rank, trials, seed, format);
        if (audit->parsed()) return run_locality_audit(rank, targets, trials, seed);
        if (scan->parsed()) {
            std::vector<std::array<double, 3>> grid;
            for (const std::string& t : triples) {
                grid.push_back(parse_separated(t, ',', "a,b,c triple"));
            }
            if (!mesh.empty()) {
                const auto [start, stop, step] = parse_separated(mesh, ':', "start:stop:step mesh");
                const auto mesh_triples = qdn::mesh_grid(start, stop, step);
                grid.insert(grid.end(), mesh_triples.begin(), mesh_triples.end());
            }
            if (grid.empty()) {
                std::cerr << "epr-scan needs --triple and/or --mesh\n";
                return 2;
            }
            return run_epr_scan(grid, scan_format);
        }
        if (question->parsed()) {
            std::string text;
            for (const std::string& tok : prop_tokens) {
                if (!text.empty()) text += ' ';
                text += tok;
            }
            return run_question(state_path, text);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
