#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdn/epr.hpp"
#include "qdn/local_ops.hpp"
#include "qdn/oracle.hpp"
#include "qdn/questions.hpp"
#include "qdn/random_states.hpp"
#include "qdn/signal_ops.hpp"
#include "qdn/stern_gerlach.hpp"

#ifndef QDN_VERSION
#define QDN_VERSION "0.0.0"
#endif

namespace py = pybind11;

namespace {

qdn::Proposition proposition_from_object(const py::object& obj) {
    if (py::isinstance<qdn::Proposition>(obj)) return obj.cast<qdn::Proposition>();
    if (py::isinstance<py::str>(obj)) {
        return qdn::Proposition::parse(obj.cast<std::string>());
    }
    // sequence of (detector, fired) pairs
    qdn::Proposition q;
    for (py::handle item : obj) {
        auto pair = item.cast<std::pair<int, bool>>();
        if (pair.second) {
            q.fired(pair.first);
        } else {
            q.voided(pair.first);
        }
    }
    return q;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantized detector network simulator: signal-qubit registers, "
              "partial questions, local operations and EPR spin pairs";
    m.attr("__version__") = QDN_VERSION;
    m.attr("MAX_RANK") = qdn::kMaxRank;

    py::register_exception<qdn::DetectorError>(m, "DetectorError", PyExc_IndexError);
    py::register_exception<qdn::OverlapError>(m, "OverlapError", PyExc_ValueError);

    py::class_<qdn::Labstate>(m, "Labstate")
        .def_static("void_state", &qdn::Labstate::void_state, py::arg("rank"))
        .def_static("basis_state", &qdn::Labstate::basis_state, py::arg("rank"),
                    py::arg("index"))
        .def_static("from_amplitudes", &qdn::Labstate::from_amplitudes,
                    py::arg("rank"), py::arg("amplitudes"))
        .def_property_readonly("rank", &qdn::Labstate::rank)
        .def_property_readonly("dim", &qdn::Labstate::dim)
        .def_property_readonly("normalized", &qdn::Labstate::normalized)
        .def_property_readonly("amplitudes", &qdn::Labstate::amplitudes)
        .def("amplitude", &qdn::Labstate::amplitude, py::arg("index"))
        .def("norm_squared", &qdn::Labstate::norm_squared)
        .def("__add__", &qdn::Labstate::operator+)
        .def("__sub__", &qdn::Labstate::operator-)
        .def("scaled", &qdn::Labstate::scaled, py::arg("factor"))
        .def("__repr__", [](const qdn::Labstate& s) {
            return "<Labstate rank=" + std::to_string(s.rank()) +
                   (s.normalized() ? " normalized>" : " unnormalized>");
        });

    m.def("inner_product", &qdn::inner_product, py::arg("a"), py::arg("b"));
    m.def("basis_index", [](int rank, const std::vector<int>& fired) {
        return qdn::basis_index(qdn::BasisOutcome{rank, fired});
    }, py::arg("rank"), py::arg("fired"));
    m.def("fired_detectors", [](int rank, std::uint64_t index) {
        return qdn::outcome_from_index(rank, index).fired;
    }, py::arg("rank"), py::arg("index"));

    m.def("apply_create", &qdn::apply_create, py::arg("detector"), py::arg("state"));
    m.def("apply_annihilate", &qdn::apply_annihilate, py::arg("detector"),
          py::arg("state"));
    m.def("apply_projector", &qdn::apply_projector, py::arg("detector"),
          py::arg("fired"), py::arg("state"));
    m.def("algebra_check", [](int rank, int trials, std::uint64_t seed) {
        py::dict out;
        for (const auto& [name, residual] : qdn::algebra_check(rank, trials, seed).residuals) {
            out[py::str(name)] = residual;
        }
        return out;
    }, py::arg("rank"), py::arg("trials") = 100, py::arg("seed") = 0);

    py::class_<qdn::Proposition>(m, "Proposition")
        .def(py::init<>())
        .def_static("parse", &qdn::Proposition::parse, py::arg("text"))
        .def("fired", &qdn::Proposition::fired, py::arg("detector"))
        .def("voided", &qdn::Proposition::voided, py::arg("detector"))
        .def("__str__", &qdn::Proposition::to_string)
        .def("__repr__", [](const qdn::Proposition& p) {
            return "<Proposition '" + p.to_string() + "'>";
        });

    m.def("partial_probability", [](const qdn::Labstate& state, const py::object& q) {
        return qdn::partial_probability(state, proposition_from_object(q));
    }, py::arg("state"), py::arg("question"),
       "Question may be a Proposition, a string like '1+ 2-', or a sequence of "
       "(detector, fired) pairs.");
    m.def("maximal_distribution", &qdn::maximal_distribution, py::arg("state"));
    m.def("subset_distribution", &qdn::subset_distribution, py::arg("state"),
          py::arg("detectors"));

    py::class_<qdn::LocalOperator>(m, "LocalOperator")
        .def(py::init<std::vector<int>, std::vector<qdn::cplx>>(), py::arg("targets"),
             py::arg("matrix"))
        .def_static("identity", &qdn::LocalOperator::identity, py::arg("targets"))
        .def_property_readonly("targets", &qdn::LocalOperator::targets)
        .def_property_readonly("arity", &qdn::LocalOperator::arity)
        .def_property_readonly("dim", &qdn::LocalOperator::dim)
        .def_property_readonly("matrix", &qdn::LocalOperator::matrix);

    m.def("check_semiunitary", [](const qdn::LocalOperator& op, double tol) {
        const auto r = qdn::check_semiunitary(op, tol);
        return py::make_tuple(r.ok, r.max_residual);
    }, py::arg("op"), py::arg("tol") = 1e-12);
    m.def("apply_local", &qdn::apply_local, py::arg("op"), py::arg("state"));
    m.def("compose_disjoint", &qdn::compose_disjoint, py::arg("first"),
          py::arg("second"));

    py::class_<qdn::AuditReport>(m, "AuditReport")
        .def_readonly("max_remote_delta", &qdn::AuditReport::max_remote_delta)
        .def_readonly("trials", &qdn::AuditReport::trials)
        .def_readonly("pass_", &qdn::AuditReport::pass)
        .def("__repr__", [](const qdn::AuditReport& r) {
            return "<AuditReport max_remote_delta=" +
                   std::to_string(r.max_remote_delta) +
                   (r.pass ? " pass>" : " FAIL>");
        });
    m.def("locality_audit", &qdn::locality_audit, py::arg("state"), py::arg("op"),
          py::arg("trials") = 100, py::arg("seed") = 0);

    py::class_<qdn::SGCoefficients>(m, "SGCoefficients")
        .def(py::init([](qdn::cplx alpha, qdn::cplx beta, qdn::cplx gamma,
                         qdn::cplx delta) {
                 return qdn::SGCoefficients{alpha, beta, gamma, delta};
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"))
        .def_readwrite("alpha", &qdn::SGCoefficients::alpha)
        .def_readwrite("beta", &qdn::SGCoefficients::beta)
        .def_readwrite("gamma", &qdn::SGCoefficients::gamma)
        .def_readwrite("delta", &qdn::SGCoefficients::delta);
    m.def("coefficients_residual", &qdn::coefficients_residual, py::arg("c"));
    m.def("wigner_coefficients", &qdn::wigner_coefficients, py::arg("theta"));
    m.def("sg_rotation", &qdn::sg_rotation, py::arg("up_detector"),
          py::arg("down_detector"), py::arg("c"));

    py::class_<qdn::EPRSetup>(m, "EPRSetup")
        .def(py::init([](int rank, std::vector<qdn::cplx> environment) {
                 return qdn::EPRSetup{rank, std::move(environment)};
             }),
             py::arg("rank") = 4, py::arg("environment") = std::vector<qdn::cplx>{})
        .def_readwrite("rank", &qdn::EPRSetup::rank)
        .def_readwrite("environment", &qdn::EPRSetup::environment);
    m.def("prepare_singlet", &qdn::prepare_singlet, py::arg("setup") = qdn::EPRSetup{});
    m.def("joint_rotation", &qdn::joint_rotation, py::arg("state"), py::arg("a"),
          py::arg("b"));
    m.def("p_plus_plus", [](const qdn::SGCoefficients& a, const qdn::SGCoefficients& b,
                            const qdn::EPRSetup& setup) {
        const auto p = qdn::p_plus_plus(a, b, setup);
        return py::make_tuple(p.simulated, p.closed_form);
    }, py::arg("a"), py::arg("b"), py::arg("setup") = qdn::EPRSetup{});

    py::class_<qdn::WignerScanRow>(m, "WignerScanRow")
        .def_readonly("theta_a", &qdn::WignerScanRow::theta_a)
        .def_readonly("theta_b", &qdn::WignerScanRow::theta_b)
        .def_readonly("theta_c", &qdn::WignerScanRow::theta_c)
        .def_readonly("p_ab", &qdn::WignerScanRow::p_ab)
        .def_readonly("p_bc", &qdn::WignerScanRow::p_bc)
        .def_readonly("p_ac", &qdn::WignerScanRow::p_ac)
        .def_readonly("lhs", &qdn::WignerScanRow::lhs)
        .def_readonly("rhs", &qdn::WignerScanRow::rhs)
        .def_readonly("violated", &qdn::WignerScanRow::violated);
    m.def("wigner_inequality", &qdn::wigner_inequality, py::arg("theta_a"),
          py::arg("theta_b"), py::arg("theta_c"));
    m.def("wigner_scan", [](const std::vector<std::array<double, 3>>& grid) {
        auto result = qdn::wigner_scan(grid);
        return py::make_tuple(std::move(result.rows), result.violations);
    }, py::arg("grid"));
    m.def("mesh_grid", &qdn::mesh_grid, py::arg("start"), py::arg("stop"),
          py::arg("step"));

    py::enum_<qdn::SignalOpKind>(m, "SignalOpKind")
        .value("Create", qdn::SignalOpKind::Create)
        .value("Annihilate", qdn::SignalOpKind::Annihilate)
        .value("ProjFired", qdn::SignalOpKind::ProjFired)
        .value("ProjVoid", qdn::SignalOpKind::ProjVoid);

    py::class_<qdn::DenseOperator>(m, "DenseOperator")
        .def_readonly("rank", &qdn::DenseOperator::rank)
        .def_readonly("matrix", &qdn::DenseOperator::matrix)
        .def_property_readonly("dim", &qdn::DenseOperator::dim);
    m.def("dense_signal_op", &qdn::dense_signal_op, py::arg("kind"), py::arg("detector"),
          py::arg("rank"));
    m.def("dense_embed", &qdn::dense_embed, py::arg("op"), py::arg("rank"));
    m.def("dense_apply", &qdn::dense_apply, py::arg("op"), py::arg("state"));

    m.def("random_labstate", [](int rank, std::uint64_t seed) {
        qdn::Rng rng(seed);
        return qdn::random_labstate(rank, rng);
    }, py::arg("rank"), py::arg("seed") = 0);
    m.def("random_local_operator", [](std::vector<int> targets, std::uint64_t seed) {
        qdn::Rng rng(seed);
        return qdn::random_local_operator(std::move(targets), rng);
    }, py::arg("targets"), py::arg("seed") = 0);
}
