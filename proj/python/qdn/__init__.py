"""Quantized detector network simulator.

Signal-qubit registers over a computational basis (detector i is bit i-1),
partial-question probabilities, semi-unitary local operations with an
Einstein-locality auditor, and EPR spin-pair scans of the Wigner inequality.
Detector indices are 1-based throughout.
"""

from qdn._core import (  # noqa: F401
    MAX_RANK,
    AuditReport,
    DenseOperator,
    DetectorError,
    EPRSetup,
    Labstate,
    LocalOperator,
    OverlapError,
    Proposition,
    SGCoefficients,
    SignalOpKind,
    WignerScanRow,
    __version__,
    algebra_check,
    apply_annihilate,
    apply_create,
    apply_local,
    apply_projector,
    basis_index,
    check_semiunitary,
    coefficients_residual,
    compose_disjoint,
    dense_apply,
    dense_embed,
    dense_signal_op,
    fired_detectors,
    inner_product,
    joint_rotation,
    locality_audit,
    maximal_distribution,
    mesh_grid,
    p_plus_plus,
    partial_probability,
    prepare_singlet,
    random_labstate,
    random_local_operator,
    sg_rotation,
    subset_distribution,
    wigner_coefficients,
    wigner_inequality,
    wigner_scan,
)
