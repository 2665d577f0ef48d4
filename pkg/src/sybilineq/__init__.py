"""Inequality measurement under pseudonymity.

Wealth distributions, sybil report matrices and aggregations, a catalog of
inequality measures, seeded axiom falsifiers, and a distortion-search
attack engine, fronted by the ``sybilineq`` CLI.
"""

__version__ = "0.1.0"

from .econ import (
    AggregationMatrix,
    ReportMatrix,
    Seed,
    Tolerance,
    WealthDistribution,
    aggregate,
    apply_report,
    check_conservation,
    duplicate,
    is_pure_sybil,
    make_distribution,
    random_aggregation,
    random_pure_sybil,
    transfer,
)
from .measures import (
    Measure,
    atkinson,
    catalog,
    constant_measure,
    cv,
    diagnostic,
    ge,
    gini,
    hhi,
    parse_measure,
    sum_dependent_measure,
    theil_l,
    theil_t,
)
from .axioms import (
    AuditConfig,
    AuditReport,
    Verdict,
    Witness,
    check_aggregation_invariance,
    check_decomposability,
    check_egalitarian_zero,
    check_population_insensitivity,
    check_scale_independence,
    check_sum_dependence,
    check_sybil_proofness,
    check_symmetry,
    check_transfer,
    run_audit,
)
from .attack import AttackResult, maximize_distortion, replay_witness

__all__ = [
    "AggregationMatrix",
    "AttackResult",
    "AuditConfig",
    "AuditReport",
    "Measure",
    "ReportMatrix",
    "Seed",
    "Tolerance",
    "Verdict",
    "WealthDistribution",
    "Witness",
    "aggregate",
    "apply_report",
    "atkinson",
    "catalog",
    "check_aggregation_invariance",
    "check_conservation",
    "check_decomposability",
    "check_egalitarian_zero",
    "check_population_insensitivity",
    "check_scale_independence",
    "check_sum_dependence",
    "check_sybil_proofness",
    "check_symmetry",
    "check_transfer",
    "constant_measure",
    "cv",
    "diagnostic",
    "duplicate",
    "ge",
    "gini",
    "hhi",
    "is_pure_sybil",
    "make_distribution",
    "maximize_distortion",
    "parse_measure",
    "random_aggregation",
    "random_pure_sybil",
    "replay_witness",
    "run_audit",
    "sum_dependent_measure",
    "theil_l",
    "theil_t",
    "transfer",
]
