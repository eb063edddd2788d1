"""Executable algebraic laws and the adapters that feed them."""

from conjoined.laws.engine import (
    InstanceAdapter,
    Law,
    LawCase,
    LawReport,
    LawSummary,
    case_seed,
    check_error_monad,
    check_extra,
    check_fish_equivalence,
    check_interaction,
    check_value_monad,
    replay,
    reports_to_json,
    run_full_suite,
)

__all__ = [
    "InstanceAdapter",
    "Law",
    "LawCase",
    "LawReport",
    "LawSummary",
    "case_seed",
    "check_error_monad",
    "check_extra",
    "check_fish_equivalence",
    "check_interaction",
    "check_value_monad",
    "replay",
    "reports_to_json",
    "run_full_suite",
]
