"""Theorem verification harness: instance families, jobs and reports."""

from .instances import (
    CANONICAL_CAP,
    LABELLED_CAP,
    bsv_fixture,
    canonical_form,
    corona_instances,
    enumerate_graphs,
    random_complex,
    random_graph,
    random_interval_rep,
)
from .jobs import THEOREMS, TheoremJob, check_monotone_strong, gb_fixtures, run_job
from .report import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, VerificationReport, load_schema

__all__ = [
    "CANONICAL_CAP",
    "LABELLED_CAP",
    "bsv_fixture",
    "canonical_form",
    "corona_instances",
    "enumerate_graphs",
    "random_complex",
    "random_graph",
    "random_interval_rep",
    "THEOREMS",
    "TheoremJob",
    "check_monotone_strong",
    "gb_fixtures",
    "run_job",
    "EXIT_FAIL",
    "EXIT_INCONCLUSIVE",
    "EXIT_PASS",
    "VerificationReport",
    "load_schema",
]
