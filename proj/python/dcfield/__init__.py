"""Exact field towers, closure presentations and finite-group checks."""

from ._dcfield import (
    BaseField,
    Closure,
    Element,
    Error,
    Group,
    Polynomial,
    TowerField,
    factor,
    galois_group,
    is_separable,
    run_cli,
)

__all__ = [
    "BaseField",
    "Closure",
    "Element",
    "Error",
    "Group",
    "Polynomial",
    "TowerField",
    "factor",
    "galois_group",
    "is_separable",
    "run_cli",
]
