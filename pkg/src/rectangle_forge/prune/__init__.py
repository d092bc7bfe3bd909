"""Pruning rules for partial rectangles."""

from .closure import CyclicClosure, cyclic_closure
from .rules import (
    PASS,
    RULE_NAMES,
    RULES,
    PruneVerdict,
    Pruner,
    parse_rules,
    run_pruner,
)

__all__ = [
    "CyclicClosure",
    "cyclic_closure",
    "PASS",
    "RULE_NAMES",
    "RULES",
    "PruneVerdict",
    "Pruner",
    "parse_rules",
    "run_pruner",
]
