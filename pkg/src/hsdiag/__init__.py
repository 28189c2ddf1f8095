"""Memory-limited model-based diagnosis.

Finds minimal diagnoses in best-first order.  ``hs_tree`` keeps the whole
open queue while ``rbf_hs`` needs memory linear in the search depth;
``hbf_hs`` starts like the former and finishes like the latter.  Probing
sessions live in :mod:`hsdiag.sequential`; the brute-force oracle and the
instance generator live in :mod:`hsdiag.harness`.
"""
from .conflict import find_min_conflict, quickxplain
from .hbfhs import MemoryFraction, NodeCount, hbf_hs, parse_criterion
from .hstree import hs_tree
from .model import (NEG_INF, ConfigError, CostModel, DiagnosisError, DomainError, Dpi,
                    Mode, cost_adjust, diagnosis_probability, normalize)
from .rbfhs import rbf_hs
from .reasoner import is_diagnosis, violates
from .search import InvariantViolation, SearchMetrics
from .sequential import (NoProbe, SessionResult, apply_answer, run_session,
                         select_probe_ent, select_probe_spl)

__all__ = [
    "NEG_INF", "ConfigError", "CostModel", "DiagnosisError", "DomainError", "Dpi",
    "InvariantViolation", "MemoryFraction", "Mode", "NoProbe", "NodeCount",
    "SearchMetrics", "SessionResult", "apply_answer", "cost_adjust",
    "diagnosis_probability", "find_min_conflict", "hbf_hs", "hs_tree", "is_diagnosis",
    "normalize", "parse_criterion", "quickxplain", "rbf_hs", "run_session",
    "select_probe_ent", "select_probe_spl", "violates",
]
