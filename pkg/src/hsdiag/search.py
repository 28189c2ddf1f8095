"""State and node processing shared by the hitting-set searches."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .conflict import find_min_conflict
from .model import CostModel, ConfigError
from .reasoner import is_diagnosis


class InvariantViolation(AssertionError):
    """A runtime correctness check on the search failed."""


@dataclass
class SearchMetrics:
    """Counters collected by one search run.

    ``peak_tree_nodes`` counts only search-tree nodes held in memory (open
    queue, or the child lists of active recursion frames).
    ``peak_stored_nodes`` adds the stored diagnoses and conflicts.
    ``conflicts_computed`` counts calls of the minimal-conflict routine,
    whether they yield a conflict or "no conflict".  ``conflicts`` lists the
    minimal conflicts held at the end, in discovery order.
    """

    nodes_generated: int = 0
    nodes_explored: int = 0
    peak_tree_nodes: int = 0
    peak_stored_nodes: int = 0
    conflicts_computed: int = 0
    conflicts_reused: int = 0
    consistency_checks: int = 0
    wall_time: float = 0.0
    switch_point: Optional[int] = None
    post_switch_peak: Optional[int] = None
    switch_snapshot: Optional[dict] = None
    trace: Optional[list] = None
    conflicts: Optional[list] = None

    def as_row(self) -> dict:
        return {k: v for k, v in self.__dict__.items()
                if k not in ("trace", "switch_snapshot", "conflicts")}


def normalize_ld(ld) -> Optional[int]:
    """``None``, ``"all"`` and infinity mean unbounded."""
    if ld is None or ld == "all" or ld == float("inf"):
        return None
    ld = int(ld)
    if ld < 1:
        raise ConfigError(f"ld must be positive, got {ld}")
    return ld


CLOSED = "closed"
VALID = "valid"


class Session:
    """Diagnoses ``D``, conflicts ``C`` and metrics of one search."""

    def __init__(self, dpi, model: CostModel, ld=None, check_invariants=False,
                 record_trace=False, metrics=None):
        self.dpi = dpi
        self.model = model
        self.ld = normalize_ld(ld)
        self.check_invariants = check_invariants
        self.D: list = []
        self.C: list = []
        self.metrics = metrics if metrics is not None else SearchMetrics()
        if record_trace:
            self.metrics.trace = []
        self._t0 = time.perf_counter()
        self._tree_nodes = 0
        self.window_peak = 0

    # -- bookkeeping ----------------------------------------------------------

    def cost(self, members) -> float:
        return self.model.cost(members)

    def set_tree_nodes(self, count: int):
        self._tree_nodes = count
        if count > self.window_peak:
            self.window_peak = count
        m = self.metrics
        if count > m.peak_tree_nodes:
            m.peak_tree_nodes = count
        stored = count + len(self.D) + len(self.C)
        if stored > m.peak_stored_nodes:
            m.peak_stored_nodes = stored

    def add_tree_nodes(self, delta: int):
        self.set_tree_nodes(self._tree_nodes + delta)

    @property
    def tree_nodes(self) -> int:
        return self._tree_nodes

    @property
    def done(self) -> bool:
        return self.ld is not None and len(self.D) >= self.ld

    def finish(self) -> list:
        self.metrics.wall_time = time.perf_counter() - self._t0
        self.metrics.conflicts = [tuple(c) for c in self.C]
        self.set_tree_nodes(self._tree_nodes)
        return [tuple(sorted(d)) for d in self.D]

    # -- node processing ------------------------------------------------------

    def start(self) -> Optional[list]:
        """Handle the trivial cases; return a final answer or None to search on."""
        conflict = find_min_conflict(self.dpi, self.dpi.all_ids, self.metrics)
        if conflict is None:
            self.D.append(frozenset())
            return self.finish()
        if len(conflict) == 0:
            return self.finish()
        self.C.append(conflict)
        self.set_tree_nodes(self._tree_nodes)
        return None

    def label(self, node: frozenset, duplicate=None):
        """Label a node: CLOSED, VALID or a minimal conflict (sorted tuple).

        ``duplicate`` is an optional predicate implementing the duplicate check.
        """
        self.metrics.nodes_explored += 1
        if self.metrics.trace is not None:
            self.metrics.trace.append(tuple(sorted(node)))
        for d in self.D:
            if d <= node:
                return CLOSED
        if duplicate is not None and duplicate(node):
            return CLOSED
        for c in self.C:
            if node.isdisjoint(c):
                self.metrics.conflicts_reused += 1
                return c
        conflict = find_min_conflict(self.dpi, self.dpi.all_ids - node, self.metrics)
        if conflict is None:
            return VALID
        if self.check_invariants and (not conflict or not node.isdisjoint(conflict)
                                      or conflict in self.C):
            raise InvariantViolation(f"bad fresh conflict {conflict} for node {sorted(node)}")
        self.C.append(conflict)
        return conflict

    def add_diagnosis(self, node: frozenset):
        if self.check_invariants and not is_diagnosis(node, self.dpi):
            raise InvariantViolation(f"non-diagnosis {sorted(node)} added to D")
        self.D.append(node)
        self.set_tree_nodes(self._tree_nodes)
