"""Hybrid Best-First Hitting Set Search (HBF-HS).

HS-Tree runs until a switch criterion fires.  Its open nodes then become the
children of a virtual root (bound ``-inf``), set-equal duplicates are
dropped, diagnoses and conflicts are kept, and RBF-HS finishes the search
over that child list.
"""
from __future__ import annotations

from dataclasses import dataclass

from .hstree import OpenQueue, resolve_model, run_queue
from .model import NEG_INF, ConfigError
from .rbfhs import Child, drive, explore_children
from .search import Session


@dataclass(frozen=True)
class NodeCount:
    """Switch once this many nodes have been generated."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ConfigError("NodeCount needs a positive node count")

    def fired(self, session: Session, queue) -> bool:
        return session.metrics.nodes_generated >= self.n


@dataclass(frozen=True)
class MemoryFraction:
    """Switch once stored nodes reach ``frac * budget`` (budget in nodes)."""

    frac: float
    budget: int

    def __post_init__(self):
        if not 0.0 < self.frac <= 1.0 or self.budget < 1:
            raise ConfigError("MemoryFraction needs frac in (0, 1] and a positive budget")

    def fired(self, session: Session, queue) -> bool:
        stored = len(queue) + len(session.D) + len(session.C)
        return stored >= self.frac * self.budget


def parse_criterion(text: str):
    """Parse ``nodecount:N`` or ``memfrac:F[:BUDGET]`` (default budget 10000)."""
    kind, _, rest = text.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "nodecount":
            return NodeCount(int(rest))
        if kind == "memfrac":
            frac, _, budget = rest.partition(":")
            return MemoryFraction(float(frac), int(budget) if budget else 10000)
    except ValueError as exc:
        raise ConfigError(f"bad switch criterion {text!r}: {exc}") from None
    raise ConfigError(f"unknown switch criterion {text!r}")


def dedup(nodes) -> list:
    seen = set()
    out = []
    for n in nodes:
        if n not in seen:
            seen.add(n)
            out.append(n)
    return out


def hbf_hs(dpi, model=None, ld=None, criterion=NodeCount(1000), duplicate_check=False,
           check_invariants=False, record_trace=False):
    """Return the ``ld`` best minimal diagnoses and metrics.

    ``metrics.switch_point`` holds the generated-node count at the switch
    (``None`` if HS-Tree finished alone), ``metrics.post_switch_peak`` the
    largest number of tree nodes added on top of the virtual root's child
    list, and ``metrics.switch_snapshot`` the state handed over.
    """
    if isinstance(criterion, str):
        criterion = parse_criterion(criterion)
    session = Session(dpi, resolve_model(dpi, model), ld, check_invariants, record_trace)
    result = session.start()
    if result is not None:
        return result, session.metrics
    queue = OpenQueue(session)
    queue.push(frozenset())
    switched = run_queue(session, queue, duplicate_check, criterion.fired)
    if not switched:
        return session.finish(), session.metrics

    metrics = session.metrics
    metrics.switch_point = metrics.nodes_generated
    open_nodes = dedup(queue.ordered())
    children = [Child(n, session.cost(n), session.cost(n)) for n in open_nodes]
    snapshot = {
        "D": [tuple(sorted(d)) for d in session.D],
        "C": list(session.C),
        "children": [tuple(sorted(n)) for n in open_nodes],
        "first": None,
        "first_bound": None,
    }
    metrics.switch_snapshot = snapshot

    def on_call(depth, members, F, bound):
        if snapshot["first"] is None:
            snapshot["first"] = tuple(sorted(members))
            snapshot["first_bound"] = bound

    session.set_tree_nodes(0)
    session.window_peak = 0
    drive(session, explore_children(session, children, NEG_INF), None, on_call)
    metrics.post_switch_peak = max(session.window_peak - len(children), 0)
    return session.finish(), metrics
