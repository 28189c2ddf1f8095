"""Sequential diagnosis sessions with component-health probes.

Each iteration computes the leading diagnoses and picks a component whose
health splits them.  The oracle's answer updates the problem: a healthy
component moves to the background, while a faulty one is retracted and
recorded as confirmed.  The session ends once a single minimal
diagnosis remains.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .hbfhs import NodeCount, hbf_hs
from .hstree import hs_tree
from .model import CostModel, DiagnosisError, DomainError, Dpi, Mode
from .reasoner import is_diagnosis
from .rbfhs import rbf_hs


class NoProbe(DiagnosisError):
    """No component splits the current leading diagnoses."""


class SessionFailure(DiagnosisError):
    pass


def _discriminating(D) -> dict:
    counts = {}
    for d in D:
        for ax in d:
            counts[ax] = counts.get(ax, 0) + 1
    return {ax: k for ax, k in counts.items() if k < len(D)}


def select_probe_spl(D) -> int:
    """Component minimizing the worst-case number of surviving diagnoses."""
    if len(D) < 2:
        raise NoProbe("need at least two diagnoses")
    counts = _discriminating(D)
    if not counts:
        raise NoProbe("no component splits the diagnoses")
    n = len(D)
    return min(sorted(counts), key=lambda ax: max(counts[ax], n - counts[ax]))


def diagnosis_weights(D, pr) -> list:
    """Normalized probabilities of the diagnoses in ``D``."""
    logs = [math.fsum(math.log(pr[i]) - math.log1p(-pr[i]) for i in d) for d in D]
    top = max(logs)
    raw = [math.exp(l - top) for l in logs]
    total = math.fsum(raw)
    return [r / total for r in raw]


def select_probe_ent(D, pr) -> int:
    """Component whose "faulty" answer has probability closest to one half.

    For a yes/no probe this maximizes the expected entropy reduction over
    the leading diagnoses.
    """
    if len(D) < 2:
        raise NoProbe("need at least two diagnoses")
    counts = _discriminating(D)
    if not counts:
        raise NoProbe("no component splits the diagnoses")
    weights = diagnosis_weights(D, pr)
    mass = {ax: math.fsum(w for d, w in zip(D, weights) if ax in d) for ax in counts}
    return min(sorted(counts), key=lambda ax: abs(mass[ax] - 0.5))


def apply_answer(dpi: Dpi, probe: int, faulty: bool) -> Dpi:
    """Problem instance after learning the health of component ``probe``."""
    if not 0 <= probe < dpi.size:
        raise DomainError(f"probe {probe} outside K")
    keep = [i for i in range(dpi.size) if i != probe]
    names = [dpi.components[i] for i in keep]
    probs = None if dpi.probabilities is None else [dpi.probabilities[i] for i in keep]
    if dpi.is_explicit:
        conflicts = []
        for c in dpi.conflicts:
            if probe in c:
                if faulty:
                    continue
                c = [i for i in c if i != probe]
            conflicts.append([dpi.components[i] for i in c])
        return Dpi.from_conflicts(names, conflicts, probs)
    background = tuple(dpi.background)
    if not faulty:
        background += tuple(dpi.sentences[probe])
    return Dpi(components=tuple(names), sentences=tuple(dpi.sentences[i] for i in keep),
               background=background, positive=dpi.positive, negative=dpi.negative,
               variables=dpi.variables, probabilities=probs)


SELECTORS = {"spl": "spl", "ent": "ent"}


def search_function(algorithm: str, criterion=None):
    algorithm = algorithm.lower()
    if algorithm == "hstree":
        return hs_tree
    if algorithm == "rbfhs":
        return rbf_hs
    if algorithm == "hbfhs":
        crit = criterion if criterion is not None else NodeCount(100)

        def run(dpi, model, ld, **kw):
            return hbf_hs(dpi, model, ld, crit, **kw)
        return run
    raise DomainError(f"unknown algorithm {algorithm!r}")


@dataclass
class SessionResult:
    final_diagnosis: tuple
    iterations: int
    probes: list = field(default_factory=list)
    per_iteration: list = field(default_factory=list)


def is_minimal_diagnosis(dpi: Dpi, ids) -> bool:
    ids = frozenset(ids)
    return is_diagnosis(ids, dpi) and all(not is_diagnosis(ids - {a}, dpi) for a in ids)


def run_session(dpi: Dpi, actual=None, ld=4, selector="spl", algorithm="rbfhs",
                mode=None, oracle: Optional[Callable[[str], bool]] = None,
                log: Optional[Callable[[str], None]] = None, criterion=None,
                on_select=None, max_iterations=10_000) -> SessionResult:
    """Run one session; ``actual`` names the hidden faulty components.

    Without ``actual`` an ``oracle(name) -> faulty`` callable must be given.
    ``on_select(D, probe, pr)`` is called before each probe is answered.
    """
    if mode is None:
        mode = Mode.MAX_PROB if dpi.probabilities is not None else Mode.MIN_CARD
    search = search_function(algorithm, criterion)
    if actual is not None:
        actual = set(actual)
        if not is_minimal_diagnosis(dpi, dpi.ids(actual)):
            raise DomainError(f"{sorted(actual)} is not a minimal diagnosis")
        if oracle is None:
            oracle = actual.__contains__
    elif oracle is None:
        raise DomainError("need an actual diagnosis or an oracle")
    selector = selector.lower()
    if selector not in SELECTORS:
        raise DomainError(f"unknown selector {selector!r}")

    current = dpi
    confirmed = []
    result = SessionResult(final_diagnosis=(), iterations=0)
    for it in range(1, max_iterations + 1):
        model = CostModel.for_dpi(current, mode)
        t0 = time.perf_counter()
        D, metrics = search(current, model, ld)
        stop_D = D
        if len(D) == 1 and (ld is not None and ld < 2):
            stop_D, _ = search(current, model, 2)
        elapsed = time.perf_counter() - t0
        stats = {"iteration": it, "time_ms": elapsed * 1000.0, "diagnoses": len(D),
                 "peak_nodes": metrics.peak_stored_nodes,
                 "conflicts_computed": metrics.conflicts_computed}
        result.per_iteration.append(stats)
        if not D:
            raise SessionFailure("no diagnosis left; oracle answers were inconsistent")
        if len(stop_D) <= 1:
            final = set(confirmed) | set(current.names(D[0]))
            order = {name: i for i, name in enumerate(dpi.components)}
            result.final_diagnosis = tuple(sorted(final, key=order.__getitem__))
            if log:
                log(f"iteration={it} final={','.join(result.final_diagnosis) or '∅'}")
            return result
        pr = model.probabilities(current.size)
        if len(D) < 2:
            D = stop_D
        try:
            probe = select_probe_spl(D) if selector == "spl" else select_probe_ent(D, pr)
        except NoProbe as exc:
            raise SessionFailure(str(exc)) from exc
        if on_select is not None:
            on_select(D, probe, pr)
        target = current.components[probe]
        faulty = bool(oracle(target))
        result.probes.append((target, faulty))
        result.iterations += 1
        if log:
            log(f"iteration={it} probe={target} answer={'faulty' if faulty else 'healthy'} "
                f"|D|={len(D)} time_ms={stats['time_ms']:.3f} peak={stats['peak_nodes']} "
                f"conflicts={stats['conflicts_computed']}")
        current = apply_answer(current, probe, faulty)
        if faulty:
            confirmed.append(target)
    raise SessionFailure("iteration limit reached")
