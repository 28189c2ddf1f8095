"""Minimal conflict computation.

:func:`find_min_conflict` returns a sorted tuple of component ids for a
subset-minimal conflict, the empty tuple when ``B ∪ P`` alone is already
violating, and ``None`` when the candidate set contains no conflict.
"""
from __future__ import annotations

import math

from .reasoner import violates


def quickxplain(dpi, candidates, metrics=None):
    """Junker's QuickXplain over the component order of ``candidates``.

    Only the candidate components are minimized; ``B ∪ P`` stays fixed.
    Lower-index components are preferred when several conflicts exist.
    """
    cands = tuple(sorted(candidates))

    def check(S):
        return violates(S, dpi, metrics)

    if not check(cands):
        return None
    if check(()):
        return ()
    return tuple(_qx(check, (), False, cands))


def _qx(check, base, has_delta, cands):
    if has_delta and check(base):
        return ()
    if len(cands) == 1:
        return cands
    k = len(cands) // 2
    c1, c2 = cands[:k], cands[k:]
    d2 = _qx(check, base + c1, bool(c1), c2)
    d1 = _qx(check, base + d2, bool(d2), c1)
    return d1 + d2


def find_min_conflict(dpi, candidates=None, metrics=None, use_quickxplain=False):
    """Compute one minimal conflict of ``<candidates, B, P, N>``.

    Explicit-conflict instances answer from their stored list (first stored
    conflict contained in ``candidates``) unless ``use_quickxplain`` is set.
    """
    if candidates is None:
        candidates = dpi.all_ids
    if metrics is not None:
        metrics.conflicts_computed += 1
    native = getattr(dpi.backend, "min_conflict", None)
    if native is not None and not use_quickxplain:
        if metrics is not None:
            metrics.consistency_checks += 1
        return native(candidates)
    return quickxplain(dpi, candidates, metrics)


def quickxplain_check_bound(conflict_size: int, candidate_count: int) -> float:
    """Upper bound on oracle calls for one QuickXplain run (incl. 2 entry checks)."""
    k = max(conflict_size, 1)
    n = max(candidate_count, k)
    return 2 * k * (1 + math.log2(n / k)) + 2
