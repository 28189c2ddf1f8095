"""Consistency oracles over which conflicts and diagnoses are defined.

Two backends answer ``violates(S)`` for a component set ``S``:

* :class:`CnfBackend` runs a small DPLL solver over ``S ∪ B ∪ P`` and checks
  each negative measurement clause by clause.
* :class:`ExplicitConflictsBackend` holds the complete list of minimal
  conflicts and answers by subset tests.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .model import DomainError


def check_consistent(clauses: Iterable, num_vars: Optional[int] = None) -> bool:
    """Return True iff the CNF clause collection is satisfiable."""
    clauses = [tuple(c) for c in clauses]
    if num_vars is not None:
        for clause in clauses:
            for lit in clause:
                if lit == 0 or abs(lit) > num_vars:
                    raise DomainError(f"unknown variable in literal {lit}")
    return _dpll(clauses, {})


def _dpll(clauses, assignment) -> bool:
    while True:
        unit = None
        open_clauses = []
        for clause in clauses:
            free = []
            for lit in clause:
                val = assignment.get(abs(lit))
                if val is None:
                    free.append(lit)
                elif val == (lit > 0):
                    break
            else:
                if not free:
                    return False
                if len(free) == 1:
                    unit = free[0]
                    break
                open_clauses.append(free)
        if unit is None:
            break
        assignment[abs(unit)] = unit > 0
    if not open_clauses:
        return True
    var = min(abs(lit) for clause in open_clauses for lit in clause)
    for value in (True, False):
        trial = dict(assignment)
        trial[var] = value
        if _dpll(open_clauses, trial):
            return True
    return False


class CnfBackend:
    def __init__(self, dpi):
        self.num_vars = len(dpi.variables)
        self.sentences = dpi.sentences
        self.base = tuple(dpi.background) + tuple(dpi.positive)
        self.negative = dpi.negative
        for clause in self.base + tuple(c for s in self.sentences for c in s) \
                + tuple(c for s in self.negative for c in s):
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise DomainError(f"unknown variable in literal {lit}")
        self.sat_calls = 0

    def violates(self, S) -> bool:
        theory = list(self.base)
        for i in sorted(S):
            theory.extend(self.sentences[i])
        self.sat_calls += 1
        if not _dpll(theory, {}):
            return True
        for sentence in self.negative:
            if all(self._entails_clause(theory, clause) for clause in sentence):
                return True
        return False

    def _entails_clause(self, theory, clause) -> bool:
        self.sat_calls += 1
        return not _dpll(theory + [(-lit,) for lit in clause], {})


class ExplicitConflictsBackend:
    def __init__(self, dpi):
        self.conflicts = tuple(frozenset(c) for c in dpi.conflicts)

    def violates(self, S) -> bool:
        S = S if isinstance(S, (set, frozenset)) else frozenset(S)
        return any(c <= S for c in self.conflicts)

    def min_conflict(self, candidates):
        """First stored minimal conflict inside ``candidates`` (or None)."""
        candidates = frozenset(candidates)
        for c in self.conflicts:
            if c <= candidates:
                return tuple(sorted(c))
        return None


def make_backend(dpi):
    if dpi.conflicts is not None:
        return ExplicitConflictsBackend(dpi)
    if len(dpi.sentences) != len(dpi.components):
        raise DomainError("one sentence per component required")
    return CnfBackend(dpi)


def violates(S: Iterable[int], dpi, metrics=None) -> bool:
    """True iff ``S ∪ B ∪ P`` is inconsistent or entails a negative measurement."""
    S = frozenset(S)
    if metrics is not None:
        metrics.consistency_checks += 1
    return dpi.backend.violates(S)


def is_diagnosis(D: Iterable[int], dpi, metrics=None) -> bool:
    D = frozenset(D)
    if not D <= dpi.all_ids:
        raise DomainError(f"components {sorted(D - dpi.all_ids)} outside K")
    return not violates(dpi.all_ids - D, dpi, metrics)
