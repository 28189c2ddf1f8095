"""Core diagnosis types: problem instances and the cost models over nodes.

Components are addressed by dense integer ids ``0..len(K)-1``.  A CNF
clause is a tuple of non-zero signed integers, where literal ``+v`` / ``-v``
refers to variable ``variables[v - 1]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

NEG_INF = float("-inf")

#: adjustment constant used when a probability model is not yet cost-adjusted
DEFAULT_ADJUST = 0.25

Clause = tuple
Sentence = tuple  # tuple of clauses


class DiagnosisError(Exception):
    """Base class for errors raised by this package."""


class DomainError(DiagnosisError, ValueError):
    """An argument refers to something outside the problem's domain."""


class ConfigError(DiagnosisError, ValueError):
    """Invalid search, cost or generator parameters."""


class Mode(str, Enum):
    MAX_PROB = "maxprob"
    MIN_CARD = "mincard"


@dataclass(frozen=True, eq=False)
class Dpi:
    """A diagnosis problem instance ``<K, B, P, N>``.

    Exactly one backend source must be given: per-component CNF
    ``sentences`` (propositional reasoning) or ``conflicts``, an explicit
    list of minimal conflicts over component ids.
    """

    components: tuple
    sentences: Optional[tuple] = None
    background: tuple = ()
    positive: tuple = ()
    negative: tuple = ()
    variables: tuple = ()
    conflicts: Optional[tuple] = None
    probabilities: Optional[tuple] = None
    backend: object = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        names = tuple(self.components)
        if len(set(names)) != len(names):
            raise DomainError("component names must be unique")
        object.__setattr__(self, "components", names)
        if (self.sentences is None) == (self.conflicts is None):
            raise DomainError("exactly one of sentences / conflicts must be given")
        if self.probabilities is not None:
            probs = tuple(float(p) for p in self.probabilities)
            if len(probs) != len(names):
                raise DomainError("probabilities must cover every component")
            object.__setattr__(self, "probabilities", probs)
        from .reasoner import make_backend

        object.__setattr__(self, "backend", make_backend(self))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_conflicts(cls, components: Sequence[str], conflicts: Iterable[Iterable],
                       probabilities=None) -> "Dpi":
        """Build an explicit-conflict instance.

        Conflict members may be given as component names or ids.  The conflict
        list is subset-minimized and de-duplicated, keeping first occurrences.
        """
        names = tuple(components)
        index = {name: i for i, name in enumerate(names)}
        converted = []
        for conflict in conflicts:
            ids = []
            for member in conflict:
                if isinstance(member, str):
                    if member not in index:
                        raise DomainError(f"unknown component {member!r}")
                    ids.append(index[member])
                else:
                    if not 0 <= member < len(names):
                        raise DomainError(f"component id {member} outside K")
                    ids.append(int(member))
            converted.append(tuple(sorted(set(ids))))
        if isinstance(probabilities, dict):
            probabilities = tuple(probabilities[name] for name in names)
        return cls(components=names, conflicts=minimize_sets(converted),
                   probabilities=probabilities)

    @classmethod
    def from_cnf(cls, variables: Sequence[str], components, background=(),
                 positive=(), negative=(), probabilities=None) -> "Dpi":
        """Build a propositional instance from readable clauses.

        ``components`` maps component names to clause lists; a clause is a
        list of literals such as ``"A"`` or ``"-A"`` (or signed 1-based ints).
        ``negative`` is a list of sentences, each a clause list.
        """
        variables = tuple(variables)
        if isinstance(components, dict):
            components = list(components.items())
        names = tuple(name for name, _ in components)
        sentences = tuple(parse_sentence(cnf, variables) for _, cnf in components)
        if isinstance(probabilities, dict):
            probabilities = tuple(probabilities[name] for name in names)
        return cls(components=names, sentences=sentences,
                   background=parse_sentence(background, variables),
                   positive=parse_sentence(positive, variables),
                   negative=tuple(parse_sentence(s, variables) for s in negative),
                   variables=variables, probabilities=probabilities)

    # -- convenience ----------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.components)

    @property
    def all_ids(self) -> frozenset:
        return frozenset(range(len(self.components)))

    def ids(self, names: Iterable[str]) -> frozenset:
        index = {name: i for i, name in enumerate(self.components)}
        try:
            return frozenset(index[n] for n in names)
        except KeyError as exc:
            raise DomainError(f"unknown component {exc.args[0]!r}") from None

    def names(self, ids: Iterable[int]) -> list:
        return [self.components[i] for i in sorted(ids)]

    @property
    def is_explicit(self) -> bool:
        return self.conflicts is not None


def parse_literal(lit, variables: Sequence[str]) -> int:
    if isinstance(lit, bool):
        raise DomainError(f"bad literal {lit!r}")
    if isinstance(lit, int):
        if lit == 0 or abs(lit) > len(variables):
            raise DomainError(f"unknown variable in literal {lit}")
        return lit
    text = str(lit).strip()
    negated = False
    while text[:1] in ("-", "~", "!", "¬"):
        negated = not negated
        text = text[1:].strip()
    try:
        v = variables.index(text) + 1
    except ValueError:
        raise DomainError(f"unknown variable {text!r}") from None
    return -v if negated else v


def parse_sentence(clauses, variables: Sequence[str]) -> tuple:
    return tuple(tuple(parse_literal(l, variables) for l in clause) for clause in clauses)


def format_literal(lit: int, variables: Sequence[str]) -> str:
    name = variables[abs(lit) - 1]
    return name if lit > 0 else "-" + name


def minimize_sets(sets: Iterable[Iterable[int]]) -> tuple:
    """Drop duplicates and proper supersets, keeping first-occurrence order."""
    unique = []
    for s in sets:
        t = tuple(sorted(set(s)))
        if t not in unique:
            unique.append(t)
    frozen = [frozenset(t) for t in unique]
    return tuple(t for t, fs in zip(unique, frozen)
                 if not any(other < fs for other in frozen))


# -- probabilities and costs --------------------------------------------------

def diagnosis_probability(X: Iterable[int], pr: Sequence[float], K: Optional[Iterable[int]] = None) -> float:
    """Probability that exactly the components in ``X`` are faulty.

    Evaluated in log space.  ``K`` defaults to all indices of ``pr``.
    """
    ids = range(len(pr)) if K is None else sorted(K)
    members = set(X)
    universe = set(ids)
    if not members <= universe:
        raise DomainError(f"components {sorted(members - universe)} outside K")
    for i in ids:
        if not 0.0 < pr[i] < 1.0:
            raise DomainError(f"pr[{i}]={pr[i]} not in (0, 1)")
    terms = [math.log(pr[i]) if i in members else math.log1p(-pr[i]) for i in ids]
    return math.exp(math.fsum(terms))


def cost_adjust(pr: Sequence[float], c: float = DEFAULT_ADJUST) -> tuple:
    """Scale all fault probabilities by ``c`` so each ends up below 0.5."""
    if not 0.0 < c < 0.5:
        raise ConfigError(f"adjustment constant {c} not in (0, 0.5)")
    for p in pr:
        if not 0.0 < p < 1.0:
            raise DomainError(f"probability {p} not in (0, 1)")
    return tuple(c * p for p in pr)


class CostModel:
    """Node cost function: log-probability (MaxProb) or negated cardinality (MinCard).

    Higher cost is better.  ``NEG_INF`` is below every cost a node can have.
    """

    def __init__(self, mode=Mode.MAX_PROB, pr: Optional[Sequence[float]] = None,
                 c: Optional[float] = None):
        self.mode = Mode(mode)
        self.c = DEFAULT_ADJUST if c is None else c
        if not 0.0 < self.c < 0.5:
            raise ConfigError(f"adjustment constant {self.c} not in (0, 0.5)")
        if self.mode is Mode.MAX_PROB:
            if pr is None:
                raise ConfigError("MaxProb mode needs fault probabilities")
            pr = tuple(float(p) for p in pr)
            if c is not None or any(p >= 0.5 for p in pr):
                pr = cost_adjust(pr, self.c)
            for p in pr:
                if not 0.0 < p < 0.5:
                    raise DomainError(f"probability {p} not in (0, 0.5) after adjustment")
            self.pr = pr
            self._base = math.fsum(math.log1p(-p) for p in pr)
            self._log_odds = tuple(math.log(p) - math.log1p(-p) for p in pr)
        else:
            self.pr = None

    @classmethod
    def max_prob(cls, pr, c=None) -> "CostModel":
        return cls(Mode.MAX_PROB, pr, c)

    @classmethod
    def min_card(cls) -> "CostModel":
        return cls(Mode.MIN_CARD)

    @classmethod
    def for_dpi(cls, dpi: Dpi, mode) -> "CostModel":
        mode = Mode(mode)
        if mode is Mode.MIN_CARD:
            return cls.min_card()
        pr = dpi.probabilities
        if pr is None:
            pr = (DEFAULT_ADJUST,) * dpi.size
        return cls.max_prob(pr)

    def cost(self, members: Iterable[int]) -> float:
        if self.mode is Mode.MIN_CARD:
            return -float(len(members) if hasattr(members, "__len__") else len(list(members)))
        odds = self._log_odds
        return math.fsum([self._base, *(odds[i] for i in sorted(members))])

    def probabilities(self, size: int) -> tuple:
        """Fault probabilities used for diagnosis weighting.

        MinCard has no fault model; it is treated as a uniform one.
        """
        if self.pr is not None:
            return self.pr
        return (self.c,) * size

    def __repr__(self):
        return f"CostModel({self.mode.value})"


def f_cost(members: Iterable[int], model: CostModel) -> float:
    return model.cost(members)


def normalize(values: Sequence[float]) -> list:
    total = math.fsum(values)
    return [v / total for v in values]
