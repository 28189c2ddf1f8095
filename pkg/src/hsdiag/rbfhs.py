"""Recursive Best-First Hitting Set Search (RBF-HS).

Returns minimal diagnoses in best-first order while storing only the child
lists along the current path.  The recursive procedure is written as a generator: every
recursive call is yielded to a driver loop that keeps the call stack on the
heap, so search depth is not limited by the interpreter's recursion limit.
"""
from __future__ import annotations

from bisect import insort_right

from .hstree import resolve_model
from .model import NEG_INF
from .search import CLOSED, VALID, InvariantViolation, Session


class Child:
    """An entry of a child list; ``members is None`` marks the dummy node."""

    __slots__ = ("members", "f", "F")

    def __init__(self, members, f, F):
        self.members = members
        self.f = f
        self.F = F

    @property
    def is_dummy(self) -> bool:
        return self.members is None

    def __repr__(self):
        if self.members is None:
            return "Child(dummy)"
        return f"Child({sorted(self.members)}, f={self.f:.4g}, F={self.F:.4g})"


def dummy() -> Child:
    return Child(None, NEG_INF, NEG_INF)


def _neg_F(child: Child) -> float:
    return -child.F


class Exit(Exception):
    """Raised once ``ld`` diagnoses are found; unwinds the whole search."""


def expand(node: frozenset, conflict, session: Session) -> list:
    """One child ``node ∪ {e}`` per conflict element, in conflict order."""
    return [Child(node | {e}, session.cost(node | {e}), None) for e in conflict]


def _check_F_below_f(children):
    for c in children:
        if c.F > c.f:
            raise InvariantViolation(f"F > f for node {sorted(c.members)}")


def explore_children(session: Session, children: list, bound: float):
    """Best-first loop over a child list; yields recursive calls.

    Each yield is ``(members, F, bound)`` and must be answered with the
    backed-up F-value of that call.  Returns the final best F-value.
    """
    real = len(children)
    session.add_tree_nodes(real)
    if len(children) == 1:
        children.append(dummy())
    children.sort(key=_neg_F)
    if session.check_invariants:
        _check_F_below_f([c for c in children if not c.is_dummy])
    n1 = children.pop(0)
    n2 = children[0]
    while n1.F >= bound and n1.F > NEG_INF:
        n1.F = yield (n1.members, n1.F, max(bound, n2.F))
        insort_right(children, n1, key=_neg_F)
        n1 = children.pop(0)
        n2 = children[0]
        if session.check_invariants:
            _check_F_below_f([c for c in children + [n1] if not c.is_dummy])
    session.add_tree_nodes(-real)
    return n1.F


def rbf_hs_frame(session: Session, node: frozenset, F: float, bound: float):
    """Generator body of one RBF-HS' call on ``node``."""
    label = session.label(node)
    if label is CLOSED:
        return NEG_INF
    if label is VALID:
        session.add_diagnosis(node)
        if session.done:
            raise Exit
        return NEG_INF
    children = expand(node, label, session)
    session.metrics.nodes_generated += len(children)
    # a parent whose F dropped below its f was explored before; its
    # children inherit the learned value unless their own f is lower
    inherit = session.cost(node) > F
    for c in children:
        c.F = min(F, c.f) if inherit else c.f
    return (yield from explore_children(session, children, bound))


def drive(session: Session, root_gen, root_F=None, on_call=None):
    """Run a generator-based search to completion.

    Returns the final backed-up value, or ``None`` when the search exited
    because ``ld`` diagnoses were found.  ``on_call(depth, members, F, bound)``
    is invoked before every recursive call.
    """
    stack = [(root_gen, root_F)]
    value = None
    check = session.check_invariants
    try:
        while stack:
            gen, F_in = stack[-1]
            try:
                request = gen.send(value)
            except StopIteration as stop:
                stack.pop()
                value = stop.value
                if check and F_in is not None and not value < F_in:
                    raise InvariantViolation(
                        f"call returned {value}, not below its F {F_in}") from None
                continue
            members, F, bound = request
            if check and not (F >= bound and F > NEG_INF):
                raise InvariantViolation(f"call on {sorted(members)} with F={F} < bound={bound}")
            if on_call is not None:
                on_call(len(stack), members, F, bound)
            stack.append((rbf_hs_frame(session, members, F, bound), F))
            value = None
    except Exit:
        return None
    return value


def rbf_hs_prime(session: Session, node: frozenset, F: float, bound: float, on_call=None):
    """RBF-HS' on ``node``: backed-up F-value, or None on exit."""
    return drive(session, rbf_hs_frame(session, node, F, bound), F, on_call)


def rbf_hs(dpi, model=None, ld=None, check_invariants=False, record_trace=False,
           on_call=None):
    """Return the ``ld`` best minimal diagnoses (sorted id tuples) and metrics."""
    session = Session(dpi, resolve_model(dpi, model), ld, check_invariants, record_trace)
    result = session.start()
    if result is not None:
        return result, session.metrics
    root = frozenset()
    rbf_hs_prime(session, root, session.cost(root), NEG_INF, on_call)
    return session.finish(), session.metrics
