"""Reiter's HS-Tree: best-first hitting-set search over an open queue."""
from __future__ import annotations

import heapq
from collections import Counter

from .model import CostModel, Mode
from .search import CLOSED, VALID, Session


def resolve_model(dpi, model=None) -> CostModel:
    if isinstance(model, CostModel):
        return model
    if model is None:
        model = Mode.MAX_PROB if dpi.probabilities is not None else Mode.MIN_CARD
    return CostModel.for_dpi(dpi, model)


class OpenQueue:
    """Open nodes, best cost first, FIFO among equal costs.

    Under MinCard the cost is ``-|n|``, so this is plain breadth-first order.
    """

    def __init__(self, session: Session):
        self.session = session
        self._heap = []
        self._seq = 0
        self._counts = Counter()

    def __len__(self):
        return len(self._heap)

    def push(self, node: frozenset):
        heapq.heappush(self._heap, (-self.session.cost(node), self._seq, node))
        self._seq += 1
        self._counts[node] += 1
        self.session.metrics.nodes_generated += 1
        self.session.add_tree_nodes(1)

    def pop(self) -> frozenset:
        _, _, node = heapq.heappop(self._heap)
        self._counts[node] -= 1
        self.session.add_tree_nodes(-1)
        return node

    def contains(self, node: frozenset) -> bool:
        return self._counts[node] > 0

    def ordered(self) -> list:
        """Queue contents in polling order."""
        return [node for _, _, node in sorted(self._heap)]


def run_queue(session: Session, queue: OpenQueue, duplicate_check=False,
              should_switch=None) -> bool:
    """Process queue nodes until done; return True if ``should_switch`` fired."""
    duplicate = queue.contains if duplicate_check else None
    while len(queue) and not session.done:
        if should_switch is not None and should_switch(session, queue):
            return True
        node = queue.pop()
        label = session.label(node, duplicate)
        if label is CLOSED:
            continue
        if label is VALID:
            session.add_diagnosis(node)
            continue
        for e in label:
            queue.push(node | {e})
    return False


def hs_tree(dpi, model=None, ld=None, duplicate_check=False,
            check_invariants=False, record_trace=False):
    """Return the ``ld`` best minimal diagnoses and the search metrics.

    Diagnoses are sorted tuples of component ids in non-increasing cost
    order.  ``ld=None`` enumerates all minimal diagnoses.
    """
    session = Session(dpi, resolve_model(dpi, model), ld, check_invariants, record_trace)
    result = session.start()
    if result is not None:
        return result, session.metrics
    queue = OpenQueue(session)
    queue.push(frozenset())
    run_queue(session, queue, duplicate_check)
    return session.finish(), session.metrics
