import pytest

from hsdiag import DomainError, Dpi, is_diagnosis, violates
from hsdiag.reasoner import check_consistent
from hsdiag.search import SearchMetrics


def test_dpll_basic():
    assert check_consistent([(1, 2), (-1,)])
    assert not check_consistent([(1,), (-1,)])
    assert check_consistent([])
    assert not check_consistent([()])
    # pigeonhole 3 into 2 is unsatisfiable
    p = lambda i, j: 2 * i + j + 1  # noqa: E731
    clauses = [(p(i, 0), p(i, 1)) for i in range(3)]
    clauses += [(-p(i, j), -p(k, j)) for j in range(2) for i in range(3) for k in range(i + 1, 3)]
    assert not check_consistent(clauses, num_vars=6)


def test_dpll_rejects_bad_literal():
    with pytest.raises(DomainError):
        check_consistent([(4,)], num_vars=3)


def test_kb5_violations(kb5):
    ax = {n: i for i, n in enumerate(kb5.components)}
    assert violates({ax["ax1"], ax["ax2"]}, kb5)
    assert violates({ax["ax2"], ax["ax3"], ax["ax4"]}, kb5)
    assert not violates({ax["ax2"], ax["ax3"]}, kb5)
    assert not violates(set(), kb5)


def test_kb5_negative_measurement_entailment(kb5):
    # {ax1,ax2} entails -A; that alone is a violation even though it is consistent
    ax = {n: i for i, n in enumerate(kb5.components)}
    sentences = [c for i in (ax["ax1"], ax["ax2"]) for c in kb5.sentences[i]]
    assert check_consistent(sentences)
    assert violates({ax["ax1"], ax["ax2"]}, kb5)


def test_is_diagnosis_kb5(kb5):
    assert is_diagnosis(kb5.ids(["ax1", "ax3"]), kb5)
    assert not is_diagnosis(kb5.ids(["ax1"]), kb5)
    with pytest.raises(DomainError):
        is_diagnosis({9}, kb5)


def test_consistency_checks_counted(kb5):
    m = SearchMetrics()
    violates({0}, kb5, m)
    is_diagnosis({0}, kb5, m)
    assert m.consistency_checks == 2


def test_explicit_backend(seven):
    assert violates({0, 1, 4}, seven)
    assert violates({0, 1, 4, 6}, seven)
    assert not violates({0, 1}, seven)
    assert seven.backend.min_conflict(range(7)) == (0, 1, 4)
    assert seven.backend.min_conflict({1, 3, 5, 6}) == (1, 3, 5)
    assert seven.backend.min_conflict({2, 5}) is None


def test_background_inconsistency_violates_empty_set():
    dpi = Dpi.from_cnf(["A"], [("ax1", [["A"]])], background=[["A"], ["-A"]])
    assert violates(set(), dpi)


def test_multi_clause_negative_needs_every_clause_entailed():
    dpi = Dpi.from_cnf(["A", "B"], [("ax1", [["A"]]), ("ax2", [["B"]])],
                       negative=[[["A"], ["B"]]])
    assert not violates({0}, dpi)
    assert not violates({1}, dpi)
    assert violates({0, 1}, dpi)
