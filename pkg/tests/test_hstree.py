import pytest

from hsdiag import ConfigError, CostModel, Dpi, hs_tree
from hsdiag.harness import GeneratorParams, brute_force_min_diagnoses, generate_random_dpi

from conftest import SEVEN_EXPECTED_1, KB5_DIAGNOSES, named, non_increasing, one_based


def test_kb5_mincard_all(kb5):
    D, m = hs_tree(kb5, "mincard")
    assert named(kb5, D) == KB5_DIAGNOSES
    assert m.nodes_explored > 0


def test_seven_best_four(seven):
    D, _ = hs_tree(seven, "maxprob", 4)
    assert one_based(D) == SEVEN_EXPECTED_1


def test_mincard_is_breadth_first(seven):
    D, _ = hs_tree(seven, "mincard")
    assert non_increasing([-len(d) for d in D])


def test_duplicate_check_gives_same_answer(seven):
    model = CostModel.for_dpi(seven, "maxprob")
    a, ma = hs_tree(seven, model)
    b, mb = hs_tree(seven, model, duplicate_check=True)
    # equal-cost diagnoses may come out in another order
    assert set(a) == set(b)
    assert [model.cost(d) for d in a] == pytest.approx([model.cost(d) for d in b])
    assert mb.nodes_explored <= ma.nodes_explored


def test_no_conflict_returns_empty_diagnosis():
    dpi = Dpi.from_conflicts(["a", "b"], [])
    assert hs_tree(dpi)[0] == [()]


def test_empty_conflict_returns_no_diagnosis():
    dpi = Dpi.from_cnf(["A"], [("ax1", [["A"]])], background=[["A"]], negative=[[["A"]]])
    assert hs_tree(dpi)[0] == []


def test_single_conflict_gives_singletons():
    dpi = Dpi.from_conflicts(["a", "b", "c"], [["a", "b", "c"]])
    D, _ = hs_tree(dpi, "mincard")
    assert sorted(D) == [(0,), (1,), (2,)]


def test_bad_ld_rejected(seven):
    with pytest.raises(ConfigError):
        hs_tree(seven, ld=0)


def test_ld_all_is_unbounded(seven):
    assert hs_tree(seven, ld="all")[0] == hs_tree(seven, ld=None)[0]


@pytest.mark.parametrize("seed", range(40))
def test_matches_oracle_small(seed):
    dpi = generate_random_dpi(GeneratorParams(seed=seed, size=4 + seed % 9,
                                              conflict_count=1 + seed % 5, conflict_size=(1, 4),
                                              mode="cnf" if seed % 3 == 0 else "explicit"))
    model = CostModel.for_dpi(dpi, "maxprob")
    D, _ = hs_tree(dpi, model, check_invariants=True)
    assert set(D) == set(brute_force_min_diagnoses(dpi, model))
    assert non_increasing([model.cost(d) for d in D])
