import time

import pytest

from kpacking.generators import gen_corona_tree, gen_cycle, gen_path, gen_star, random_tree
from kpacking.graph import Graph
from kpacking.packing import (
    domination_number,
    max_open_packing,
    packing_number,
    total_domination_number,
    verify_certificate,
)
from kpacking.trees import NotATreeError, rooted_order, tree_domination, tree_total_domination


def test_domination_examples():
    assert tree_domination(gen_path(2)).value == 1
    assert tree_domination(gen_path(4)).value == 2
    assert tree_domination(gen_corona_tree(gen_path(3), 1)).value == 3
    assert tree_domination(gen_path(1)).vertices == (0,)


def test_total_domination_examples():
    assert tree_total_domination(gen_path(2)).value == 2
    assert tree_total_domination(gen_path(4)).value == 2
    c = tree_total_domination(gen_star(5))
    assert c.value == 2 and 0 in c.vertices


def test_errors():
    with pytest.raises(NotATreeError):
        tree_domination(gen_cycle(4))
    with pytest.raises(NotATreeError):
        tree_domination(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(NotATreeError):
        tree_total_domination(gen_path(1))
    with pytest.raises(NotATreeError):
        rooted_order(Graph.empty(0))


def test_deterministic_sets():
    t = random_tree(40, 3)
    assert tree_domination(t) == tree_domination(t)
    assert tree_total_domination(t).vertices == tree_total_domination(t).vertices


def test_equalities_on_all_trees(trees10):
    for _, t in trees10:
        d = tree_domination(t)
        assert verify_certificate(t, d)
        assert d.value == domination_number(t, "exhaustive").value == packing_number(t, "exhaustive").value
        if t.n >= 2:
            td = tree_total_domination(t)
            assert verify_certificate(t, td)
            assert td.value == total_domination_number(t, "exhaustive").value == max_open_packing(t, "exhaustive").value


def test_equalities_on_random_trees_n12():
    for seed in range(150):
        t = random_tree(12, seed)
        assert tree_domination(t).value == domination_number(t).value == packing_number(t).value
        assert tree_total_domination(t).value == total_domination_number(t).value == max_open_packing(t).value


def test_million_vertex_path_is_fast():
    p = gen_path(10**6)
    t0 = time.perf_counter()
    d = tree_domination(p)
    t1 = time.perf_counter()
    td = tree_total_domination(p)
    t2 = time.perf_counter()
    assert d.value == (10**6 + 2) // 3
    assert td.value == 500000  # gamma_t(P_n) = floor(n/2) + ceil(n/4) - floor(n/4)
    assert t1 - t0 < 1.0 and t2 - t1 < 1.0
