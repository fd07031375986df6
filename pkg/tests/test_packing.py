import random
from itertools import combinations

import pytest

from kpacking.generators import (
    gen_complete,
    gen_corona_tree,
    gen_cycle,
    gen_gkr,
    gen_path,
    gen_petersen,
    gen_star,
    random_graph,
)
from kpacking.graph import Graph, complement, delete_vertex, mask_of, members
from kpacking.packing import (
    AnchoringError,
    Optimality,
    PackingKind,
    designated_pendants,
    domination_number,
    is_dominating_set,
    is_k_limited_packing,
    is_maximal_k_limited_packing,
    is_open_packing,
    is_total_dominating_set,
    lemma21_maximality,
    lower_packing_number,
    max_k_limited_packing,
    max_open_packing,
    min_maximal_k_limited_packing,
    packing_number,
    pendant_anchored_max_open_packing,
    pendant_anchored_max_packing,
    total_domination_number,
    verify_certificate,
)

from . import oracle

C4 = gen_cycle(4)
P3, P4 = gen_path(3), gen_path(4)
K13, K14 = gen_star(4), gen_star(5)


def small_random(count, seed, max_n=9):
    rng = random.Random(seed)
    return [random_graph(rng.randint(1, max_n), rng.random(), rng.randrange(10**9)) for _ in range(count)]


# predicates -----------------------------------------------------------------


def test_k_limited_examples():
    assert is_k_limited_packing(gen_petersen(), [], 1)
    assert is_k_limited_packing(C4, [0, 1], 2)
    assert not is_k_limited_packing(K13, [1, 2, 3], 2)
    assert is_k_limited_packing(K13, mask_of([1, 2]), 2)


def test_maximal_examples():
    assert is_maximal_k_limited_packing(K14, [0], 1)
    g, bp = gen_gkr(2, 3, 1)
    assert is_maximal_k_limited_packing(g, bp.v3, 2)
    assert lemma21_maximality(g, bp.v3, 2)
    assert not is_maximal_k_limited_packing(P3, [], 1)


def test_maximal_requires_packing():
    with pytest.raises(ValueError, match="not a k-limited packing"):
        is_maximal_k_limited_packing(K13, [1, 2, 3], 2)
    with pytest.raises(ValueError):
        lemma21_maximality(K13, [1, 2, 3], 2)


def test_lemma21_p3():
    assert lemma21_maximality(P3, [0], 1)
    assert is_maximal_k_limited_packing(P3, [0], 1)


def test_empty_set_maximal_only_for_empty_graph():
    assert is_maximal_k_limited_packing(Graph.empty(0), [], 1)
    assert not is_maximal_k_limited_packing(Graph.empty(1), [], 1)


def test_open_packing_examples():
    assert is_open_packing(P4, [0, 1])
    assert not is_open_packing(P4, [0, 1, 3])
    assert is_open_packing(gen_petersen(), [])


def test_domination_predicates():
    assert is_dominating_set(P4, [1, 2]) and not is_dominating_set(P4, [0])
    assert is_total_dominating_set(P4, [1, 2]) and not is_total_dominating_set(P4, [0, 1])


def test_lemma21_agrees_with_add_test_random():
    for g in small_random(60, 3, max_n=7):
        for k in (1, 2, 3):
            for size in range(g.n + 1):
                for c in combinations(range(g.n), size):
                    if is_k_limited_packing(g, c, k):
                        assert lemma21_maximality(g, c, k) == is_maximal_k_limited_packing(g, c, k)


# solvers ------------------------------------------------------------------


@pytest.mark.parametrize("method", ["bnb", "exhaustive"])
def test_solver_examples(method):
    assert max_k_limited_packing(gen_complete(6), 2, method).value == 2
    assert max_k_limited_packing(gen_cycle(5), 1, method).value == 1
    assert packing_number(gen_cycle(5), method).value == 1
    g, bp = gen_gkr(2, 3, 1)
    assert min_maximal_k_limited_packing(g, 2, method).value == 2 == bp.size_v3
    assert lower_packing_number(K14, method).value == 1
    assert max_open_packing(gen_path(2), method).value == 2
    assert max_open_packing(P4, method).value == 2
    assert domination_number(gen_complete(5), method).value == 1
    assert domination_number(P4, method).value == 2
    assert total_domination_number(gen_path(2), method).value == 2
    assert total_domination_number(P4, method).value == 2


def test_solver_oracle_examples():
    pet, c6 = gen_petersen(), gen_cycle(6)
    assert max_open_packing(pet).value == oracle.rho_open(pet)
    assert total_domination_number(c6).value == oracle.gamma_t(c6)
    for base in (gen_path(1), gen_path(2), gen_path(3)):
        t = gen_corona_tree(base, 1)
        assert domination_number(t).value == base.n


def test_k_at_least_delta_plus_one_gives_n():
    for g in small_random(30, 11):
        for k in range(g.max_degree + 1, g.max_degree + 3):
            assert max_k_limited_packing(g, k).value == g.n
            assert min_maximal_k_limited_packing(g, k).value == g.n


def test_total_domination_rejects_isolates():
    with pytest.raises(ValueError):
        total_domination_number(Graph.empty(3))
    with pytest.raises(ValueError):
        total_domination_number(Graph.empty(1))


def test_empty_graph_conventions():
    g = Graph.empty(0)
    assert domination_number(g).value == 0
    assert max_k_limited_packing(g, 1).value == 0
    assert min_maximal_k_limited_packing(g, 1).value == 0


def test_unknown_method():
    with pytest.raises(ValueError):
        packing_number(P4, method="magic")


def test_solvers_match_pure_python_oracle():
    for g in small_random(40, 5, max_n=8):
        for k in (1, 2, 3):
            assert max_k_limited_packing(g, k).value == oracle.L(g, k)
            assert min_maximal_k_limited_packing(g, k).value == oracle.LL(g, k)
        assert max_open_packing(g).value == oracle.rho_open(g)
        assert domination_number(g).value == oracle.gamma(g)
        expect = oracle.gamma_t(g)
        if expect is None:
            with pytest.raises(ValueError):
                total_domination_number(g)
        else:
            assert total_domination_number(g).value == expect


def test_certificates_verify_and_are_tagged():
    g = gen_petersen()
    cases = [
        (max_k_limited_packing(g, 2), PackingKind.k_limited(2), Optimality.MAXIMUM),
        (min_maximal_k_limited_packing(g, 2), PackingKind.k_limited(2), Optimality.MINIMUM_MAXIMAL),
        (max_open_packing(g), PackingKind.open_packing(), Optimality.MAXIMUM),
        (domination_number(g), PackingKind.dominating(), Optimality.MINIMUM),
        (total_domination_number(g), PackingKind.total_dominating(), Optimality.MINIMUM),
    ]
    for cert, kind, opt in cases:
        assert cert.kind == kind and cert.optimality == opt
        assert cert.verified and verify_certificate(g, cert)
        assert list(cert.vertices) == sorted(cert.vertices)


# structural properties ------------------------------------------------------------


def test_orderings_between_invariants():
    for g in small_random(50, 17):
        for k in (1, 2, 3):
            assert min_maximal_k_limited_packing(g, k).value <= max_k_limited_packing(g, k).value
            assert max_k_limited_packing(g, k).value <= max_k_limited_packing(g, k + 1).value
        assert packing_number(g).value <= domination_number(g).value
        if g.n >= 2 and all(g.adj):
            assert max_open_packing(g).value <= total_domination_number(g).value


def test_vertex_deletion_facts():
    for g in small_random(40, 23, max_n=8):
        if g.n < 2:
            continue
        cert = max_k_limited_packing(g, 2)
        gbar = complement(g)
        l2bar = max_k_limited_packing(gbar, 2).value
        for v in range(g.n):
            h, old = delete_vertex(g, v, return_map=True)
            new = {o: i for i, o in enumerate(old)}
            if v not in cert.vertices:
                assert is_k_limited_packing(h, [new[u] for u in cert.vertices], 2)
            assert max_k_limited_packing(delete_vertex(gbar, v), 2).value >= l2bar - 1


# pendant anchoring ------------------------------------------------------------------


def test_designated_pendants():
    assert designated_pendants(P4) == [(1, 0), (2, 3)]
    assert designated_pendants(K14) == [(0, 1)]
    assert designated_pendants(gen_petersen()) == []


def test_anchored_packing_examples():
    c = pendant_anchored_max_packing(K14)
    assert c.value == 1 and c.vertices == (1,)
    assert pendant_anchored_max_packing(P4).vertices == (0, 3)
    pet = gen_petersen()
    assert pendant_anchored_max_packing(pet).value == packing_number(pet).value


def test_anchored_open_packing_examples():
    c = pendant_anchored_max_open_packing(K14)
    assert c.value == 2 and 1 in c.vertices
    c = pendant_anchored_max_open_packing(P4)
    assert c.value == 2 and {0, 3} <= set(c.vertices)
    c6 = gen_cycle(6)
    assert pendant_anchored_max_open_packing(c6).value == max_open_packing(c6).value


def test_anchored_k2_is_impossible():
    # both vertices of K2 are supports whose designated pendant is the other one;
    # no packing holds both, so the anchored construction cannot exist
    with pytest.raises(AnchoringError):
        pendant_anchored_max_packing(gen_path(2))


def test_anchored_random_graphs_without_fallback():
    for g in small_random(80, 29, max_n=10):
        pairs = designated_pendants(g)
        comps_k2 = any(len(g.adj[u]) == 1 and len(g.adj[g.adj[u][0]]) == 1 for u in range(g.n))
        if comps_k2:
            continue
        c = pendant_anchored_max_packing(g)
        assert c.value == packing_number(g).value and not c.fallback
        assert {leaf for _, leaf in pairs} <= set(c.vertices)
        o = pendant_anchored_max_open_packing(g)
        assert o.value == max_open_packing(g).value and not o.fallback
        assert {leaf for _, leaf in pairs} <= set(o.vertices)


def test_members_mask_roundtrip():
    assert members(mask_of([5, 0, 3])) == (0, 3, 5)
