"""
Тесты st-графов, трансляций tFC / tFC' и проверок C-DPP
"""
import sys
import os

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cnf.clause_set import ClauseSet, satisfies
from hardness.cdpp import (
    StDigraph,
    format_st_digraph,
    has_special_closed_walk,
    has_special_cycle,
    parse_st_digraph,
    st_digraph_from_arcs,
    translate_cdpp,
    translate_cdpp_prime,
)
from hardness.lab import all_st_digraphs, constant_assignment, random_st_digraph, verify_theorem_parts
from utils.error_handler import ErrorType, TwoMusError
from tests.fixtures import CYCLE_GRAPH, CYCLE_GRAPH_TEXT, CYCLE_TFC, CYCLE_TFC_PRIME

# s -> v -> t и t -> v -> s: общий внутренний узел
SHARED_HUB = st_digraph_from_arcs([(1, 3), (3, 2), (2, 3), (3, 1)], s=1, t=2)


def test_translate_cycle_graph():
    F = translate_cdpp(CYCLE_GRAPH)
    assert F == CYCLE_TFC
    assert (F.n, F.c) == (3, 4)

    F = translate_cdpp_prime(CYCLE_GRAPH)
    assert F == CYCLE_TFC_PRIME
    assert (F.n, F.c) == (4, 5)


def test_translate_arcless():
    G = StDigraph(vertices=(1, 2), arcs=(), s=1, t=2)
    assert translate_cdpp(G) == ClauseSet()
    assert translate_cdpp_prime(G) == ClauseSet([(3, 4)])


def test_translate_small_rules():
    G = st_digraph_from_arcs([(1, 3), (3, 2)], s=1, t=2)
    assert translate_cdpp(G) == ClauseSet([(-4, 3), (-3, -4)])

    G = st_digraph_from_arcs([(2, 3)], s=1, t=2)
    assert translate_cdpp_prime(G) == ClauseSet([(4, 5), (-5, 3)])


def test_translation_has_no_units():
    for G in all_st_digraphs(3):
        F = translate_cdpp(G)
        assert F.u == 0 and not F.has_bottom


def test_parse_and_format():
    G = parse_st_digraph(CYCLE_GRAPH_TEXT)
    assert G == CYCLE_GRAPH
    assert parse_st_digraph(format_st_digraph(G)) == G

    G = parse_st_digraph("s 1\nt 2\nv 7\n")
    assert G.vertices == (1, 2, 7)
    assert G.x0 == 8 and G.y0 == 9
    assert "v 7" in format_st_digraph(G)


def test_parse_errors():
    for text in ("s 1\ne 1 3\n", "s 1\nt 2\nq 3\n", "s x\nt 2\n", "s 1\nt 2\ne 1\n"):
        with pytest.raises(TwoMusError) as info:
            parse_st_digraph(text)
        assert info.value.error_type is ErrorType.PARSE_ERROR, text

    with pytest.raises(TwoMusError) as info:
        parse_st_digraph(b"\xff\xfe 1 2\n")
    assert info.value.error_type is ErrorType.PARSE_ERROR
    assert parse_st_digraph(CYCLE_GRAPH_TEXT.encode("utf-8")) == CYCLE_GRAPH


def test_invalid_instances():
    cases = [
        dict(vertices=(1, 2), arcs=((1, 2),), s=1, t=2),
        dict(vertices=(1, 2), arcs=((2, 1),), s=1, t=2),
        dict(vertices=(1, 2, 3), arcs=((3, 3),), s=1, t=2),
        dict(vertices=(1, 2), arcs=((1, 5),), s=1, t=2),
        dict(vertices=(1, 2), arcs=(), s=1, t=1),
        dict(vertices=(0, 1), arcs=(), s=0, t=1),
    ]
    for kwargs in cases:
        with pytest.raises(TwoMusError) as info:
            StDigraph(**kwargs)
        assert info.value.error_type is ErrorType.INVALID_INSTANCE, kwargs


def test_special_closed_walk():
    assert has_special_closed_walk(CYCLE_GRAPH)
    assert not has_special_closed_walk(st_digraph_from_arcs([(1, 3), (3, 2)], s=1, t=2))
    assert has_special_closed_walk(SHARED_HUB)


def test_special_cycle():
    assert has_special_cycle(CYCLE_GRAPH)
    assert not has_special_cycle(SHARED_HUB)
    assert not has_special_cycle(st_digraph_from_arcs([(1, 3), (3, 2)], s=1, t=2))


def test_special_cycle_size_bound():
    with pytest.raises(TwoMusError) as info:
        has_special_cycle(CYCLE_GRAPH, max_vertices=3)
    assert info.value.error_type is ErrorType.SIZE_BOUND


def test_constant_assignment():
    G = st_digraph_from_arcs([(1, 3), (3, 2)], s=1, t=2)
    phi, case = constant_assignment(G)
    assert case == 'no arc into s'
    assert satisfies(phi, translate_cdpp(G))
    assert constant_assignment(CYCLE_GRAPH) is None


def test_verify_cycle_graph():
    report = verify_theorem_parts(CYCLE_GRAPH)
    assert report.all_hold
    assert report.has_cycle and report.has_walk
    assert report.part1 is None
    assert report.prime_family_iv is True
    assert report.mus_count == 1


def test_verify_shared_hub():
    report = verify_theorem_parts(SHARED_HUB)
    assert report.all_hold
    assert report.has_walk and not report.has_cycle


def test_all_st_digraphs_counts():
    assert sum(1 for _ in all_st_digraphs(2)) == 1
    assert sum(1 for _ in all_st_digraphs(3)) == 16
    with pytest.raises(TwoMusError):
        next(all_st_digraphs(1))


def test_verify_all_three_vertex_graphs():
    for G in all_st_digraphs(3):
        report = verify_theorem_parts(G)
        assert report.all_hold, G.arcs


@pytest.mark.slow
def test_verify_all_four_vertex_graphs():
    checked = 0
    for G in all_st_digraphs(4):
        report = verify_theorem_parts(G)
        assert report.all_hold, G.arcs
        checked += 1
    assert checked == 1024
    print(f"✓ Проверено графов: {checked}")


def test_verify_random_five_vertex_sample():
    rng = np.random.default_rng(2)
    for _ in range(40):
        G = random_st_digraph(5, rng, p=0.3)
        assert verify_theorem_parts(G).all_hold, G.arcs


@pytest.mark.slow
def test_verify_random_large_sample():
    rng = np.random.default_rng(8)
    checked = 0
    while checked < 500:
        k = int(rng.integers(5, 8))
        G = random_st_digraph(k, rng, p=0.25)
        if len(G.arcs) > 19:
            continue
        assert verify_theorem_parts(G).all_hold, G.arcs
        checked += 1
