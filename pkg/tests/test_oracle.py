"""
Тесты переборных эталонов и генераторов семейств
"""
import sys
import os

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cnf.clause_set import ClauseSet, measures
from cnf.literals import BOTTOM
from engine.mu_check import classify_family, is_2mu
from graph.implication import build_idg
from graph.paths import Path
from oracle.brute import PathMode, brute_is_mu, brute_mus_enum, brute_paths, random_pcls2
from oracle.generators import FAMILY_SHAPES, diamond_chain_instance, gen_family, iib_chain
from utils.constants import FAMILY_TAGS
from utils.error_handler import ErrorType, TwoMusError
from tests.fixtures import U132, U22, U121, UNION


def test_brute_mus_enum_union():
    records = brute_mus_enum(UNION)
    assert {frozenset(r.clauses) for r in records} == {
        U22.as_frozenset(), U121.as_frozenset(), U132.as_frozenset()}
    assert sorted(r.family for r in records) == ['IIa', 'IIb', 'Ib']
    assert [len(r.clauses) for r in records] == [3, 3, 4]


def test_brute_mus_enum_trivial():
    records = brute_mus_enum(ClauseSet([BOTTOM]))
    assert len(records) == 1
    assert records[0].clauses == (BOTTOM,)
    assert records[0].family is None

    assert brute_mus_enum(ClauseSet([(1, 2), (-1,)])) == []


def test_brute_mus_enum_size_bound():
    with pytest.raises(TwoMusError) as info:
        brute_mus_enum(UNION, max_clauses=5)
    assert info.value.error_type is ErrorType.SIZE_BOUND
    assert info.value.details['bound'] == 5


def test_brute_is_mu():
    assert brute_is_mu(U22)
    assert not brute_is_mu(UNION)
    assert not brute_is_mu(ClauseSet())


def test_brute_paths_modes():
    G = build_idg(U22)
    assert brute_paths(G, 1, PathMode.REGULAR, y=2) == [Path((1, 2))]
    assert brute_paths(G, 1, 'simple', y=1) == [Path((1,))]

    with pytest.raises(TwoMusError) as info:
        brute_paths(G, 1, PathMode.SIMPLE)
    assert info.value.error_type is ErrorType.PRECONDITION

    with pytest.raises(TwoMusError) as info:
        brute_paths(G, 1, PathMode.SIMPLE, y=2, max_vertices=2)
    assert info.value.error_type is ErrorType.SIZE_BOUND


def test_brute_nearly_regular_union():
    paths = brute_paths(build_idg(UNION), 1, PathMode.NEARLY_REGULAR)
    assert [p.vertices for p in paths] == [
        (1, 2, -1),
        (1, 2, -2),
        (1, 2, 3, -2),
        (1, 2, -3, -2),
        (1, -2, -1),
    ]
    assert all(p.is_nearly_regular() for p in paths)


def test_simple_paths_include_irregular():
    G = build_idg(UNION)
    simple = brute_paths(G, 1, PathMode.SIMPLE, y=-1)
    regular = brute_paths(G, 1, PathMode.REGULAR, y=-1)
    assert regular == []
    assert Path((1, 2, -1)) in simple


def test_gen_family_templates():
    assert gen_family('Ia') == ClauseSet([(1,), (-1,)])
    assert gen_family('Ib') == ClauseSet([(1,), (2,), (-1, -2)])
    assert measures(gen_family('IIb')) == measures(U132)
    assert gen_family('III') == ClauseSet([(-1, 2), (-2, -1), (1, 3), (-3, 1)])


def test_gen_family_lengths():
    F = gen_family('IV', (2, 1, 3))
    assert F.c == 2 + 1 + 3 + 3
    assert classify_family(F) == 'IV'

    F = gen_family('IIb', (3, 2))
    assert (F.n, F.c) == (7, 8)
    assert classify_family(F) == 'IIb'


def test_gen_family_errors():
    with pytest.raises(TwoMusError) as info:
        gen_family('V')
    assert info.value.error_type is ErrorType.PRECONDITION

    for tag, lengths in (('IIa', (0,)), ('IV', (1, 1)), ('III', (1, 0)), ('Ib', (-1,))):
        with pytest.raises(TwoMusError) as info:
            gen_family(tag, lengths)
        assert info.value.error_type is ErrorType.INCONSISTENT_LENGTHS, tag


def test_gen_family_seeded():
    assert gen_family('IV', seed=5) == gen_family('IV', seed=5)
    for tag in FAMILY_TAGS:
        minimal, default = FAMILY_SHAPES[tag]
        F, base = measures(gen_family(tag, default, seed=17)), measures(gen_family(tag, default))
        assert (F.n, F.c, F.u, F.ell, F.delta, F.n_k) == (base.n, base.c, base.u, base.ell, base.delta, base.n_k)


def test_gen_family_round_trip_random_lengths():
    rng = np.random.default_rng(4)
    for _ in range(200):
        tag = FAMILY_TAGS[int(rng.integers(len(FAMILY_TAGS)))]
        minimal, _ = FAMILY_SHAPES[tag]
        lengths = tuple(lo + int(rng.integers(0, 4)) for lo in minimal)
        F = gen_family(tag, lengths, seed=int(rng.integers(1 << 30)))
        assert is_2mu(F)
        assert classify_family(F) == tag


@pytest.mark.slow
def test_gen_family_many_seeds():
    for tag in FAMILY_TAGS:
        for seed in range(10_000 // len(FAMILY_TAGS)):
            F = gen_family(tag, seed=seed)
            assert is_2mu(F) and classify_family(F) == tag


def test_iib_chain():
    for c in range(4, 14):
        F = iib_chain(c)
        assert F.c == c
        assert F.deficiency == 1
        assert classify_family(F) == 'IIb'
    with pytest.raises(TwoMusError) as info:
        iib_chain(3)
    assert info.value.error_type is ErrorType.INCONSISTENT_LENGTHS


def test_diamond_chain_instance():
    F = diamond_chain_instance(2)
    records = brute_mus_enum(F)
    assert len(records) == 4
    assert all(r.family == 'IIa' for r in records)


def test_random_pcls2():
    rng = np.random.default_rng(0)
    F = random_pcls2(3, 5, rng, units=[1, -2])
    assert F.u == 2
    assert F.c == 7
    assert all(len(c) <= 2 for c in F.clauses)
    assert random_pcls2(2, 100, rng).c == 4
