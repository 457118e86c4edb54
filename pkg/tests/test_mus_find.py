"""
Тесты поиска одного MUS
"""
import sys
import os
from itertools import permutations

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cnf.clause_set import ClauseSet
from engine.mus_finder import (
    find_mus_deletion,
    mus_family_iia,
    mus_one_unit,
    mus_two_units,
    mus_unit_sweep,
    shortest_family_i_mus,
)
from graph.implication import build_idg
from oracle.brute import PathMode, brute_is_mu, brute_mus_enum, brute_paths, random_pcls2
from utils.error_handler import ErrorType, TwoMusError
from tests.fixtures import CYCLE_TFC, U121, U132, U22, UNION

# две цепочки от x1 к -x3 длины 2 и 3
TWO_ROUTES = ClauseSet([(1,), (3,), (-1, 2), (-2, -3), (-1, 4), (-4, 5), (-5, -3)])


def test_find_mus_deletion_union():
    record = find_mus_deletion(UNION)
    assert record.indices == (0, 1, 4, 5)
    assert ClauseSet(record.clauses) == U132
    assert record.family == 'IIb'


def test_find_mus_deletion_satisfiable():
    with pytest.raises(TwoMusError) as info:
        find_mus_deletion(ClauseSet([(1, 2)]))
    assert info.value.error_type is ErrorType.SATISFIABLE_INPUT


def test_find_mus_deletion_random():
    rng = np.random.default_rng(21)
    checked = 0
    for _ in range(200):
        F = random_pcls2(4, int(rng.integers(4, 12)), rng, units=[1, -2])
        try:
            record = find_mus_deletion(F)
        except TwoMusError:
            continue
        assert brute_is_mu(ClauseSet(record.clauses))
        checked += 1
    assert checked > 0


def test_mus_two_units_union():
    record = mus_two_units(UNION, 1, -2)
    assert record.family == 'Ib'
    assert record.witness == (1, 2, -2)
    assert ClauseSet(record.clauses) == U22
    assert record.indices == (0, 1, 2)


def test_mus_two_units_complementary():
    F = ClauseSet([(1,), (-1,), (1, 2)])
    record = mus_two_units(F, (1,), (-1,))
    assert record.family == 'Ia'
    assert record.clauses == ((1,), (-1,))


def test_mus_two_units_errors_and_none():
    with pytest.raises(TwoMusError) as info:
        mus_two_units(UNION, 1, 1)
    assert info.value.error_type is ErrorType.IDENTICAL_UNITS

    with pytest.raises(TwoMusError) as info:
        mus_two_units(UNION, 1, 3)
    assert info.value.error_type is ErrorType.MISSING_UNIT

    assert mus_two_units(ClauseSet([(1,), (2,), (-1, 3)]), 1, 2) is None


def test_mus_two_units_shortest():
    record = mus_two_units(TWO_ROUTES, 1, 3, shortest=True)
    assert record.witness == (1, 2, -3, 3)
    assert len(record.clauses) == 4
    assert brute_is_mu(ClauseSet(record.clauses))

    best = shortest_family_i_mus(TWO_ROUTES)
    assert len(best.clauses) == 4


def test_mus_one_unit():
    record = mus_one_unit(UNION, 1)
    assert ClauseSet(record.clauses) == U121
    assert record.family == 'IIa'
    assert mus_one_unit(ClauseSet([(1,), (-1, 2)]), 1) is None


def test_mus_family_iia():
    record = mus_family_iia(UNION, 1)
    assert ClauseSet(record.clauses) == U121
    assert record.family == 'IIa'
    assert record.witness[-1] == -1
    assert mus_family_iia(U22, 1) is None


def test_unit_sweep_modes():
    assert ClauseSet(mus_unit_sweep(UNION, 'exactly-two').clauses) == U22

    record = mus_unit_sweep(UNION, 'exactly-one')
    assert ClauseSet(record.clauses) == U121
    assert record.indices == (0, 1, 3)

    assert ClauseSet(mus_unit_sweep(UNION, 'at-least-one').clauses) == U121


def test_unit_sweep_without_units():
    for mode in ('exactly-two', 'exactly-one', 'at-least-one'):
        assert mus_unit_sweep(CYCLE_TFC, mode) is None


def test_unit_sweep_errors():
    with pytest.raises(TwoMusError) as info:
        mus_unit_sweep(UNION, 'both')
    assert info.value.error_type is ErrorType.FLAG_ERROR

    with pytest.raises(TwoMusError) as info:
        mus_unit_sweep(ClauseSet([(), (1,)]), 'exactly-two')
    assert info.value.error_type is ErrorType.EMPTY_CLAUSE


def _two_unit_instances(count, seed):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        num_vars = int(rng.integers(3, 7))
        yield random_pcls2(num_vars, int(rng.integers(3, 10)), rng, units=[1, 2])


def _check_two_unit_bijection(instances):
    """Регулярные пути x -> -y взаимно однозначны с MUS, содержащими {x} и {y}"""
    for F in instances:
        G = build_idg(F)
        paths = brute_paths(G, 1, PathMode.REGULAR, y=-2)
        muses = [r for r in brute_mus_enum(F) if (1,) in r.clauses and (2,) in r.clauses]
        assert len(paths) == len(muses)

        images = set()
        for path in paths:
            clauses = {(1,), (2,)}
            for a, b in zip(path.vertices, path.vertices[1:]):
                clauses.add(G.clause_of_arc(a, b))
            images.add(frozenset(clauses))
        assert len(images) == len(paths)
        assert images == {frozenset(r.clauses) for r in muses}

        record = mus_two_units(F, 1, 2)
        assert (record is not None) == bool(paths)
        if record is not None:
            assert frozenset(record.clauses) in images
            shortest = mus_two_units(F, 1, 2, shortest=True)
            assert len(shortest.clauses) == min(len(m.clauses) for m in muses)


def test_two_unit_bijection_counts():
    _check_two_unit_bijection(_two_unit_instances(150, 31))


@pytest.mark.slow
def test_two_unit_bijection_thousand_instances():
    _check_two_unit_bijection(_two_unit_instances(1000, 41))


def test_one_unit_agrees_with_oracle():
    rng = np.random.default_rng(37)
    for _ in range(120):
        F = random_pcls2(4, int(rng.integers(3, 10)), rng, units=[1])
        record = mus_one_unit(F, 1)
        has_mus = any((1,) in r.clauses for r in brute_mus_enum(F))
        assert (record is not None) == has_mus
        if record is not None:
            assert brute_is_mu(ClauseSet(record.clauses))


def test_sweep_pairs_cover_permutations():
    F = ClauseSet([(1,), (2,), (3,), (-1, -3)])
    record = mus_unit_sweep(F, 'exactly-two')
    assert set(record.clauses) == {(1,), (3,), (-1, -3)}
    assert any(mus_two_units(F, x, y) is not None for x, y in permutations([1, 2, 3], 2))
