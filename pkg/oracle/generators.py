"""
Генераторы экземпляров: шаблоны семейств I-IV, цепочки IIb для проверки
масштабирования и «ромбы» с экспоненциальным числом MUS
"""
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from cnf.clause_set import ClauseSet, apply_isomorphism
from cnf.literals import Clause, Literal
from utils.error_handler import ErrorType, TwoMusError

# (минимальные длины цепочек, длины по умолчанию)
FAMILY_SHAPES: Dict[str, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {
    'Ia': ((), ()),
    'Ib': ((0,), (0,)),
    'IIa': ((1,), (1,)),
    'IIb': ((0, 1), (0, 1)),
    'III': ((1, 1), (1, 1)),
    'IV': ((1, 0, 1), (1, 0, 1)),
}


class _Fresh:
    def __init__(self):
        self.next = 1

    def __call__(self) -> int:
        v = self.next
        self.next += 1
        return v

    def chain(self, m: int) -> List[int]:
        return [self() for _ in range(m)]


def _arcs(vertices: Sequence[Literal]) -> List[Clause]:
    """Клаузы пути: дуга a -> b даёт {-a, b}"""
    return [(-a, b) for a, b in zip(vertices, vertices[1:])]


def _template(tag: str, lengths: Tuple[int, ...]) -> List[Clause]:
    fresh = _Fresh()
    x = fresh()
    if tag == 'Ia':
        return [(x,), (-x,)]
    if tag == 'Ib':
        inner = fresh.chain(lengths[0])
        y = fresh()
        return [(x,), (y,)] + _arcs([x, *inner, -y])
    if tag == 'IIa':
        inner = fresh.chain(lengths[0])
        return [(x,)] + _arcs([x, *inner, -x])
    if tag == 'IIb':
        first = fresh.chain(lengths[0])
        y = fresh()
        second = fresh.chain(lengths[1])
        return [(x,)] + _arcs([x, *first, y, *second, -y])
    if tag == 'III':
        first = fresh.chain(lengths[0])
        second = fresh.chain(lengths[1])
        return _arcs([x, *first, -x, *second, x])
    # IV
    first = fresh.chain(lengths[0])
    second = fresh.chain(lengths[1])
    y = fresh()
    third = fresh.chain(lengths[2])
    return _arcs([x, *first, -x, *second, y, *third, -y])


def gen_family(tag: str, lengths: Sequence[int] = (), seed: Optional[int] = None) -> ClauseSet:
    """
    Экземпляр шаблона семейства на свежих переменных; при заданном seed -
    случайное переименование, смена полярностей и порядок клауз.
    Длины считают внутренние вершины цепочек.
    """
    if tag not in FAMILY_SHAPES:
        raise TwoMusError(ErrorType.PRECONDITION, f"неизвестное семейство: {tag}")
    minimal, default = FAMILY_SHAPES[tag]
    lengths = tuple(int(m) for m in lengths) if lengths else default
    if len(lengths) != len(minimal) or any(m < lo for m, lo in zip(lengths, minimal)):
        raise TwoMusError(ErrorType.INCONSISTENT_LENGTHS,
                          f"длины {list(lengths)} не подходят семейству {tag} (минимум {list(minimal)})",
                          {'tag': tag, 'lengths': list(lengths)})

    F = ClauseSet(_template(tag, lengths))
    if seed is None:
        return F

    rng = np.random.default_rng(seed)
    variables = F.variables
    images = rng.permutation(len(variables)) + 1
    rename = {v: int(w) for v, w in zip(variables, images)}
    flip = [v for v, bit in zip(variables, rng.random(len(variables)) < 0.5) if bit]
    order = rng.permutation(len(F))
    shuffled = ClauseSet((F.clauses[int(i)] for i in order), normalized=True)
    return apply_isomorphism(shuffled, rename, flip)


def iib_chain(c: int) -> ClauseSet:
    """Цепочка семейства IIb ровно из c клауз (c ≥ 4)"""
    if c < 4:
        raise TwoMusError(ErrorType.INCONSISTENT_LENGTHS, "цепочка IIb содержит не менее четырёх клауз")
    m1 = (c - 4) // 2
    m2 = c - 3 - m1
    x, y = 1, m1 + 2
    first = list(range(2, m1 + 2))
    second = list(range(m1 + 3, m1 + 3 + m2))
    clauses: List[Clause] = [(x,)]
    for a, b in zip([x, *first, y, *second], [*first, y, *second, -y]):
        clauses.append((-a, b) if abs(a) < abs(b) else (b, -a))
    return ClauseSet(clauses, normalized=True)


def diamond_chain_instance(k: int) -> ClauseSet:
    """
    {x} и k последовательных «ромбов» от x к -x: u_i -> a_i -> u_{i+1},
    u_i -> b_i -> u_{i+1}, u_0 = x, u_k = -x. Даёт 2^k MUS семейства IIa.
    """
    if k < 1:
        raise TwoMusError(ErrorType.INCONSISTENT_LENGTHS, "требуется хотя бы один ромб")
    fresh = _Fresh()
    x = fresh()
    hubs = [x] + fresh.chain(k - 1) + [-x]
    clauses: List[Clause] = [(x,)]
    for i in range(k):
        a, b = fresh(), fresh()
        clauses.extend(_arcs([hubs[i], a, hubs[i + 1]]))
        clauses.extend(_arcs([hubs[i], b, hubs[i + 1]]))
    return ClauseSet(clauses)
