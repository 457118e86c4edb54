"""
Проверка утверждений о tFC на малых st-графах: перебор всех графов
до k вершин и случайные выборки
"""
from itertools import permutations
from typing import Iterator, List, Optional, Tuple

import numpy as np

from cnf.clause_set import ClauseSet, satisfies
from cnf.literals import Assignment
from engine.mu_check import family_or_none
from engine.twosat import solve_2sat
from hardness.cdpp import (
    StArc,
    StDigraph,
    has_special_closed_walk,
    has_special_cycle,
    translate_cdpp,
    translate_cdpp_prime,
)
from oracle.brute import brute_mus_enum
from storage.models import TheoremReport
from utils.constants import DEFAULT_HARDNESS_MAX_VERTICES, DEFAULT_ORACLE_MAX_CLAUSES
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.Lab')

S_VERTEX = 1
T_VERTEX = 2


def constant_assignment(G: StDigraph) -> Optional[Tuple[Assignment, str]]:
    """
    Постоянное присваивание, выполняющее tFC(G), если у s или t нет
    входящих или исходящих дуг. Случаи проверяются по порядку.
    """
    sources = {a for a, _ in G.arcs}
    targets = {b for _, b in G.arcs}
    cases = (
        (G.s not in sources, 'no arc out of s', 1, 0),
        (G.s not in targets, 'no arc into s', 0, 1),
        (G.t not in sources, 'no arc out of t', 0, 0),
        (G.t not in targets, 'no arc into t', 1, 1),
    )
    for applies, case, x0_value, rest_value in cases:
        if applies:
            phi = {v: rest_value for v in G.vertices if v not in (G.s, G.t)}
            phi[G.x0] = x0_value
            return phi, case
    return None


def _allowed_arcs(k: int) -> List[StArc]:
    return [(a, b) for a, b in permutations(range(1, k + 1), 2)
            if {a, b} != {S_VERTEX, T_VERTEX}]


def all_st_digraphs(k: int) -> Iterator[StDigraph]:
    """Все st-графы на вершинах 1..k (s = 1, t = 2)"""
    if k < 2:
        raise TwoMusError(ErrorType.INVALID_INSTANCE, "st-граф требует не менее двух вершин")
    allowed = _allowed_arcs(k)
    vertices = tuple(range(1, k + 1))
    for mask in range(1 << len(allowed)):
        arcs = tuple(arc for i, arc in enumerate(allowed) if mask >> i & 1)
        yield StDigraph(vertices=vertices, arcs=arcs, s=S_VERTEX, t=T_VERTEX)


def random_st_digraph(k: int, rng: np.random.Generator, p: float = 0.3) -> StDigraph:
    """Случайный st-граф: каждая допустимая дуга с вероятностью p"""
    allowed = _allowed_arcs(k)
    keep = rng.random(len(allowed)) < p
    arcs = tuple(arc for arc, flag in zip(allowed, keep) if flag)
    return StDigraph(vertices=tuple(range(1, k + 1)), arcs=arcs, s=S_VERTEX, t=T_VERTEX)


def _mus_sets(F: ClauseSet, max_clauses: int) -> List[ClauseSet]:
    return [ClauseSet(r.clauses, normalized=True) for r in brute_mus_enum(F, max_clauses)]


def verify_theorem_parts(G: StDigraph,
                         max_clauses: int = DEFAULT_ORACLE_MAX_CLAUSES,
                         max_vertices: int = DEFAULT_HARDNESS_MAX_VERTICES,
                         check_prime: bool = True) -> TheoremReport:
    """Проверка частей 1-5 и аналога для tFC' на одном st-графе"""
    F = translate_cdpp(G)
    sat = solve_2sat(F).satisfiable
    report = TheoremReport()

    constant = constant_assignment(G)
    if constant is not None:
        phi, _ = constant
        report.part1 = sat and satisfies(phi, F)

    report.has_walk = has_special_closed_walk(G)
    report.part3 = report.has_walk == (not sat)

    report.has_cycle = has_special_cycle(G, max_vertices)
    muses = _mus_sets(F, max_clauses)
    report.mus_count = len(muses)
    x0 = G.x0
    report.part2 = all(M.vdeg(x0) == 4 for M in muses)
    report.part4 = report.has_cycle == any(family_or_none(M) == 'III' for M in muses)
    report.part5 = report.has_cycle or all(M.deficiency >= 2 for M in muses)

    if check_prime:
        prime_muses = _mus_sets(translate_cdpp_prime(G), max_clauses)
        report.prime_family_iv = report.has_cycle == any(family_or_none(M) == 'IV' for M in prime_muses)

    if not report.all_hold:
        logger.warning(f"✗ Нарушение на графе {G.arcs}: {report.to_dict()}")
    return report
