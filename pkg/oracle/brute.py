"""
Переборные эталоны для тестов: все MUS, все простые / регулярные /
почти регулярные пути, случайные формулы Pcls2
"""
from enum import Enum
from functools import cmp_to_key
from itertools import combinations
from typing import List, Optional, Sequence

import igraph as ig
import numpy as np

from cnf.clause_set import ClauseSet
from cnf.literals import Clause, Literal
from engine.mu_check import family_or_none
from engine.twosat import is_satisfiable
from graph.implication import ImpDigraph
from graph.paths import Path, pathlex_compare
from storage.models import MusRecord
from utils.constants import DEFAULT_ORACLE_MAX_CLAUSES, DEFAULT_ORACLE_MAX_VERTICES
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.Oracle')


class PathMode(Enum):
    SIMPLE = "simple"
    REGULAR = "regular"
    NEARLY_REGULAR = "nearly-regular"


def brute_is_mu(F: ClauseSet) -> bool:
    """F невыполнима, удаление любой клаузы делает её выполнимой"""
    clauses = F.clauses
    if is_satisfiable(clauses):
        return False
    return all(is_satisfiable(clauses[:i] + clauses[i + 1:]) for i in range(len(clauses)))


def brute_mus_enum(F: ClauseSet, max_clauses: int = DEFAULT_ORACLE_MAX_CLAUSES) -> List[MusRecord]:
    """
    Все MUS перебором подмножеств по размеру, затем лексикографически.
    Надмножества найденных MUS пропускаются.
    """
    if len(F) > max_clauses:
        raise TwoMusError(ErrorType.SIZE_BOUND,
                          f"c(F) = {len(F)} превышает границу {max_clauses}",
                          {'clauses': len(F), 'bound': max_clauses})
    if is_satisfiable(F.clauses):
        return []

    found: List[frozenset] = []
    records: List[MusRecord] = []
    for size in range(1, len(F) + 1):
        for positions in combinations(range(len(F)), size):
            chosen = frozenset(positions)
            if any(mus <= chosen for mus in found):
                continue
            sub = F.subset(positions)
            if brute_is_mu(sub):
                found.append(chosen)
                records.append(MusRecord(indices=sub.origin, clauses=sub.clauses,
                                         family=family_or_none(sub)))
    logger.debug(f"✓ Перебор: {len(records)} MUS")
    return records


def brute_paths(G: ImpDigraph,
                x: Literal,
                mode: PathMode,
                y: Optional[Literal] = None,
                max_vertices: int = DEFAULT_ORACLE_MAX_VERTICES) -> List[Path]:
    """
    Все пути из x: простые или регулярные до y, либо почти регулярные
    (единственный конфликт в последней вершине). Результат в pathlex порядке.
    """
    mode = PathMode(mode)
    if len(G.vertices) > max_vertices:
        raise TwoMusError(ErrorType.SIZE_BOUND,
                          f"|V(G)| = {len(G.vertices)} превышает границу {max_vertices}",
                          {'vertices': len(G.vertices), 'bound': max_vertices})

    if mode is PathMode.NEARLY_REGULAR:
        paths = _nearly_regular_paths(G, x)
    else:
        if y is None:
            raise TwoMusError(ErrorType.PRECONDITION, f"режим {mode.value} требует конечную вершину")
        paths = _simple_paths(G, x, y)
        if mode is PathMode.REGULAR:
            paths = [p for p in paths if p.is_regular()]

    order = G.order
    return sorted(paths, key=cmp_to_key(lambda p, q: pathlex_compare(order, p, q)))


def _simple_paths(G: ImpDigraph, x: Literal, y: Literal) -> List[Path]:
    if x == y:
        return [Path((x,))]
    index = {v: i for i, v in enumerate(G.vertices)}
    graph = ig.Graph(n=len(G.vertices),
                     edges=[(index[a], index[b]) for a, b in G.arcs()],
                     directed=True)
    found = graph.get_all_simple_paths(index[x], to=index[y], mode="out")
    return [Path(tuple(G.vertices[i] for i in p)) for p in found]


def _nearly_regular_paths(G: ImpDigraph, x: Literal) -> List[Path]:
    """T-DFS: продолжать бесконфликтный префикс, фиксировать путь на первом конфликте"""
    result: List[Path] = []
    path = [x]
    on_path = {x}

    def extend() -> None:
        for z in G.out(path[-1]):
            if -z in on_path:
                result.append(Path(tuple(path) + (z,)))
            elif z not in on_path:
                path.append(z)
                on_path.add(z)
                extend()
                on_path.discard(path.pop())

    extend()
    return result


def random_pcls2(num_vars: int,
                 num_clauses: int,
                 rng: np.random.Generator,
                 units: Sequence[Literal] = ()) -> ClauseSet:
    """Случайная формула из Pcls2*: заданные unit-клаузы и различные бинарные клаузы"""
    literals = [s * v for v in range(1, num_vars + 1) for s in (1, -1)]
    pool: List[Clause] = [(a, b) for a, b in combinations(literals, 2) if abs(a) != abs(b)]
    take = min(num_clauses, len(pool))
    chosen = rng.choice(len(pool), size=take, replace=False) if take else []
    clauses: List[Clause] = [(int(u),) for u in units]
    clauses.extend(pool[int(i)] for i in chosen)
    return ClauseSet(clauses)
