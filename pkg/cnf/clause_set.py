"""
Множество клауз 2-CNF с мерами и таблицами степеней
"""
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from cnf.literals import (
    BOTTOM,
    Assignment,
    Clause,
    Literal,
    Variable,
    clause_str,
    literal_key,
    make_clause,
    value_of,
)
from storage.models import MeasureReport
from utils.error_handler import ErrorType, TwoMusError


class ClauseSet:
    """
    Неизменяемое множество клауз.

    Порядок первого появления сохраняется, ``origin[i]`` - индекс i-й клаузы
    во входной формуле (подмножества и образы наследуют его).
    """

    def __init__(self,
                 clauses: Iterable[Iterable[Literal]] = (),
                 origin: Optional[Sequence[int]] = None,
                 normalized: bool = False):
        kept: List[Clause] = []
        kept_origin: List[int] = []
        index: Dict[Clause, int] = {}

        for pos, raw in enumerate(clauses):
            clause = tuple(raw) if normalized else make_clause(raw)
            if clause in index:
                continue
            index[clause] = len(kept)
            kept.append(clause)
            kept_origin.append(origin[pos] if origin is not None else pos)

        self.clauses: Tuple[Clause, ...] = tuple(kept)
        self.origin: Tuple[int, ...] = tuple(kept_origin)
        self._index = index

    # -- контейнер -------------------------------------------------------

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __contains__(self, clause) -> bool:
        return tuple(sorted(clause, key=literal_key)) in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClauseSet):
            return NotImplemented
        return self.as_frozenset() == other.as_frozenset()

    def __hash__(self) -> int:
        return hash(self.as_frozenset())

    def __repr__(self) -> str:
        body = ", ".join(clause_str(c) for c in self.clauses[:12])
        more = ", ..." if len(self.clauses) > 12 else ""
        return f"ClauseSet({{{body}{more}}})"

    def as_frozenset(self) -> FrozenSet[Clause]:
        return frozenset(self.clauses)

    def position(self, clause: Clause) -> int:
        """Позиция клаузы в порядке хранения"""
        key = tuple(sorted(clause, key=literal_key))
        if key not in self._index:
            raise KeyError(clause_str(key))
        return self._index[key]

    # -- подмножества ----------------------------------------------------

    def subset(self, positions: Iterable[int]) -> 'ClauseSet':
        """Подмножество по позициям (порядок хранения сохраняется)"""
        chosen = sorted(set(positions))
        return ClauseSet((self.clauses[i] for i in chosen),
                         origin=[self.origin[i] for i in chosen],
                         normalized=True)

    def without(self, positions: Iterable[int]) -> 'ClauseSet':
        drop = set(positions)
        return self.subset(i for i in range(len(self.clauses)) if i not in drop)

    def without_clause(self, clause: Clause) -> 'ClauseSet':
        return self.without([self.position(clause)])

    def units(self) -> List[Clause]:
        return [c for c in self.clauses if len(c) == 1]

    @property
    def has_bottom(self) -> bool:
        return BOTTOM in self._index

    # -- меры ------------------------------------------------------------

    @cached_property
    def ell(self) -> int:
        return sum(len(c) for c in self.clauses)

    @cached_property
    def max_var(self) -> int:
        return max((abs(x) for c in self.clauses for x in c), default=0)

    @cached_property
    def _literal_counts(self) -> np.ndarray:
        """Счётчики вхождений: индекс 2(v-1) для v, 2(v-1)+1 для -v"""
        flat = np.fromiter((x for c in self.clauses for x in c), dtype=np.int64, count=self.ell)
        idx = 2 * (np.abs(flat) - 1) + (flat < 0)
        return np.bincount(idx, minlength=2 * self.max_var)

    @cached_property
    def _variable_counts(self) -> np.ndarray:
        return self._literal_counts.reshape(-1, 2).sum(axis=1)

    def ldeg(self, x: Literal) -> int:
        v = abs(x)
        if v > self.max_var:
            return 0
        return int(self._literal_counts[2 * (v - 1) + (x < 0)])

    def vdeg(self, v: Variable) -> int:
        if v <= 0 or v > self.max_var:
            return 0
        return int(self._variable_counts[v - 1])

    @cached_property
    def variables(self) -> Tuple[Variable, ...]:
        return tuple(int(v) + 1 for v in np.flatnonzero(self._variable_counts))

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def c(self) -> int:
        return len(self.clauses)

    @cached_property
    def u(self) -> int:
        return sum(1 for cl in self.clauses if len(cl) == 1)

    @property
    def deficiency(self) -> int:
        return self.c - self.n

    def literals(self) -> List[Literal]:
        """lit(F): обе полярности каждой переменной, в порядке x1, -x1, x2, ..."""
        return [x for v in self.variables for x in (v, -v)]

    def max_literal_degree(self) -> int:
        counts = self._literal_counts
        return int(counts.max()) if counts.size else 0

    def variables_of_degree(self, k: int) -> Tuple[Variable, ...]:
        """var_k(F)"""
        return tuple(int(v) + 1 for v in np.flatnonzero(self._variable_counts == k))

    def singular_variables(self) -> Tuple[Variable, ...]:
        """Переменные, у которых один из литералов встречается ровно один раз"""
        pairs = self._literal_counts.reshape(-1, 2)
        mask = (pairs[:, 0] == 1) | (pairs[:, 1] == 1)
        return tuple(int(v) + 1 for v in np.flatnonzero(mask))

    def one_singular_variables(self) -> Tuple[Variable, ...]:
        pairs = self._literal_counts.reshape(-1, 2)
        mask = (pairs[:, 0] == 1) & (pairs[:, 1] == 1)
        return tuple(int(v) + 1 for v in np.flatnonzero(mask))


def measures(F: ClauseSet) -> MeasureReport:
    """Все меры и счётчики степеней"""
    vcounts = F._variable_counts
    lcounts = F._literal_counts
    return MeasureReport(
        n=F.n,
        c=F.c,
        u=F.u,
        ell=F.ell,
        delta=F.deficiency,
        n_k={k: int(np.count_nonzero(vcounts == k)) for k in (2, 3, 4)},
        n_prime_k={k: int(np.count_nonzero(lcounts == k)) for k in (1, 2)},
        singular=list(F.singular_variables()),
        one_singular=list(F.one_singular_variables()),
    )


def satisfies(phi: Assignment, F: ClauseSet) -> bool:
    """φ удовлетворяет F: каждая клауза содержит литерал со значением 1"""
    missing = [v for v in F.variables if v not in phi]
    if missing:
        raise TwoMusError(ErrorType.UNDEFINED_VARIABLE,
                          f"присваивание не определено на x{missing[0]}",
                          {'variables': missing})
    for clause in F.clauses:
        if not any(value_of(phi, x) == 1 for x in clause):
            return False
    return True


def apply_isomorphism(F: ClauseSet,
                      rename: Optional[Mapping[Variable, Variable]] = None,
                      flip: Iterable[Variable] = ()) -> ClauseSet:
    """
    Образ F при переименовании переменных и смене полярности.

    flip задаётся в исходных переменных; сначала flip, затем rename.
    """
    flips = set(flip)
    if rename is None:
        mapping = {v: v for v in F.variables}
    else:
        mapping = dict(rename)
        domain = set(F.variables)
        if not domain.issubset(mapping.keys()):
            raise TwoMusError(ErrorType.NOT_BIJECTIVE, "rename не определён на всех переменных F")
        images = [mapping[v] for v in domain]
        if len(set(images)) != len(images) or any(
                not isinstance(w, int) or w <= 0 for w in images):
            raise TwoMusError(ErrorType.NOT_BIJECTIVE, "rename не является биекцией")

    def image(x: Literal) -> Literal:
        v = abs(x)
        y = mapping[v] if x > 0 else -mapping[v]
        return -y if v in flips else y

    return ClauseSet((tuple(sorted((image(x) for x in c), key=literal_key)) for c in F.clauses),
                     origin=F.origin, normalized=True)
