"""
Импликационный граф 2-CNF, порядок на литералах и достижимость с исключением вершин
"""
from collections import deque
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from cnf.clause_set import ClauseSet
from cnf.literals import Clause, Literal, lit_str, literal_key
from utils.error_handler import ErrorType, TwoMusError

Arc = Tuple[Literal, Literal]


class LitOrder:
    """
    Линейный порядок L на литералах.

    По умолчанию x1 < -x1 < x2 < -x2 < ...; явный порядок задаётся списком.
    """

    def __init__(self, sequence: Optional[Sequence[Literal]] = None):
        self._rank: Optional[Dict[Literal, int]] = None
        if sequence is not None:
            rank: Dict[Literal, int] = {}
            for i, x in enumerate(sequence):
                if not isinstance(x, int) or x == 0:
                    raise TwoMusError(ErrorType.FLAG_ERROR, f"некорректный литерал в порядке: {x!r}")
                if x in rank:
                    raise TwoMusError(ErrorType.FLAG_ERROR, f"литерал {lit_str(x)} повторяется в порядке")
                rank[x] = i
            self._rank = rank

    @classmethod
    def default(cls) -> 'LitOrder':
        return cls()

    @property
    def explicit(self) -> bool:
        return self._rank is not None

    def key(self, x: Literal):
        if self._rank is None:
            return literal_key(x)
        return self._rank[x]

    def less(self, a: Literal, b: Literal) -> bool:
        return self.key(a) < self.key(b)

    def sorted(self, literals: Iterable[Literal]) -> List[Literal]:
        return sorted(literals, key=self.key)

    def validate(self, literals: Iterable[Literal]) -> None:
        """Каждый литерал должен иметь ранг"""
        if self._rank is None:
            return
        missing = [x for x in literals if x not in self._rank]
        if missing:
            raise TwoMusError(ErrorType.FLAG_ERROR,
                              f"порядок не содержит литерал {lit_str(missing[0])}",
                              {'missing': missing})


class StepCounter:
    """Счётчик элементарных шагов обхода"""

    def __init__(self):
        self.steps = 0

    def add(self, k: int = 1) -> None:
        self.steps += k


class ImpDigraph:
    """
    Импликационный граф idg(F).

    Клауза {a,b} даёт дуги (-a,b) и (-b,a), unit {a} - одну дугу (-a,a).
    Списки смежности отсортированы по порядку L.
    """

    def __init__(self, F: ClauseSet, order: Optional[LitOrder] = None):
        self.order = order or LitOrder.default()
        self.vertices: List[Literal] = F.literals()
        self.order.validate(self.vertices)

        self._arc_clause: Dict[Arc, int] = {}
        self._solid: Set[Arc] = set()
        self.clauses: Tuple[Clause, ...] = F.clauses
        out: Dict[Literal, List[Literal]] = {x: [] for x in self.vertices}
        inn: Dict[Literal, List[Literal]] = {x: [] for x in self.vertices}

        for idx, clause in enumerate(F.clauses):
            if len(clause) == 1:
                a = clause[0]
                arcs = [(-a, a)]
            else:
                a, b = clause
                arcs = [(-a, b), (-b, a)]
            for k, (p, q) in enumerate(arcs):
                self._arc_clause[(p, q)] = idx
                out[p].append(q)
                inn[q].append(p)
                if k == 0:
                    self._solid.add((p, q))

        key = self.order.key
        self._out = {x: sorted(ys, key=key) for x, ys in out.items()}
        self._in = {x: sorted(ys, key=key) for x, ys in inn.items()}

    def __contains__(self, x: Literal) -> bool:
        return x in self._out

    @property
    def num_arcs(self) -> int:
        return len(self._arc_clause)

    def out(self, x: Literal) -> List[Literal]:
        return self._out[x]

    def inn(self, x: Literal) -> List[Literal]:
        return self._in[x]

    def has_arc(self, a: Literal, b: Literal) -> bool:
        return (a, b) in self._arc_clause

    def arcs(self) -> Iterator[Arc]:
        for x in self.order.sorted(self.vertices):
            for y in self._out[x]:
                yield x, y

    def clause_index_of_arc(self, a: Literal, b: Literal) -> int:
        """Позиция клаузы CL(e) в F"""
        return self._arc_clause[(a, b)]

    def clause_of_arc(self, a: Literal, b: Literal) -> Clause:
        return self.clauses[self._arc_clause[(a, b)]]

    @staticmethod
    def is_unit_arc(a: Literal, b: Literal) -> bool:
        return b == -a

    def is_solid(self, a: Literal, b: Literal) -> bool:
        """Дуга в записи клаузы (в отличие от контрапозиции)"""
        return (a, b) in self._solid

    def clause_set(self) -> ClauseSet:
        """CL(E(G))"""
        return ClauseSet((self.clauses[i] for i in sorted(set(self._arc_clause.values()))),
                         normalized=True)

    def dump(self) -> str:
        """Список дуг 'x -> y' с флагом solid/dashed"""
        lines = []
        for a, b in self.arcs():
            flag = "solid" if self.is_solid(a, b) else "dashed"
            lines.append(f"{lit_str(a)} -> {lit_str(b)}\t{flag}")
        return "\n".join(lines)


def build_idg(F: ClauseSet, order: Optional[LitOrder] = None) -> ImpDigraph:
    """Импликационный граф; F не должно содержать ⊥"""
    if F.has_bottom:
        raise TwoMusError(ErrorType.EMPTY_CLAUSE, "импликационный граф не определён при ⊥ ∈ F")
    return ImpDigraph(F, order)


def _check_vertex(G: ImpDigraph, x: Literal) -> None:
    if x not in G:
        raise TwoMusError(ErrorType.VERTEX_NOT_PRESENT, f"вершина {lit_str(x)} отсутствует в графе")


def reach(G: ImpDigraph,
          x: Literal,
          y: Literal,
          excluded: Iterable[Literal] = (),
          counter: Optional[StepCounter] = None) -> bool:
    """Есть ли путь x -> y в G - excluded (BFS)"""
    _check_vertex(G, x)
    _check_vertex(G, y)
    blocked = excluded if isinstance(excluded, (set, frozenset)) else set(excluded)
    if x in blocked or y in blocked:
        return False
    if x == y:
        return True

    seen = {x}
    queue = deque([x])
    while queue:
        a = queue.popleft()
        succ = G.out(a)
        if counter is not None:
            counter.add(1 + len(succ))
        for b in succ:
            if b == y:
                return True
            if b not in seen and b not in blocked:
                seen.add(b)
                queue.append(b)
    return False


def reverse_reach_set(G: ImpDigraph,
                      target: Literal,
                      excluded: Iterable[Literal] = (),
                      counter: Optional[StepCounter] = None) -> Set[Literal]:
    """Все вершины, из которых target достижим в G - excluded (BFS по обратным дугам)"""
    _check_vertex(G, target)
    blocked = excluded if isinstance(excluded, (set, frozenset)) else set(excluded)
    if target in blocked:
        return set()

    seen = {target}
    queue = deque([target])
    while queue:
        a = queue.popleft()
        pred = G.inn(a)
        if counter is not None:
            counter.add(1 + len(pred))
        for b in pred:
            if b not in seen and b not in blocked:
                seen.add(b)
                queue.append(b)
    return seen
