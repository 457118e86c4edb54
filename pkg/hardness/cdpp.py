"""
st-графы, трансляции tFC / tFC' и проверки C-DPP

В tFC вершина s переходит в x0, t - в -x0, остальные вершины - в себя;
дуга (a, b) становится клаузой {-t(a), t(b)}. В tFC' добавляется клауза
{x0, y0}, а дуги из t и в s переписываются через y0.
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Set, Tuple, Union

import igraph as ig

from cnf.clause_set import ClauseSet
from cnf.literals import Clause, Literal
from utils.constants import DEFAULT_HARDNESS_MAX_VERTICES
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.Hardness')

StArc = Tuple[int, int]


@dataclass(frozen=True)
class StDigraph:
    """Орграф с выделенными s, t; дуг (s,t) и (t,s) нет"""
    vertices: Tuple[int, ...]
    arcs: Tuple[StArc, ...]
    s: int
    t: int
    _succ: Dict[int, Tuple[int, ...]] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(sorted(set(self.vertices)))
        arcs = tuple(dict.fromkeys((int(a), int(b)) for a, b in self.arcs))
        object.__setattr__(self, 'vertices', vertices)
        object.__setattr__(self, 'arcs', arcs)
        self._validate()

        succ: Dict[int, List[int]] = {v: [] for v in vertices}
        for a, b in arcs:
            succ[a].append(b)
        object.__setattr__(self, '_succ', {v: tuple(ws) for v, ws in succ.items()})

    def _validate(self) -> None:
        if any(not isinstance(v, int) or v <= 0 for v in self.vertices):
            raise TwoMusError(ErrorType.INVALID_INSTANCE, "вершины должны быть положительными целыми")
        known = set(self.vertices)
        if self.s not in known or self.t not in known:
            raise TwoMusError(ErrorType.INVALID_INSTANCE, "s и t должны быть вершинами графа")
        if self.s == self.t:
            raise TwoMusError(ErrorType.INVALID_INSTANCE, "s и t совпадают")
        for a, b in self.arcs:
            if a not in known or b not in known:
                raise TwoMusError(ErrorType.INVALID_INSTANCE, f"дуга ({a},{b}) вне множества вершин")
            if a == b:
                raise TwoMusError(ErrorType.INVALID_INSTANCE, f"петля в вершине {a}")
            if {a, b} == {self.s, self.t}:
                raise TwoMusError(ErrorType.INVALID_INSTANCE, f"запрещённая дуга ({a},{b}) между s и t")

    @property
    def x0(self) -> int:
        return max(self.vertices) + 1

    @property
    def y0(self) -> int:
        return self.x0 + 1

    def successors(self, v: int) -> Tuple[int, ...]:
        return self._succ[v]

    def to_igraph(self) -> Tuple[ig.Graph, Dict[int, int]]:
        index = {v: i for i, v in enumerate(self.vertices)}
        graph = ig.Graph(n=len(self.vertices),
                         edges=[(index[a], index[b]) for a, b in self.arcs],
                         directed=True)
        return graph, index


def parse_st_digraph(text: Union[str, bytes]) -> StDigraph:
    """
    Формат: "s <id>", "t <id>", "e <from> <to>" на дугу, необязательно
    "v <id>" для изолированных вершин; "#" - комментарий
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise TwoMusError(ErrorType.PARSE_ERROR, f"не UTF-8: {e}")

    s = t = None
    vertices: Set[int] = set()
    arcs: List[StArc] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts[1:]]
        except ValueError:
            raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: ожидались целые числа",
                              {'line': raw})
        kind = parts[0]
        if kind in ('s', 't', 'v') and len(values) == 1:
            vertices.add(values[0])
            if kind == 's':
                s = values[0]
            elif kind == 't':
                t = values[0]
        elif kind == 'e' and len(values) == 2:
            arcs.append((values[0], values[1]))
            vertices.update(values)
        else:
            raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: нераспознанная запись",
                              {'line': raw})

    if s is None or t is None:
        raise TwoMusError(ErrorType.PARSE_ERROR, "не заданы s и t")
    return StDigraph(vertices=tuple(vertices), arcs=tuple(arcs), s=s, t=t)


def format_st_digraph(G: StDigraph) -> str:
    lines = [f"s {G.s}", f"t {G.t}"]
    used = {G.s, G.t} | {v for arc in G.arcs for v in arc}
    lines.extend(f"v {v}" for v in G.vertices if v not in used)
    lines.extend(f"e {a} {b}" for a, b in G.arcs)
    return "\n".join(lines) + "\n"


def _clause(a: Literal, b: Literal) -> Clause:
    """Клауза дуги a -> b"""
    return -a, b


def translate_cdpp(G: StDigraph) -> ClauseSet:
    """tFC(G) = {t(e) : e ∈ E(G)}"""
    x0 = G.x0

    def image(v: int) -> Literal:
        if v == G.s:
            return x0
        if v == G.t:
            return -x0
        return v

    return ClauseSet(_clause(image(a), image(b)) for a, b in G.arcs)


def translate_cdpp_prime(G: StDigraph) -> ClauseSet:
    """tFC'(G): клауза -x0 -> y0, дуги (t,v) -> y0 -> v, дуги (v,s) -> v -> -y0"""
    x0, y0 = G.x0, G.y0
    clauses: List[Clause] = [_clause(-x0, y0)]
    for a, b in G.arcs:
        if a == G.t:
            src = y0
        elif a == G.s:
            src = x0
        else:
            src = a
        if b == G.s:
            dst = -y0
        elif b == G.t:
            dst = -x0
        else:
            dst = b
        clauses.append(_clause(src, dst))
    return ClauseSet(clauses)


def has_special_closed_walk(G: StDigraph) -> bool:
    """Есть путь s -> t и путь t -> s"""
    graph, index = G.to_igraph()
    forward = index[G.t] in set(graph.subcomponent(index[G.s], mode="out"))
    if not forward:
        return False
    return index[G.s] in set(graph.subcomponent(index[G.t], mode="out"))


def _reaches(G: StDigraph, source: int, target: int, blocked: Set[int]) -> bool:
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in G.successors(v):
            if w == target:
                return True
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return False


def _st_paths(G: StDigraph) -> Iterator[List[int]]:
    """Простые пути s -> t в порядке DFS"""
    path = [G.s]
    on_path = {G.s}
    stack = [iter(G.successors(G.s))]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if w in on_path:
            continue
        if w == G.t:
            yield path + [w]
            continue
        # из w должен быть достижим t в обход текущего пути
        if not _reaches(G, w, G.t, on_path):
            continue
        path.append(w)
        on_path.add(w)
        stack.append(iter(G.successors(w)))


def has_special_cycle(G: StDigraph, max_vertices: int = DEFAULT_HARDNESS_MAX_VERTICES) -> bool:
    """Вершинно-непересекающиеся (кроме s, t) пути s -> t и t -> s"""
    if len(G.vertices) > max_vertices:
        raise TwoMusError(ErrorType.SIZE_BOUND,
                          f"|V| = {len(G.vertices)} превышает границу {max_vertices}",
                          {'vertices': len(G.vertices), 'bound': max_vertices})
    if not has_special_closed_walk(G):
        return False

    for path in _st_paths(G):
        if _reaches(G, G.t, G.s, set(path[1:-1])):
            logger.debug(f"✓ Специальный цикл через путь {path}")
            return True
    return False


def st_digraph_from_arcs(arcs: Iterable[StArc], s: int, t: int, vertices: Iterable[int] = ()) -> StDigraph:
    arcs = tuple(arcs)
    return StDigraph(vertices=tuple({s, t, *vertices, *(v for arc in arcs for v in arc)}),
                     arcs=arcs, s=s, t=t)
