"""
Поиск регулярного (бесконфликтного) пути x -> y в импликационном графе

Регулярный путь проходит по попарно различным переменным, поэтому его
существование сводится к совершенному паросочетанию во вспомогательном
неориентированном графе: у каждой переменной v две вершины (v, +) и (v, -),
соединённые ребром-пропуском; бинарная клауза {a, b} - ребро между вершинами
литералов a и b. Из графа удаляются вершина литерала x и вершина литерала -y.
Вход в вершину пути z покрывает узел z, выход из z - узел -z; переменные вне
пути покрыты пропусками. Цепочка партнёров от узла -x заканчивается в узле y,
остальные рёбра клауз образуют циклы и отбрасываются.
"""
from typing import Dict, Optional, Tuple

import networkx as nx

from cnf.literals import Literal, lit_str
from graph.implication import ImpDigraph
from graph.paths import Path
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.RegularPath')

Node = Tuple[int, bool]

SKIP_WEIGHT = 2
CLAUSE_WEIGHT = 1


def _node(x: Literal) -> Node:
    return abs(x), x > 0


def _literal(node: Node) -> Literal:
    v, positive = node
    return v if positive else -v


def _matching_graph(G: ImpDigraph, x: Literal, y: Literal) -> nx.Graph:
    removed = {_node(x), _node(-y)}
    H = nx.Graph()
    for v in sorted({abs(z) for z in G.vertices}):
        for node in ((v, True), (v, False)):
            if node not in removed:
                H.add_node(node)
        if (v, True) not in removed and (v, False) not in removed:
            H.add_edge((v, True), (v, False), weight=SKIP_WEIGHT, skip=True)

    for a, b in G.arcs():
        if G.is_unit_arc(a, b) or not G.is_solid(a, b):
            continue
        p, q = _node(-a), _node(b)
        if p in removed or q in removed:
            continue
        H.add_edge(p, q, weight=CLAUSE_WEIGHT, skip=False)
    return H


def regular_path(G: ImpDigraph, x: Literal, y: Literal, shortest: bool = False) -> Optional[Path]:
    """
    Регулярный путь x -> y или None.

    shortest: минимальная длина (максимум рёбер-пропусков в паросочетании).
    Паросочетание networkx работает за O(n³) по числу литералов, не за линейное время.
    """
    for z in (x, y):
        if z not in G:
            raise TwoMusError(ErrorType.VERTEX_NOT_PRESENT, f"вершина {lit_str(z)} отсутствует в графе")
    if abs(x) == abs(y):
        raise TwoMusError(ErrorType.SAME_VARIABLE,
                          f"концы {lit_str(x)}, {lit_str(y)} над одной переменной")

    H = _matching_graph(G, x, y)
    if shortest:
        matching = nx.max_weight_matching(H, maxcardinality=True, weight='weight')
    else:
        matching = nx.max_weight_matching(H, maxcardinality=True, weight=None)

    if 2 * len(matching) != H.number_of_nodes():
        logger.debug(f"⊘ Регулярного пути {lit_str(x)} -> {lit_str(y)} нет")
        return None

    mate: Dict[Node, Node] = {}
    for p, q in matching:
        mate[p] = q
        mate[q] = p

    vertices = [x]
    node = _node(-x)
    target = _node(y)
    while True:
        nxt = mate[node]
        z = _literal(nxt)
        vertices.append(z)
        if nxt == target:
            break
        node = _node(-z)

    path = Path(tuple(vertices))
    if not path.is_regular() or not path.lies_in(G):
        raise TwoMusError(ErrorType.INVARIANT_VIOLATION, f"паросочетание дало некорректный путь {path}")

    logger.debug(f"✓ Регулярный путь {path}")
    return path
