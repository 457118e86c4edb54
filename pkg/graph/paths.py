"""
Пути в импликационном графе: контрапозиция, регулярное разложение, pathlex
"""
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from cnf.literals import Literal, lit_str
from graph.implication import Arc, ImpDigraph, LitOrder
from utils.error_handler import ErrorType, TwoMusError


@dataclass(frozen=True)
class Path:
    """Последовательность вершин"""
    vertices: Tuple[Literal, ...]

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.vertices)

    def __str__(self) -> str:
        return "(" + ",".join(lit_str(x) for x in self.vertices) + ")"

    @property
    def length(self) -> int:
        """Число дуг"""
        return max(len(self.vertices) - 1, 0)

    @property
    def first(self) -> Literal:
        return self.vertices[0]

    @property
    def last(self) -> Literal:
        return self.vertices[-1]

    def arcs(self) -> Tuple[Arc, ...]:
        v = self.vertices
        return tuple((v[i], v[i + 1]) for i in range(len(v) - 1))

    def is_simple(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def is_regular(self) -> bool:
        """Множество вершин без пар x, -x"""
        seen = set(self.vertices)
        return len(seen) == len(self.vertices) and not any(-x in seen for x in seen)

    def clash_index(self) -> Optional[int]:
        """
        Индекс i, для которого vertices[i] = -last, если путь почти регулярен;
        иначе None
        """
        if len(self.vertices) < 2:
            return None
        prefix = Path(self.vertices[:-1])
        if not prefix.is_regular():
            return None
        last = self.vertices[-1]
        if last in prefix.vertices:
            return None
        try:
            return prefix.vertices.index(-last)
        except ValueError:
            return None

    def is_nearly_regular(self) -> bool:
        return self.clash_index() is not None

    def lies_in(self, G: ImpDigraph) -> bool:
        return all(x in G for x in self.vertices) and all(G.has_arc(a, b) for a, b in self.arcs())


def contrapose_path(P: Path) -> Path:
    """Контрапозиция: все дуги обращены, порядок развёрнут"""
    if P.length < 1:
        raise TwoMusError(ErrorType.ZERO_LENGTH_PATH, "контрапозиция пути длины 0")
    return Path(tuple(-x for x in reversed(P.vertices)))


def regular_decompose(P: Path) -> Tuple[Optional[Path], Path]:
    """
    Разложение P = P0;P1: P0 регулярен или пуст (None), last(P1) = -first(P1)
    """
    i = P.clash_index()
    if i is None:
        raise TwoMusError(ErrorType.NOT_NEARLY_REGULAR, f"путь {P} не почти регулярен")
    p0 = Path(P.vertices[:i + 1]) if i > 0 else None
    return p0, Path(P.vertices[i:])


def sibling_path(P: Path) -> Path:
    """P0;contrapose(P1) для почти регулярного P"""
    p0, p1 = regular_decompose(P)
    tail = contrapose_path(p1).vertices
    if p0 is None:
        return Path(tail)
    return Path(p0.vertices[:-1] + tail)


def pathlex_compare(order: LitOrder, P, Q) -> int:
    """
    Лексикографическое сравнение по L: -1, 0, 1.

    Собственный префикс меньше.
    """
    a = P.vertices if isinstance(P, Path) else tuple(P)
    b = Q.vertices if isinstance(Q, Path) else tuple(Q)
    for x, y in zip(a, b):
        if x != y:
            return -1 if order.key(x) < order.key(y) else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) < len(b) else 1
