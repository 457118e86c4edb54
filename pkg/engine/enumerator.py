"""
Перечисление MUS, содержащих unit-клаузу, в L-pathlex порядке

Курсор обходит почти регулярные пути из x явным стеком (без рекурсии):
на каждом узле одним обратным BFS от -x в G - V(P) вычисляется R, узлы
из R обходятся в порядке L. Путь с конфликтом отдаётся на вывод;
путь семейства II печатается, только если он меньше своего «брата»
P0;contrapose(P1).
"""
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Set, TextIO, Tuple, Union

from cnf.clause_set import ClauseSet
from cnf.literals import Clause, Literal, lit_str
from graph.implication import ImpDigraph, LitOrder, StepCounter, build_idg, reach, reverse_reach_set
from graph.paths import pathlex_compare
from storage.models import EnumStats, MusRecord, TraceRow
from utils.constants import (
    EVENT_CLASH,
    EVENT_DFS,
    EVENT_INIT,
    EVENT_OUTPUT,
    EVENT_SILENT,
    NO_VALUE,
)
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.Enum')

RowCallback = Callable[[TraceRow], None]


@dataclass
class DeliveredPath:
    """Путь, переданный на вывод"""
    path: Tuple[Literal, ...]
    printed: bool
    family: str
    sibling: Optional[Tuple[Literal, ...]]
    delay: int


class _Frame:
    __slots__ = ('vertex', 'R', 'pos')

    def __init__(self, vertex: Literal, R: List[Literal]):
        self.vertex = vertex
        self.R = R
        self.pos = 0


def unit_literal(F: ClauseSet, ux: Union[Literal, Clause]) -> Literal:
    """Литерал x unit-клаузы {x} ∈ F"""
    clause = (ux,) if isinstance(ux, int) else tuple(ux)
    if len(clause) != 1 or clause not in F:
        raise TwoMusError(ErrorType.MISSING_UNIT,
                          f"unit-клауза {clause!r} отсутствует в F",
                          {'unit': list(clause)})
    return clause[0]


def record_from_path(F: ClauseSet, G: ImpDigraph, path: Tuple[Literal, ...], family: str) -> MusRecord:
    """F(P) = {x} ∪ CL(E(P)) в порядке пути"""
    x = path[0]
    unit_pos = F.position((x,))
    indices = [F.origin[unit_pos]]
    clauses = [F.clauses[unit_pos]]
    for a, b in zip(path, path[1:]):
        pos = G.clause_index_of_arc(a, b)
        indices.append(F.origin[pos])
        clauses.append(F.clauses[pos])
    return MusRecord(indices=tuple(indices), clauses=tuple(clauses), family=family, witness=tuple(path))


def _fmt_path(lits) -> str:
    return "(" + ",".join(lit_str(z) for z in lits) + ")"


class EnumCursor:
    """
    Ленивый курсор по mus_{{x}}(F).

    records() - только печатаемые MUS; paths() - все пути, доставленные
    на вывод (включая «тихие»). Оба потока читают один и тот же обход.
    """

    def __init__(self,
                 F: ClauseSet,
                 ux: Union[Literal, Clause],
                 order: Optional[LitOrder] = None,
                 trace: bool = False,
                 check_invariants: bool = False,
                 on_row: Optional[RowCallback] = None):
        self.F = F
        self.G = build_idg(F, order)
        self.order = self.G.order
        self.x = unit_literal(F, ux)
        self.trace = trace or on_row is not None
        self.check_invariants = check_invariants
        self.on_row = on_row

        self.stats = EnumStats()
        self.rows: List[TraceRow] = []
        self._counter = StepCounter()
        self._last_delivery = 0
        self._step = 0
        self._path: List[Literal] = []
        self._on_path: Set[Literal] = set()
        self._stack: List[_Frame] = []
        self._output_step: Dict[Tuple[Literal, ...], int] = {}
        self._deliveries = self._walk()

    # -- потоки ----------------------------------------------------------

    def __iter__(self) -> Iterator[MusRecord]:
        return self.records()

    def records(self) -> Iterator[MusRecord]:
        for delivered in self._deliveries:
            if delivered.printed:
                yield record_from_path(self.F, self.G, delivered.path, delivered.family)

    def paths(self) -> Iterator[DeliveredPath]:
        yield from self._deliveries

    # -- обход -----------------------------------------------------------

    def _walk(self) -> Iterator[DeliveredPath]:
        x = self.x
        if not reach(self.G, x, -x, counter=self._counter):
            logger.debug(f"⊘ {lit_str(-x)} недостижим из {lit_str(x)}: MUS с {{{lit_str(x)}}} нет")
            return

        self._push(x, initial=True)
        while self._stack:
            frame = self._stack[-1]
            if frame.pos >= len(frame.R):
                self._stack.pop()
                self._on_path.discard(self._path.pop())
                continue

            z = frame.R[frame.pos]
            frame.pos += 1
            if -z in self._on_path:
                self._path.append(z)
                self.stats.nodes += 1
                self._row(EVENT_DFS, z, NO_VALUE)
                self._row(EVENT_CLASH, z, NO_VALUE)
                yield self._output()
                self._path.pop()
            else:
                self._push(z)

        logger.debug(f"✓ Обход завершён: {self.stats.paths} путей, {self.stats.mus} MUS, "
                     f"{self.stats.silent} тихих")

    def _push(self, z: Literal, initial: bool = False) -> None:
        self._path.append(z)
        self._on_path.add(z)
        self.stats.nodes += 1
        if self.check_invariants:
            self._check_path_invariants()

        reachable = reverse_reach_set(self.G, -self.x, excluded=self._on_path, counter=self._counter)
        succ = self.G.out(z)
        self._counter.add(len(succ))
        R = [w for w in succ if w not in self._on_path and w in reachable]
        self._stack.append(_Frame(z, R))
        self._row(EVENT_INIT if initial else EVENT_DFS, z, _fmt_path(R))

    def _check_path_invariants(self) -> None:
        top = self._path[-1]
        prefix = self._path[:-1]
        if any(-v in self._on_path for v in self._path):
            raise TwoMusError(ErrorType.INVARIANT_VIOLATION, f"путь {_fmt_path(self._path)} содержит конфликт")
        if prefix and not self.G.has_arc(prefix[-1], top):
            raise TwoMusError(ErrorType.INVARIANT_VIOLATION, f"нет дуги {lit_str(prefix[-1])} -> {lit_str(top)}")
        if not reach(self.G, top, -self.x, excluded=set(prefix)):
            raise TwoMusError(ErrorType.INVARIANT_VIOLATION,
                              f"{lit_str(-self.x)} недостижим из {lit_str(top)} в G - V(P)")

    def _output(self) -> DeliveredPath:
        path = tuple(self._path)
        a, b = path[-2], path[-1]
        if b == -a:
            family = 'Ia' if len(path) == 2 else 'Ib'
            sibling = None
            printed = True
            note = "Family I"
        else:
            i = path.index(-b)
            sibling = path[:i] + tuple(-v for v in reversed(path[i:]))
            printed = pathlex_compare(self.order, path, sibling) < 0
            family = 'IIa' if i == 0 else 'IIb'
            if printed:
                note = f"Family {family}"
            else:
                note = f"sibling of step {self._output_step.get(sibling, '?')}"

        step = self._row(EVENT_OUTPUT if printed else EVENT_SILENT, b, NO_VALUE, note)
        if self.trace and printed:
            self._output_step[path] = step

        self.stats.paths += 1
        if printed:
            self.stats.mus += 1
        else:
            self.stats.silent += 1

        delay = self._counter.steps - self._last_delivery
        self._last_delivery = self._counter.steps
        self.stats.work = self._counter.steps
        self.stats.max_delay = max(self.stats.max_delay, delay)
        return DeliveredPath(path=path, printed=printed, family=family, sibling=sibling, delay=delay)

    def _row(self, event: str, y: Literal, R: str, notes: str = "") -> int:
        self._step += 1
        if self.trace:
            row = TraceRow(step=self._step, event=event, y=lit_str(y), R=R,
                           P=_fmt_path(self._path), notes=notes)
            self.rows.append(row)
            if self.on_row is not None:
                self.on_row(row)
        return self._step


def enum_unit(F: ClauseSet,
              ux: Union[Literal, Clause],
              order: Optional[LitOrder] = None,
              **kwargs) -> EnumCursor:
    """Курсор по mus_{{x}}(F) в L-pathlex порядке"""
    return EnumCursor(F, ux, order, **kwargs)


def enum_all_units(F: ClauseSet,
                   order: Optional[LitOrder] = None,
                   **kwargs) -> Iterator[MusRecord]:
    """
    Все MUS с unit-клаузой: unit-клаузы в порядке L, после раунда
    обработанная unit-клауза удаляется
    """
    G = build_idg(F, order)
    units = G.order.sorted(c[0] for c in F.units())
    current = F
    for x in units:
        logger.debug(f"✓ Раунд для {{{lit_str(x)}}}")
        yield from EnumCursor(current, x, G.order, **kwargs).records()
        current = current.without_clause((x,))


def print_mus(record: MusRecord, sink: Optional[TextIO] = None) -> str:
    """
    DIMACS-блок MUS по пути-свидетелю: заголовок n = length(P), c = length(P) + 1,
    затем {x}, затем по дуге: unit-дуга (y,-y) -> {-y}, иначе {-y, z}
    """
    if record.witness is None:
        raise TwoMusError(ErrorType.PRECONDITION, "печать по пути требует свидетеля")
    P = record.witness
    n = len(P) - 1
    lines = [f"p cnf {n} {n + 1}", f"{P[0]} 0"]
    for y, z in zip(P, P[1:]):
        if z == -y:
            lines.append(f"{z} 0")
        else:
            lines.append(f"{-y} {z} 0")
    text = "\n".join(lines) + "\n"
    if sink is not None:
        sink.write(text)
    return text
