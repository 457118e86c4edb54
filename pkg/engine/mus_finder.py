"""
Поиск одного MUS: удаление клауз, MUS с двумя unit-клаузами по регулярному
пути x -> -y, MUS с одной unit-клаузой, прямой поиск семейства IIa,
кратчайший MUS семейства I и обходы по unit-клаузам
"""
from itertools import permutations
from typing import List, Optional, Union

from cnf.clause_set import ClauseSet
from cnf.literals import Clause, Literal, lit_str
from engine.enumerator import enum_unit, record_from_path, unit_literal
from engine.mu_check import family_or_none
from engine.twosat import is_satisfiable, solve_2sat
from graph.implication import LitOrder, build_idg
from graph.regular import regular_path
from storage.models import MusRecord
from utils.constants import SWEEP_MODES
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.MusFinder')

Unit = Union[Literal, Clause]


def find_mus_deletion(F: ClauseSet) -> MusRecord:
    """
    Один проход по клаузам в порядке хранения: клауза выбрасывается,
    если остаток остаётся невыполнимым
    """
    if solve_2sat(F).satisfiable:
        raise TwoMusError(ErrorType.SATISFIABLE_INPUT, "F выполнима, MUS не существует")

    kept: List[int] = list(range(len(F)))
    for pos in range(len(F)):
        trial = [i for i in kept if i != pos]
        if not is_satisfiable(F.clauses[i] for i in trial):
            kept = trial

    core = F.subset(kept)
    logger.info(f"✓ Удаление: {len(F)} -> {len(core)} клауз")
    return MusRecord(indices=core.origin, clauses=core.clauses, family=family_or_none(core))


def mus_two_units(F: ClauseSet,
                  ux: Unit,
                  uy: Unit,
                  shortest: bool = False,
                  order: Optional[LitOrder] = None) -> Optional[MusRecord]:
    """MUS из mus_{{x},{y}}(F): F(P) ∪ {{x},{y}} для регулярного пути P: x -> -y"""
    x = unit_literal(F, ux)
    y = unit_literal(F, uy)
    if x == y:
        raise TwoMusError(ErrorType.IDENTICAL_UNITS, f"unit-клаузы совпадают: {{{lit_str(x)}}}")
    G = build_idg(F, order)

    if y == -x:
        return record_from_path(F, G, (x, -x), 'Ia')

    path = regular_path(G, x, -y, shortest=shortest)
    if path is None:
        return None
    return record_from_path(F, G, path.vertices + (y,), 'Ib')


def mus_one_unit(F: ClauseSet, ux: Unit, order: Optional[LitOrder] = None) -> Optional[MusRecord]:
    """Первый MUS перечисления mus_{{x}}(F): путь x -> -x, обрезанный на первом конфликте"""
    return next(iter(enum_unit(F, ux, order)), None)


def mus_family_iia(F: ClauseSet, ux: Unit, order: Optional[LitOrder] = None) -> Optional[MusRecord]:
    """
    MUS семейства IIa с {x}: регулярный путь x -> y и дуга (y, -x),
    т.е. клауза {-y, -x}
    """
    x = unit_literal(F, ux)
    G = build_idg(F, order)
    for y in G.inn(-x):
        if abs(y) == abs(x):
            continue
        path = regular_path(G, x, y)
        if path is not None:
            return record_from_path(F, G, path.vertices + (-x,), 'IIa')
    logger.debug(f"⊘ MUS семейства IIa с {{{lit_str(x)}}} нет")
    return None


def _unit_literals(F: ClauseSet, order: Optional[LitOrder]) -> List[Literal]:
    order = order or LitOrder.default()
    return order.sorted(c[0] for c in F.units())


def mus_unit_sweep(F: ClauseSet, mode: str, order: Optional[LitOrder] = None) -> Optional[MusRecord]:
    """
    exactly-two: упорядоченные пары unit-клауз; at-least-one: mus_one_unit
    по каждой unit-клаузе; exactly-one: то же на F без остальных unit-клауз
    """
    if mode not in SWEEP_MODES:
        raise TwoMusError(ErrorType.FLAG_ERROR, f"неизвестный режим обхода: {mode}")
    if F.has_bottom:
        raise TwoMusError(ErrorType.EMPTY_CLAUSE, "обход unit-клауз требует F без ⊥")

    units = _unit_literals(F, order)
    if not units:
        logger.info("⊘ В F нет unit-клауз")
        return None

    if mode == 'exactly-two':
        for x, y in permutations(units, 2):
            record = mus_two_units(F, x, y, order=order)
            if record is not None:
                return record
        return None

    for x in units:
        if mode == 'exactly-one':
            host = F.without(F.position((u,)) for u in units if u != x)
        else:
            host = F
        record = mus_one_unit(host, x, order)
        if record is not None:
            return record
    return None


def shortest_family_i_mus(F: ClauseSet, order: Optional[LitOrder] = None) -> Optional[MusRecord]:
    """Кратчайший MUS семейства I: минимум по парам unit-клауз"""
    units = _unit_literals(F, order)
    best: Optional[MusRecord] = None
    for i, x in enumerate(units):
        for y in units[i + 1:]:
            record = mus_two_units(F, x, y, shortest=True, order=order)
            if record is not None and (best is None or len(record.clauses) < len(best.clauses)):
                best = record
    return best
