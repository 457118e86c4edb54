"""
Проверяемая сингулярная DP-редукция (csDP)

Шаг для сингулярной переменной v: литерал l с ldeg(l) = 1 (при выборе -
положительный), главная клауза C ∋ l, побочные D_1..D_m ∋ -l.
Проверка проваливается, если
  (i)   m = 0;
  (ii)  C и D_i конфликтуют по переменной, отличной от v;
  (iii) D_i \\ C = D_j \\ C для i ≠ j;
  (iv)  резольвента совпадает с клаузой E, не содержащей v.
Иначе C, D_i заменяются резольвентами (C ∪ D_i) \\ {v, -v}.
"""
import logging
from collections import deque
from typing import Callable, Dict, List, Optional, Set, Tuple

from cnf.clause_set import ClauseSet
from cnf.literals import Clause, Literal, Variable, clause_str, literal_key
from storage.models import CsdpFailure, CsdpOutcome, CsdpStep
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.Csdp')

StepCallback = Callable[[CsdpStep], None]


class _Reducer:
    """Изменяемое состояние редукции: клаузы по id и списки вхождений литералов"""

    def __init__(self, F: ClauseSet):
        self.clauses: Dict[int, Clause] = dict(enumerate(F.clauses))
        self.origin: Dict[int, int] = dict(enumerate(F.origin))
        self.lookup: Dict[Clause, int] = {c: i for i, c in self.clauses.items()}
        self.occ: Dict[Literal, Set[int]] = {}
        for cid, clause in self.clauses.items():
            for x in clause:
                self.occ.setdefault(x, set()).add(cid)
        self.next_id = len(F.clauses)

    def ldeg(self, x: Literal) -> int:
        ids = self.occ.get(x)
        return len(ids) if ids else 0

    def singular_literal(self, v: Variable) -> Optional[Literal]:
        if self.ldeg(v) == 1:
            return v
        if self.ldeg(-v) == 1:
            return -v
        return None

    def variables(self) -> List[Variable]:
        return sorted({abs(x) for x, ids in self.occ.items() if ids})

    def _remove(self, cid: int) -> None:
        clause = self.clauses.pop(cid)
        self.origin.pop(cid, None)
        del self.lookup[clause]
        for x in clause:
            self.occ[x].discard(cid)

    def _add(self, clause: Clause) -> int:
        cid = self.next_id
        self.next_id += 1
        self.clauses[cid] = clause
        self.origin[cid] = -1
        self.lookup[clause] = cid
        for x in clause:
            self.occ.setdefault(x, set()).add(cid)
        return cid

    def step(self, v: Variable) -> Tuple[Optional[CsdpStep], Optional[CsdpFailure], Set[Variable]]:
        l = self.singular_literal(v)
        if l is None:
            raise TwoMusError(ErrorType.NOT_SINGULAR, f"переменная x{v} не сингулярна")

        main_id = next(iter(self.occ[l]))
        main = self.clauses[main_id]
        side_ids = sorted(self.occ.get(-l, ()))
        sides = [self.clauses[i] for i in side_ids]

        if not sides:
            return None, CsdpFailure('i', v, [main]), set()

        rest = [a for a in main if a != l]
        for side in sides:
            if any(-a in side for a in rest):
                return None, CsdpFailure('ii', v, [main, side]), set()

        main_set = set(main)
        seen: Dict[frozenset, Clause] = {}
        for side in sides:
            diff = frozenset(side) - main_set
            if diff in seen:
                return None, CsdpFailure('iii', v, [main, seen[diff], side]), set()
            seen[diff] = side

        resolvents: List[Clause] = []
        for side in sides:
            lits = set(rest) | (set(side) - {-l})
            resolvent = tuple(sorted(lits, key=literal_key))
            existing = self.lookup.get(resolvent)
            if existing is not None:
                return None, CsdpFailure('iv', v, [main, side, self.clauses[existing]]), set()
            resolvents.append(resolvent)

        affected = {abs(x) for x in main} | {abs(x) for side in sides for x in side}
        affected.discard(v)

        self._remove(main_id)
        for i in side_ids:
            self._remove(i)
        for resolvent in resolvents:
            self._add(resolvent)

        return CsdpStep(variable=v, literal=l, main=main, sides=sides, resolvents=resolvents), None, affected

    def result(self) -> ClauseSet:
        ids = sorted(self.clauses)
        return ClauseSet((self.clauses[i] for i in ids),
                         origin=[self.origin[i] for i in ids],
                         normalized=True)


def _log_step(step: CsdpStep) -> None:
    sides = ", ".join(clause_str(c) for c in step.sides)
    res = ", ".join(clause_str(c) for c in step.resolvents)
    logger.debug(f"✓ csDP x{step.variable}: main {clause_str(step.main)}; sides {sides}; resolvents {res}")


def _log_failure(failure: CsdpFailure) -> None:
    clauses = ", ".join(clause_str(c) for c in failure.clauses)
    logger.info(f"✗ csDP fail ({failure.condition}) на x{failure.variable}: {clauses}")


def csdp_step(F: ClauseSet, v: Variable) -> CsdpOutcome:
    """Один шаг csDP для сингулярной переменной v"""
    reducer = _Reducer(F)
    step, failure, _ = reducer.step(v)
    if failure is not None:
        _log_failure(failure)
        return CsdpOutcome(failure=failure)
    _log_step(step)
    return CsdpOutcome(result=reducer.result(), trace=[step])


def csdp_full(F: ClauseSet, on_step: Optional[StepCallback] = None) -> CsdpOutcome:
    """
    Полная csDP-редукция до отказа или до отсутствия сингулярных переменных.

    Очередь: сингулярные переменные по возрастанию, новые - в голову (LIFO),
    устаревшие записи пропускаются при извлечении.
    """
    degree_bounded = F.max_literal_degree() <= 2
    if not degree_bounded:
        logger.info("⚠ Степени литералов > 2: линейная оценка времени не гарантируется")

    reducer = _Reducer(F)
    worklist = deque(v for v in reducer.variables() if reducer.singular_literal(v) is not None)
    trace: List[CsdpStep] = []

    while worklist:
        v = worklist.popleft()
        if reducer.singular_literal(v) is None:
            continue
        step, failure, affected = reducer.step(v)
        if failure is not None:
            _log_failure(failure)
            return CsdpOutcome(trace=trace, failure=failure, degree_bounded=degree_bounded)
        trace.append(step)
        if on_step is not None:
            on_step(step)
        if logger.is_enabled_for(logging.DEBUG):
            _log_step(step)
        for w in sorted(affected, reverse=True):
            if reducer.singular_literal(w) is not None:
                worklist.appendleft(w)

    result = reducer.result()
    logger.debug(f"✓ csDP завершена: {len(trace)} шагов, осталось {result.c} клауз")
    return CsdpOutcome(result=result, trace=trace, degree_bounded=degree_bounded)
