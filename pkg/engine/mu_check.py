"""
Распознавание 2-MU за линейное время и классификация семейств дефекта 1
"""
from collections import defaultdict
from typing import Dict, List, Optional, Set

from cnf.clause_set import ClauseSet
from cnf.literals import BOTTOM, clause_complement
from engine.csdp import csdp_full
from storage.models import CsdpOutcome
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.MuCheck')


def is_bk(F: ClauseSet) -> Optional[int]:
    """
    k, если F изоморфно B_k (k ≥ 2), иначе None.

    Критерий: все клаузы бинарные, c = 2k, n = k, каждая переменная степени 4;
    клаузы разбиваются на пары {C, -C}; пары образуют один цикл по всем
    переменным; число пар вида {{a,b},{-a,-b}} с одинаковыми знаками нечётно.
    """
    k = F.n
    if k < 2 or F.c != 2 * k:
        return None
    if any(len(c) != 2 for c in F.clauses):
        return None
    if any(F.vdeg(v) != 4 for v in F.variables):
        return None

    paired: Set = set()
    adjacency: Dict[int, List[int]] = defaultdict(list)
    same_sign = 0
    for clause in F.clauses:
        if clause in paired:
            continue
        partner = clause_complement(clause)
        if partner not in F:
            return None
        paired.add(clause)
        paired.add(partner)
        a, b = clause
        adjacency[abs(a)].append(abs(b))
        adjacency[abs(b)].append(abs(a))
        if (a > 0) == (b > 0):
            same_sign += 1

    if any(len(adjacency[v]) != 2 for v in F.variables):
        return None

    # связность мультиграфа пар
    start = F.variables[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != k:
        return None

    return k if same_sign % 2 == 1 else None


def is_2mu(F: ClauseSet, outcome: Optional[CsdpOutcome] = None) -> bool:
    """
    F ∈ MU для F ∈ Pcls2: проверка степеней, полная csDP, затем
    {⊥} при δ = 1 или B_δ при δ ≥ 2.

    outcome: готовый результат csdp_full(F), если он уже посчитан.
    """
    if F.max_literal_degree() > 2:
        logger.debug("⊘ Степень литерала > 2: не 2-MU")
        return False
    delta = F.deficiency
    if delta <= 0:
        return False

    if outcome is None:
        outcome = csdp_full(F)
    if outcome.failed:
        return False

    result = outcome.result
    if delta == 1 and result.c == 1 and result.has_bottom:
        return True
    return is_bk(result) == delta


def classify_family(F: ClauseSet) -> str:
    """Семейство Ia/Ib/IIa/IIb/III/IV для 2-MU дефекта 1"""
    if F.deficiency != 1 or not is_2mu(F):
        raise TwoMusError(ErrorType.PRECONDITION, "классификация требует 2-MU с δ = 1")
    if F.clauses == (BOTTOM,):
        raise TwoMusError(ErrorType.PRECONDITION, "{⊥} не относится ни к одному семейству")
    return _family_by_signature(F)


def _family_by_signature(F: ClauseSet) -> str:
    u = F.u
    var3 = set(F.variables_of_degree(3))
    n3 = len(var3)
    n4 = len(F.variables_of_degree(4))

    if u == 2:
        return 'Ia' if F.n == 1 else 'Ib'
    if u == 1:
        unit = F.units()[0][0]
        return 'IIa' if var3 == {abs(unit)} else 'IIb'
    if n3 == 0 and n4 == 1:
        return 'III'
    if n3 == 2 and n4 == 0:
        return 'IV'

    raise TwoMusError(ErrorType.PRECONDITION,
                      f"сигнатура (u={u}, n3={n3}, n4={n4}) не соответствует семейству")


def family_or_none(F: ClauseSet, outcome: Optional[CsdpOutcome] = None) -> Optional[str]:
    """Семейство, если F - 2-MU дефекта 1 (кроме {⊥}); иначе None"""
    if F.deficiency != 1 or F.clauses == (BOTTOM,) or not is_2mu(F, outcome):
        return None
    return _family_by_signature(F)
