"""
Литералы, клаузы и частичные присваивания

Литерал кодируется как в DIMACS: ненулевое целое, знак = полярность.
Клауза - кортеж литералов, отсортированный по (переменная, знак);
пустой кортеж - пустая клауза ⊥.
"""
from typing import Dict, Iterable, Tuple

from utils.error_handler import ErrorType, TwoMusError

Literal = int
Variable = int
Clause = Tuple[Literal, ...]
Assignment = Dict[Variable, int]

BOTTOM: Clause = ()


def var(x: Literal) -> Variable:
    return abs(x)


def complement(x: Literal) -> Literal:
    return -x


def literal_key(x: Literal) -> Tuple[int, bool]:
    """Ключ порядка x1 < -x1 < x2 < -x2 < ..."""
    return abs(x), x < 0


def make_clause(literals: Iterable[Literal]) -> Clause:
    """
    Построить клаузу: повторы схлопываются, длина > 2 и x, -x запрещены
    """
    lits = set()
    for x in literals:
        if not isinstance(x, int) or isinstance(x, bool) or x == 0:
            raise TwoMusError(ErrorType.PARSE_ERROR, f"некорректный литерал: {x!r}")
        lits.add(x)

    for x in lits:
        if -x in lits:
            raise TwoMusError(ErrorType.TAUTOLOGY_ERROR,
                              f"клауза содержит x{abs(x)} и -x{abs(x)}",
                              {'variable': abs(x)})

    if len(lits) > 2:
        raise TwoMusError(ErrorType.WIDTH_ERROR,
                          f"клауза длины {len(lits)} (допустимо ≤ 2)",
                          {'literals': sorted(lits, key=literal_key)})

    return tuple(sorted(lits, key=literal_key))


def clause_complement(clause: Clause) -> Clause:
    """Полиномиальное дополнение клаузы: {a,b} -> {-a,-b}"""
    return tuple(sorted((-x for x in clause), key=literal_key))


def value_of(phi: Assignment, x: Literal) -> int:
    """Значение литерала при присваивании"""
    v = phi[abs(x)]
    return v if x > 0 else 1 - v


def lit_str(x: Literal) -> str:
    """x1 / -x1"""
    return f"x{x}" if x > 0 else f"-x{-x}"


def clause_str(clause: Clause) -> str:
    if not clause:
        return "⊥"
    return "{" + ",".join(lit_str(x) for x in clause) + "}"
