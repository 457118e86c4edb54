"""
Чтение и запись DIMACS CNF (только 2-CNF)
"""
from typing import Iterable, List, Optional, Union

from cnf.clause_set import ClauseSet
from cnf.literals import make_clause
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.Dimacs')


def parse_dimacs(text: Union[str, bytes]) -> ClauseSet:
    """
    Разобрать DIMACS CNF.

    Повторы литералов внутри клаузы схлопываются; клауза длины > 2 после
    этого - ошибка ширины; x и -x в одной клаузе - ошибка тавтологии.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise TwoMusError(ErrorType.PARSE_ERROR, f"не UTF-8: {e}")

    header: Optional[tuple] = None
    clauses: List[tuple] = []
    current: List[int] = []

    for lineno, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.strip()
        if not line or line.startswith('c') or line.startswith('%'):
            continue

        if line.startswith('p'):
            if header is not None:
                raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: повторный заголовок")
            parts = line.split()
            if len(parts) != 4 or parts[1] != 'cnf':
                raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: некорректный заголовок {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: некорректный заголовок {line!r}")
            if header[0] < 0 or header[1] < 0:
                raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: отрицательные счётчики")
            continue

        if header is None:
            raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: клауза до заголовка 'p cnf'")

        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: некорректный токен {token!r}")
            if lit == 0:
                clauses.append(make_clause(current))
                current = []
            else:
                current.append(lit)

    if header is None:
        raise TwoMusError(ErrorType.PARSE_ERROR, "нет заголовка 'p cnf'")
    if current:
        raise TwoMusError(ErrorType.PARSE_ERROR, "последняя клауза не завершена нулём")

    F = ClauseSet(clauses, normalized=True)

    if header[1] != len(clauses):
        logger.warning(f"⚠ Заголовок обещает {header[1]} клауз, прочитано {len(clauses)}")
    if F.max_var > header[0]:
        logger.warning(f"⚠ Переменная x{F.max_var} больше объявленного n={header[0]}")
    if len(F) != len(clauses):
        logger.info(f"⊘ Удалено повторов клауз: {len(clauses) - len(F)}")

    return F


def emit_dimacs(F: ClauseSet, comments: Iterable[str] = ()) -> str:
    """Записать F в DIMACS в порядке хранения"""
    lines = [f"c {text}" for text in comments]
    lines.append(f"p cnf {F.max_var} {F.c}")
    for clause in F.clauses:
        lines.append(" ".join([str(x) for x in clause] + ["0"]))
    return "\n".join(lines) + "\n"
