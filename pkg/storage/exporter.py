"""
Экспорт результатов: DIMACS-блоки MUS с аннотацией, JSON-lines, таблица трассы
"""
import json
from typing import IO, Iterable, Iterator, List

from cnf.clause_set import ClauseSet
from cnf.dimacs import emit_dimacs
from cnf.literals import lit_str
from engine.enumerator import print_mus
from storage.models import MeasureReport, MusRecord, TraceRow
from utils.constants import NO_FAMILY, TRACE_COLUMNS
from utils.error_handler import ErrorType, TwoMusError
from utils.logger import get_logger

logger = get_logger('TwoMus.Exporter')


class MusExporter:
    """Форматы вывода для CLI"""

    @staticmethod
    def annotation(record: MusRecord) -> str:
        """c family=<tag> witness=<литералы>"""
        family = record.family or NO_FAMILY
        witness = ",".join(lit_str(x) for x in record.witness) if record.witness else NO_FAMILY
        return f"c family={family} witness={witness}"

    def dimacs_block(self, record: MusRecord) -> str:
        """Аннотация и DIMACS; без свидетеля - подмножество клауз в порядке записи"""
        header = self.annotation(record)
        if record.witness is not None:
            return header + "\n" + print_mus(record)
        body = emit_dimacs(ClauseSet(record.clauses, normalized=True))
        return header + "\n" + body

    @staticmethod
    def json_line(record: MusRecord) -> str:
        return json.dumps(record.to_dict(), ensure_ascii=False)

    @staticmethod
    def read_json_lines(stream: IO[str]) -> Iterator[MusRecord]:
        for lineno, line in enumerate(stream, 1):
            line = line.strip()
            if not line:
                continue
            try:
                yield MusRecord.from_dict(json.loads(line))
            except (json.JSONDecodeError, ValueError) as e:
                raise TwoMusError(ErrorType.PARSE_ERROR, f"строка {lineno}: {e}", {'line': line})

    @staticmethod
    def render_trace(rows: Iterable[TraceRow]) -> str:
        """Таблица трассы, колонки разделены табуляцией"""
        lines: List[str] = ["\t".join(TRACE_COLUMNS)]
        for row in rows:
            lines.append(MusExporter.render_row(row))
        return "\n".join(lines) + "\n"

    @staticmethod
    def render_row(row: TraceRow) -> str:
        return "\t".join(str(v) for v in row.as_tuple())

    @staticmethod
    def render_measures(report: MeasureReport) -> str:
        degrees = " ".join(f"n{k}={v}" for k, v in sorted(report.n_k.items()))
        literal_degrees = " ".join(f"n'{k}={v}" for k, v in sorted(report.n_prime_k.items()))
        singular = ",".join(f"x{v}" for v in report.singular) or NO_FAMILY
        one_singular = ",".join(f"x{v}" for v in report.one_singular) or NO_FAMILY
        return "\n".join([
            f"n={report.n} c={report.c} u={report.u} ell={report.ell} delta={report.delta}",
            f"{degrees} {literal_degrees}",
            f"singular={singular} one_singular={one_singular}",
        ]) + "\n"
