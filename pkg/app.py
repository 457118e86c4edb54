"""
Главное приложение - команды check / find / enum / cdpp / bench
"""
import argparse
import json
import logging
import sys
from typing import IO, Iterable, List, Optional

from cnf.clause_set import ClauseSet, measures
from cnf.dimacs import emit_dimacs, parse_dimacs
from cnf.literals import clause_str
from engine.csdp import csdp_full
from engine.enumerator import enum_all_units, enum_unit
from engine.mu_check import family_or_none, is_2mu
from engine.mus_finder import (
    find_mus_deletion,
    mus_family_iia,
    mus_one_unit,
    mus_two_units,
    mus_unit_sweep,
    shortest_family_i_mus,
)
from engine.twosat import solve_2sat
from graph.implication import LitOrder
from hardness.cdpp import (
    has_special_closed_walk,
    has_special_cycle,
    parse_st_digraph,
    translate_cdpp,
    translate_cdpp_prime,
)
from hardness.lab import verify_theorem_parts
from oracle.brute import brute_is_mu, brute_mus_enum
from storage.config_manager import ConfigManager
from storage.exporter import MusExporter
from storage.models import CsdpStep, MusRecord, TraceRow
from utils.constants import TRACE_COLUMNS
from utils.error_handler import ErrorHandler, ErrorType, ExitCode, TwoMusError
from utils.logger import configure_logging, get_logger
from utils.verification import ScalingVerification

logger = get_logger('TwoMus.App')
trace_log = get_logger('TwoMus.Trace')


def _parse_order(raw: Optional[str]) -> Optional[LitOrder]:
    """--order "1,-1,2,-2" -> LitOrder"""
    if not raw:
        return None
    try:
        sequence = [int(tok) for tok in raw.replace(',', ' ').split()]
    except ValueError:
        raise TwoMusError(ErrorType.FLAG_ERROR, f"--order ожидает список литералов: {raw!r}")
    return LitOrder(sequence)


class TwoMusApp:
    """Приложение: конфиг, логирование, вывод и команды"""

    def __init__(self, config_path: Optional[str] = None, verbosity: int = 0, out: Optional[IO[str]] = None):
        self.config_manager = ConfigManager(config_path)
        self.out = out if out is not None else sys.stdout
        self.exporter = MusExporter()

        level = self.config_manager.get('logging.level', 'WARNING')
        if verbosity >= 2:
            level = logging.DEBUG
        elif verbosity == 1:
            level = logging.INFO
        configure_logging(level)
        logger.debug("✓ TwoMusApp инициализирован")

    # -- ввод-вывод ------------------------------------------------------

    def _write(self, text: str) -> None:
        if not text.endswith("\n"):
            text += "\n"
        self.out.write(text)
        self.out.flush()

    @staticmethod
    def _read(path: str) -> bytes:
        if path == '-':
            return sys.stdin.buffer.read()
        try:
            with open(path, 'rb') as f:
                return f.read()
        except OSError as e:
            raise TwoMusError(ErrorType.PARSE_ERROR, f"не удалось прочитать {path}: {e}")

    def _load_cnf(self, path: str) -> ClauseSet:
        F = parse_dimacs(self._read(path))
        logger.info(f"✓ Загружено {path}: {F.n} переменных, {F.c} клауз")
        return F

    def _emit_record(self, record: MusRecord, as_json: bool) -> None:
        if as_json:
            self._write(self.exporter.json_line(record))
        else:
            self._write(self.exporter.dimacs_block(record))

    def _oracle_records(self, F: ClauseSet) -> List[MusRecord]:
        return brute_mus_enum(F, int(self.config_manager.get('oracle.max_clauses')))

    def _attach_trace(self) -> None:
        """Трасса идёт в вывод через callback логгера TwoMus.Trace"""
        trace_log.set_callback(lambda entry: self._write(entry['message']))

    # -- команды ---------------------------------------------------------

    def cmd_check(self, args: argparse.Namespace) -> int:
        F = self._load_cnf(args.file)
        report = measures(F)
        sat = solve_2sat(F).satisfiable

        print_step = None
        if args.trace:
            self._attach_trace()

            def print_step(step: CsdpStep) -> None:
                sides = ", ".join(clause_str(c) for c in step.sides)
                resolvents = ", ".join(clause_str(c) for c in step.resolvents)
                trace_log.info(f"c csdp x{step.variable}: main {clause_str(step.main)}; "
                               f"sides {sides}; resolvents {resolvents}")

        outcome = csdp_full(F, on_step=print_step)
        if args.trace and outcome.failed:
            trace_log.info(f"c csdp fail ({outcome.failure.condition}) on x{outcome.failure.variable}")

        mu = is_2mu(F, outcome)
        family = family_or_none(F, outcome) if mu else None

        if mu:
            verdict = f"MU yes, δ={report.delta}" + (f", family={family}" if family else "")
        else:
            verdict = "MU no, " + ("SAT" if sat else "UNSAT")

        oracle_mu = None
        if args.oracle:
            bound = int(self.config_manager.get('oracle.max_clauses'))
            if F.c > bound:
                raise TwoMusError(ErrorType.SIZE_BOUND, f"c(F) = {F.c} превышает границу {bound}",
                                  {'clauses': F.c, 'bound': bound})
            oracle_mu = brute_is_mu(F)
            if oracle_mu != mu:
                logger.error(f"✗ Расхождение с перебором: is_2mu={mu}, brute={oracle_mu}")

        if args.json:
            payload = {
                'is_2cnf': True,
                'sat': sat,
                'is_mu': mu,
                'deficiency': report.delta,
                'family': family,
                'measures': report.to_dict(),
            }
            if oracle_mu is not None:
                payload['oracle_mu'] = oracle_mu
            self._write(json.dumps(payload, ensure_ascii=False))
        else:
            self._write(verdict)
            self._write(f"2-CNF yes, {'SAT' if sat else 'UNSAT'}")
            self._write(self.exporter.render_measures(report))
            if oracle_mu is not None:
                self._write(f"oracle MU {'yes' if oracle_mu else 'no'}")
        return ExitCode.FOUND.value

    def cmd_find(self, args: argparse.Namespace) -> int:
        F = self._load_cnf(args.file)
        order = _parse_order(args.order)

        if args.family_iia and args.unit is None:
            raise TwoMusError(ErrorType.FLAG_ERROR, "--family-iia требует --unit")
        if args.shortest and not (args.units or args.any_unit):
            raise TwoMusError(ErrorType.FLAG_ERROR, "--shortest применим только с --units или --any-unit")

        if args.deletion:
            record = find_mus_deletion(F)
        elif args.units:
            record = mus_two_units(F, args.units[0], args.units[1], shortest=args.shortest, order=order)
        elif args.unit is not None:
            if args.family_iia:
                record = mus_family_iia(F, args.unit, order)
            else:
                record = mus_one_unit(F, args.unit, order)
        elif args.any_unit and args.shortest:
            record = shortest_family_i_mus(F, order)
        elif args.any_unit:
            record = mus_unit_sweep(F, 'at-least-one', order)
        elif args.exactly_one:
            record = mus_unit_sweep(F, 'exactly-one', order)
        else:
            record = mus_unit_sweep(F, 'exactly-two', order)

        if record is None:
            self._write("none")
            return ExitCode.NOT_FOUND.value

        self._emit_record(record, args.json)
        if args.oracle:
            members = {r.key() for r in self._oracle_records(F)}
            status = "ok" if record.key() in members else "mismatch"
            if status != "ok":
                logger.error("✗ Найденный MUS отсутствует в переборе")
            self._write(f"c oracle={status}")
        return ExitCode.FOUND.value

    def cmd_enum(self, args: argparse.Namespace) -> int:
        F = self._load_cnf(args.file)
        order = _parse_order(args.order)
        if args.unit is None and not args.all_units:
            raise TwoMusError(ErrorType.FLAG_ERROR, "нужен --unit L или --all-units")
        if args.limit is not None and args.limit < 1:
            raise TwoMusError(ErrorType.FLAG_ERROR, "--limit должен быть ≥ 1")

        check = args.check_invariants or bool(self.config_manager.get('enum.check_invariants', False))
        on_row = None
        if args.trace:
            self._write("\t".join(TRACE_COLUMNS))
            self._attach_trace()

            def on_row(row: TraceRow) -> None:
                trace_log.info(self.exporter.render_row(row))

        cursor = None
        if args.unit is not None:
            cursor = enum_unit(F, args.unit, order, check_invariants=check, on_row=on_row)
            stream: Iterable[MusRecord] = cursor.records()
        else:
            stream = enum_all_units(F, order, check_invariants=check, on_row=on_row)

        emitted: List[MusRecord] = []
        for record in stream:
            emitted.append(record)
            if not args.trace:
                self._emit_record(record, args.json)
            if args.limit is not None and len(emitted) >= args.limit:
                break

        if args.stats and cursor is not None:
            stats = cursor.stats.to_dict()
            self._write("c stats " + " ".join(f"{k}={v}" for k, v in stats.items()))

        if args.oracle and args.limit is None:
            expected = {r.key() for r in self._oracle_records(F)
                        if any(len(c) == 1 and (args.unit is None or c == (args.unit,)) for c in r.clauses)}
            got = {r.key() for r in emitted}
            status = "ok" if got == expected else "mismatch"
            if status != "ok":
                logger.error(f"✗ Перечисление: {len(got)} MUS, перебор: {len(expected)}")
            self._write(f"c oracle={status}")

        logger.info(f"✓ Выдано MUS: {len(emitted)}")
        return ExitCode.FOUND.value if emitted else ExitCode.NOT_FOUND.value

    def cmd_cdpp(self, args: argparse.Namespace) -> int:
        G = parse_st_digraph(self._read(args.file))
        max_vertices = int(self.config_manager.get('hardness.max_vertices'))

        if args.check_walk:
            verdict = has_special_closed_walk(G)
        elif args.check_cycle:
            verdict = has_special_cycle(G, max_vertices)
        elif args.verify:
            report = verify_theorem_parts(G, int(self.config_manager.get('oracle.max_clauses')), max_vertices)
            self._write(json.dumps(report.to_dict(), ensure_ascii=False))
            return ExitCode.FOUND.value if report.all_hold else ExitCode.NOT_FOUND.value
        else:
            if args.prime:
                F = translate_cdpp_prime(G)
                comment = f"tFC' x0={G.x0} y0={G.y0}"
            else:
                F = translate_cdpp(G)
                comment = f"tFC x0={G.x0}"
            self._write(emit_dimacs(F, comments=[comment]))
            return ExitCode.FOUND.value

        self._write("yes" if verdict else "no")
        return ExitCode.FOUND.value if verdict else ExitCode.NOT_FOUND.value

    def cmd_bench(self, args: argparse.Namespace) -> int:
        sizes = args.sizes or self.config_manager.get('scaling.sizes')
        report = ScalingVerification(sizes).run()
        self._write(json.dumps(report.to_dict(), ensure_ascii=False))
        return ExitCode.FOUND.value if report.linear and report.all_mu else ExitCode.NOT_FOUND.value

    def run(self, args: argparse.Namespace) -> int:
        handlers = {
            'check': self.cmd_check,
            'find': self.cmd_find,
            'enum': self.cmd_enum,
            'cdpp': self.cmd_cdpp,
            'bench': self.cmd_bench,
        }
        try:
            return handlers[args.command](args)
        finally:
            trace_log.set_callback(None)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=None, help="путь к JSON-конфигу (по умолчанию twomus.json)")
    common.add_argument('-v', '--verbose', action='count', default=0, help="-v INFO, -vv DEBUG")

    parser = argparse.ArgumentParser(prog='twomus', description="2-CNF: MU, поиск и перечисление MUS")
    sub = parser.add_subparsers(dest='command', required=True)

    check = sub.add_parser('check', parents=[common], help="меры, SAT, MU, семейство")
    check.add_argument('file')
    check.add_argument('--trace', action='store_true', help="печать шагов csDP")
    check.add_argument('--oracle', action='store_true', help="сверка с перебором")
    check.add_argument('--json', action='store_true')

    find = sub.add_parser('find', parents=[common], help="найти один MUS")
    find.add_argument('file')
    mode = find.add_mutually_exclusive_group(required=True)
    mode.add_argument('--unit', type=int, metavar='L')
    mode.add_argument('--units', type=int, nargs=2, metavar=('L1', 'L2'))
    mode.add_argument('--any-unit', action='store_true')
    mode.add_argument('--exactly-one', action='store_true')
    mode.add_argument('--exactly-two', action='store_true')
    mode.add_argument('--deletion', action='store_true')
    find.add_argument('--shortest', action='store_true')
    find.add_argument('--family-iia', action='store_true')
    find.add_argument('--order', default=None, help="порядок литералов, напр. \"1,-1,2,-2\"")
    find.add_argument('--oracle', action='store_true')
    find.add_argument('--json', action='store_true')

    enum = sub.add_parser('enum', parents=[common], help="перечислить MUS с unit-клаузами")
    enum.add_argument('file')
    target = enum.add_mutually_exclusive_group(required=True)
    target.add_argument('--unit', type=int, metavar='L')
    target.add_argument('--all-units', action='store_true')
    enum.add_argument('--limit', type=int, default=None, metavar='N')
    enum.add_argument('--trace', action='store_true', help="таблица трассы вместо DIMACS-блоков")
    enum.add_argument('--json', action='store_true')
    enum.add_argument('--order', default=None)
    enum.add_argument('--stats', action='store_true')
    enum.add_argument('--check-invariants', action='store_true')
    enum.add_argument('--oracle', action='store_true')

    cdpp = sub.add_parser('cdpp', parents=[common], help="st-граф: tFC / tFC' и проверки")
    cdpp.add_argument('file')
    what = cdpp.add_mutually_exclusive_group()
    what.add_argument('--prime', action='store_true')
    what.add_argument('--check-walk', action='store_true')
    what.add_argument('--check-cycle', action='store_true')
    what.add_argument('--verify', action='store_true')

    bench = sub.add_parser('bench', parents=[common], help="проверка линейного роста времени")
    bench.add_argument('--sizes', type=int, nargs='+', default=None)

    return parser


def main(argv: Optional[List[str]] = None, out: Optional[IO[str]] = None) -> int:
    """Точка входа CLI; возвращает код выхода"""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        app = TwoMusApp(args.config, args.verbose, out)
        return app.run(args)
    except TwoMusError as e:
        print(f"✗ {ErrorHandler.format_error_message(e)}", file=sys.stderr)
        return ErrorHandler.exit_code(e)
