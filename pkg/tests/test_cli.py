"""
Тесты командной строки: вывод и коды выхода
"""
import sys
import os
import json
from io import StringIO

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app import build_parser, main
from cnf.clause_set import ClauseSet
from cnf.dimacs import emit_dimacs, parse_dimacs
from storage.exporter import MusExporter
from utils.logger import get_logger
from tests.fixtures import (
    CYCLE_GRAPH_TEXT,
    CYCLE_TFC,
    CYCLE_TFC_PRIME,
    GOLDEN_TRACE,
    U121,
    U132,
    U22,
    UNION,
    UNION_DIMACS,
    write_temp,
)


def run(argv):
    out = StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def union_file(tmp_path):
    return write_temp(tmp_path, "union.cnf", UNION_DIMACS)


def test_check_verdicts(tmp_path):
    code, text = run(['check', write_temp(tmp_path, "u22.cnf", emit_dimacs(U22))])
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "MU yes, δ=1, family=Ib"
    assert lines[1] == "2-CNF yes, UNSAT"
    assert lines[2] == "n=2 c=3 u=2 ell=4 delta=1"

    code, text = run(['check', write_temp(tmp_path, "union.cnf", UNION_DIMACS)])
    assert text.splitlines()[0] == "MU no, UNSAT"

    code, text = run(['check', write_temp(tmp_path, "sat.cnf", "p cnf 2 1\n1 2 0\n")])
    assert text.splitlines()[0] == "MU no, SAT"
    assert code == 0


def test_check_json_and_oracle(tmp_path):
    path = write_temp(tmp_path, "u132.cnf", emit_dimacs(U132))
    code, text = run(['check', path, '--json', '--oracle'])
    payload = json.loads(text)
    assert payload['is_mu'] is True
    assert payload['family'] == 'IIb'
    assert payload['oracle_mu'] is True
    assert payload['measures']['c'] == 4


def test_check_trace(tmp_path):
    code, text = run(['check', write_temp(tmp_path, "u22.cnf", emit_dimacs(U22)), '--trace'])
    steps = [line for line in text.splitlines() if line.startswith("c csdp")]
    assert len(steps) == 2
    assert steps[0].startswith("c csdp x1: main {x1}")
    assert get_logger('TwoMus.Trace').log_callback is None


def test_check_parse_error(tmp_path):
    code, _ = run(['check', write_temp(tmp_path, "bad.cnf", "p cnf 3 1\n1 2 3 0\n")])
    assert code == 2
    code, _ = run(['check', str(tmp_path / "missing.cnf")])
    assert code == 2


def test_find_modes(union_file):
    code, text = run(['find', union_file, '--unit', '1'])
    assert code == 0
    assert text.startswith("c family=IIa witness=x1,x2,-x1\np cnf 2 3\n")

    code, text = run(['find', union_file, '--units', '1', '-2'])
    assert text.splitlines()[0] == "c family=Ib witness=x1,x2,-x2"

    code, text = run(['find', union_file, '--exactly-two'])
    assert "c family=Ib" in text

    code, text = run(['find', union_file, '--deletion'])
    assert text.splitlines()[0] == "c family=IIb witness=-"
    assert parse_dimacs(text) == U132

    code, text = run(['find', union_file, '--unit', '1', '--family-iia', '--oracle'])
    assert "c oracle=ok" in text.splitlines()


def test_find_none(tmp_path):
    path = write_temp(tmp_path, "tfc.cnf", emit_dimacs(CYCLE_TFC))
    code, text = run(['find', path, '--any-unit'])
    assert code == 1
    assert text.strip() == "none"


def test_find_errors(tmp_path, union_file):
    assert run(['find', union_file, '--unit', '1', '--shortest'])[0] == 2
    assert run(['find', union_file, '--units', '1', '1'])[0] == 2
    assert run(['find', union_file, '--exactly-one', '--family-iia'])[0] == 2
    sat = write_temp(tmp_path, "sat.cnf", "p cnf 2 1\n1 2 0\n")
    assert run(['find', sat, '--deletion'])[0] == 1


def test_enum_blocks(union_file):
    code, text = run(['enum', union_file, '--unit', '1'])
    assert code == 0
    families = [line for line in text.splitlines() if line.startswith("c family=")]
    assert [f.split()[1] for f in families] == ['family=IIa', 'family=Ib', 'family=IIb']

    code, text = run(['enum', union_file, '--unit', '1', '--limit', '1'])
    assert sum(1 for line in text.splitlines() if line.startswith("c family=")) == 1


def test_enum_trace_table(union_file):
    code, text = run(['enum', union_file, '--unit', '1', '--trace'])
    lines = text.splitlines()
    assert lines[0] == "step\tevent\ty\tR\tP\tnotes"
    assert lines[1:] == ["\t".join(str(v) for v in row) for row in GOLDEN_TRACE]


def test_enum_json_round_trip(union_file):
    code, text = run(['enum', union_file, '--all-units', '--json', '--oracle'])
    lines = text.splitlines()
    assert lines[-1] == "c oracle=ok"
    records = list(MusExporter.read_json_lines(StringIO("\n".join(lines[:-1]))))
    assert [ClauseSet(r.clauses) for r in records] == [U121, U22, U132]
    assert records[2].witness == (1, 2, 3, -2)


def test_enum_stats_and_errors(union_file):
    code, text = run(['enum', union_file, '--unit', '1', '--stats', '--check-invariants'])
    stats = [line for line in text.splitlines() if line.startswith("c stats")]
    assert stats and "mus=3" in stats[0] and "silent=2" in stats[0]

    assert run(['enum', union_file, '--unit', '2'])[0] == 2
    assert run(['enum', union_file, '--unit', '1', '--limit', '0'])[0] == 2
    assert run(['enum', union_file, '--unit', '1', '--order', '1,x'])[0] == 2


def test_enum_nothing(tmp_path):
    path = write_temp(tmp_path, "sat.cnf", "p cnf 2 2\n1 0\n-1 2 0\n")
    assert run(['enum', path, '--all-units'])[0] == 1


def test_cdpp_translations(tmp_path):
    path = write_temp(tmp_path, "cycle.st", CYCLE_GRAPH_TEXT)
    code, text = run(['cdpp', path])
    assert code == 0
    assert text.splitlines()[0] == "c tFC x0=5"
    assert parse_dimacs(text) == CYCLE_TFC

    code, text = run(['cdpp', path, '--prime'])
    assert parse_dimacs(text) == CYCLE_TFC_PRIME


def test_cdpp_checks(tmp_path):
    path = write_temp(tmp_path, "cycle.st", CYCLE_GRAPH_TEXT)
    assert run(['cdpp', path, '--check-cycle']) == (0, "yes\n")
    assert run(['cdpp', path, '--check-walk']) == (0, "yes\n")

    hub = write_temp(tmp_path, "hub.st", "s 1\nt 2\ne 1 3\ne 3 2\ne 2 3\ne 3 1\n")
    assert run(['cdpp', hub, '--check-cycle']) == (1, "no\n")

    code, text = run(['cdpp', path, '--verify'])
    assert code == 0
    assert json.loads(text)['has_cycle'] is True

    assert run(['cdpp', write_temp(tmp_path, "bad.st", "s 1\n")])[0] == 2


def test_cdpp_size_bound(tmp_path, monkeypatch):
    path = write_temp(tmp_path, "cycle.st", CYCLE_GRAPH_TEXT)
    monkeypatch.setenv('TWOMUS_BOUND', '3')
    assert run(['cdpp', path, '--check-cycle'])[0] == 3


def test_config_file_bound(tmp_path, monkeypatch):
    monkeypatch.delenv('TWOMUS_BOUND', raising=False)
    path = write_temp(tmp_path, "cycle.st", CYCLE_GRAPH_TEXT)
    config = write_temp(tmp_path, "twomus.json", json.dumps({'hardness': {'max_vertices': 2}}))
    assert run(['cdpp', path, '--check-cycle', '--config', config])[0] == 3


def test_bench_small_sizes():
    code, text = run(['bench', '--sizes', '40', '400'])
    payload = json.loads(text)
    assert [p['clauses'] for p in payload['points']] == [40, 400]
    assert payload['all_mu'] is True


def test_parser_requires_mode():
    parser = build_parser()
    with pytest.raises(SystemExit):
        parser.parse_args(['find', 'x.cnf'])
    with pytest.raises(SystemExit):
        parser.parse_args(['enum', 'x.cnf', '--unit', '1', '--all-units'])


def test_cdpp_non_utf8_file(tmp_path):
    path = tmp_path / "binary.st"
    path.write_bytes(b"\xff\xfe 1 2\n")
    assert run(['cdpp', str(path)])[0] == 2
    assert run(['cdpp', str(path), '--check-walk'])[0] == 2


def test_check_trace_runs_csdp_once(tmp_path, monkeypatch):
    import app
    import engine.mu_check
    from engine.csdp import csdp_full

    calls = []

    def counted(F, on_step=None):
        calls.append(F)
        return csdp_full(F, on_step=on_step)

    monkeypatch.setattr(app, 'csdp_full', counted)
    monkeypatch.setattr(engine.mu_check, 'csdp_full', counted)
    code, text = run(['check', write_temp(tmp_path, "u132.cnf", emit_dimacs(U132)), '--trace'])
    assert code == 0
    assert "MU yes, δ=1, family=IIb" in text.splitlines()
    assert len(calls) == 1

    calls.clear()
    run(['check', write_temp(tmp_path, "u22.cnf", emit_dimacs(U22))])
    assert len(calls) == 1
