"""
Общие экземпляры для тестов: объединение трёх простых MUS, орграф с
особым циклом, эталонная трасса перечисления
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cnf.clause_set import ClauseSet
from hardness.cdpp import StDigraph

# U²₂ = {{x1},{-x1,x2},{-x2}} - семейство Ib
U22 = ClauseSet([(1,), (-1, 2), (-2,)])

# U¹₂,₁ = {{x1},{-x1,x2},{-x1,-x2}} - семейство IIa
U121 = ClauseSet([(1,), (-1, 2), (-1, -2)])

# U¹₃,₂ = {{x1},{-x1,x2},{-x2,x3},{-x2,-x3}} - семейство IIb
U132 = ClauseSet([(1,), (-1, 2), (-2, 3), (-2, -3)])

# объединение трёх MUS выше
UNION = ClauseSet([(1,), (-1, 2), (-2,), (-1, -2), (-2, 3), (-2, -3)])

UNION_DIMACS = """c union of three simple MUSs
p cnf 3 6
1 0
-1 2 0
-2 0
-1 -2 0
-2 3 0
-2 -3 0
"""

# B_2: цикл из двух эквивалентностей с одной сменой знака
B2 = ClauseSet([(-1, 2), (1, -2), (-1, -2), (1, 2)])

# s -> a -> t -> b -> s (s=1, t=2, a=3, b=4), x0 = 5
CYCLE_GRAPH = StDigraph(vertices=(1, 2, 3, 4), arcs=((1, 3), (3, 2), (2, 4), (4, 1)), s=1, t=2)

CYCLE_GRAPH_TEXT = """# special cycle s -> a -> t -> b -> s
s 1
t 2
e 1 3
e 3 2
e 2 4
e 4 1
"""

# tFC: {x0 -> a, a -> -x0, -x0 -> b, b -> x0}
CYCLE_TFC = ClauseSet([(-5, 3), (-3, -5), (5, 4), (-4, 5)])

# tFC': {x0 -> a, a -> -x0, -x0 -> y0, y0 -> b, b -> -y0}
CYCLE_TFC_PRIME = ClauseSet([(-5, 3), (-3, -5), (5, 6), (-6, 4), (-4, -6)])

# (step, event, y, R, P, notes) для enum(UNION, {x1}) при порядке по умолчанию
GOLDEN_TRACE = [
    (1, "init call", "x1", "(x2,-x2)", "(x1)", ""),
    (2, "DFS(P,y)", "x2", "(-x1,-x2,x3,-x3)", "(x1,x2)", ""),
    (3, "DFS(P,y)", "-x1", "--", "(x1,x2,-x1)", ""),
    (4, "clash", "-x1", "--", "(x1,x2,-x1)", ""),
    (5, "output", "-x1", "--", "(x1,x2,-x1)", "Family IIa"),
    (6, "DFS(P,y)", "-x2", "--", "(x1,x2,-x2)", ""),
    (7, "clash", "-x2", "--", "(x1,x2,-x2)", ""),
    (8, "output", "-x2", "--", "(x1,x2,-x2)", "Family I"),
    (9, "DFS(P,y)", "x3", "(-x2)", "(x1,x2,x3)", ""),
    (10, "DFS(P,y)", "-x2", "--", "(x1,x2,x3,-x2)", ""),
    (11, "clash", "-x2", "--", "(x1,x2,x3,-x2)", ""),
    (12, "output", "-x2", "--", "(x1,x2,x3,-x2)", "Family IIb"),
    (13, "DFS(P,y)", "-x3", "(-x2)", "(x1,x2,-x3)", ""),
    (14, "DFS(P,y)", "-x2", "--", "(x1,x2,-x3,-x2)", ""),
    (15, "clash", "-x2", "--", "(x1,x2,-x3,-x2)", ""),
    (16, "output (silent)", "-x2", "--", "(x1,x2,-x3,-x2)", "sibling of step 12"),
    (17, "DFS(P,y)", "-x2", "(-x1)", "(x1,-x2)", ""),
    (18, "DFS(P,y)", "-x1", "--", "(x1,-x2,-x1)", ""),
    (19, "clash", "-x1", "--", "(x1,-x2,-x1)", ""),
    (20, "output (silent)", "-x1", "--", "(x1,-x2,-x1)", "sibling of step 5"),
]


def write_temp(tmp_path, name: str, text: str) -> str:
    path = tmp_path / name
    path.write_text(text, encoding='utf-8')
    return str(path)
