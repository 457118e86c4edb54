"""
2-SAT за линейное время: компоненты сильной связности (Тарьян, без рекурсии)
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Union

from cnf.clause_set import ClauseSet
from cnf.literals import Assignment, Clause, Literal


@dataclass
class TwoSatResult:
    """SAT(assignment) | UNSAT(witness)"""
    satisfiable: bool
    assignment: Optional[Assignment] = None
    witness: Optional[Literal] = None

    def __bool__(self) -> bool:
        return self.satisfiable


def _components(num_nodes: int, adj: List[List[int]]) -> List[int]:
    """
    Номера КСС в порядке завершения по Тарьяну
    (первой завершается сток конденсации)
    """
    index = [-1] * num_nodes
    low = [0] * num_nodes
    comp = [-1] * num_nodes
    on_stack = [False] * num_nodes
    stack: List[int] = []
    counter = 0
    comp_count = 0

    for root in range(num_nodes):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True

        while work:
            v, pos = work[-1]
            succ = adj[v]
            if pos < len(succ):
                work[-1] = (v, pos + 1)
                w = succ[pos]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = comp_count
                    if w == v:
                        break
                comp_count += 1
    return comp


def solve_clauses(clauses: Iterable[Clause]) -> TwoSatResult:
    """2-SAT на произвольной последовательности клауз длины ≤ 2"""
    clause_list = list(clauses)
    if any(len(c) == 0 for c in clause_list):
        return TwoSatResult(satisfiable=False)

    variables = sorted({abs(x) for c in clause_list for x in c})
    slot: Dict[int, int] = {v: i for i, v in enumerate(variables)}

    def node(x: Literal) -> int:
        return 2 * slot[abs(x)] + (1 if x < 0 else 0)

    num_nodes = 2 * len(variables)
    adj: List[List[int]] = [[] for _ in range(num_nodes)]
    for c in clause_list:
        if len(c) == 1:
            a = c[0]
            adj[node(-a)].append(node(a))
        else:
            a, b = c
            adj[node(-a)].append(node(b))
            adj[node(-b)].append(node(a))

    comp = _components(num_nodes, adj)

    for v in variables:
        i = 2 * slot[v]
        if comp[i] == comp[i + 1]:
            return TwoSatResult(satisfiable=False, witness=v)

    assignment = {v: (1 if comp[2 * slot[v]] < comp[2 * slot[v] + 1] else 0) for v in variables}
    return TwoSatResult(satisfiable=True, assignment=assignment)


def solve_2sat(F: Union[ClauseSet, Sequence[Clause]]) -> TwoSatResult:
    """
    SAT с полным присваиванием на var(F) или UNSAT со свидетелем x:
    x и -x в одной КСС (x - положительный литерал наименьшей такой переменной).
    При ⊥ ∈ F свидетель отсутствует.
    """
    clauses = F.clauses if isinstance(F, ClauseSet) else F
    return solve_clauses(clauses)


def is_satisfiable(clauses: Iterable[Clause]) -> bool:
    return solve_clauses(clauses).satisfiable
