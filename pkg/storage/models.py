"""
Модели данных: отчёты о мерах, шаги csDP, записи MUS, строки трассы
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

ClauseTuple = Tuple[int, ...]


@dataclass
class MeasureReport:
    """Меры множества клауз"""
    n: int
    c: int
    u: int
    ell: int
    delta: int
    n_k: Dict[int, int] = field(default_factory=dict)
    n_prime_k: Dict[int, int] = field(default_factory=dict)
    singular: List[int] = field(default_factory=list)
    one_singular: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict:
        """Конвертировать в dict"""
        return {
            'n': self.n,
            'c': self.c,
            'u': self.u,
            'ell': self.ell,
            'delta': self.delta,
            'n_k': {str(k): v for k, v in self.n_k.items()},
            'n_prime_k': {str(k): v for k, v in self.n_prime_k.items()},
            'singular': list(self.singular),
            'one_singular': list(self.one_singular),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'MeasureReport':
        """Создать из dict"""
        if not isinstance(data, dict):
            raise ValueError(f"Expected dict, got {type(data)}")
        return cls(
            n=int(data.get('n', 0)),
            c=int(data.get('c', 0)),
            u=int(data.get('u', 0)),
            ell=int(data.get('ell', 0)),
            delta=int(data.get('delta', 0)),
            n_k={int(k): int(v) for k, v in data.get('n_k', {}).items()},
            n_prime_k={int(k): int(v) for k, v in data.get('n_prime_k', {}).items()},
            singular=[int(v) for v in data.get('singular', [])],
            one_singular=[int(v) for v in data.get('one_singular', [])],
        )


@dataclass
class CsdpStep:
    """Один шаг csDP-редукции"""
    variable: int
    literal: int
    main: ClauseTuple
    sides: List[ClauseTuple]
    resolvents: List[ClauseTuple]

    def to_dict(self) -> Dict:
        return {
            'variable': self.variable,
            'literal': self.literal,
            'main': list(self.main),
            'sides': [list(c) for c in self.sides],
            'resolvents': [list(c) for c in self.resolvents],
        }


@dataclass
class CsdpFailure:
    """Какое условие sDP-проверки сработало"""
    condition: str
    variable: int
    clauses: List[ClauseTuple] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            'condition': self.condition,
            'variable': self.variable,
            'clauses': [list(c) for c in self.clauses],
        }


@dataclass
class CsdpOutcome:
    """Результат csDP: Fail(failure) либо Reduced(result, trace)"""
    result: Optional[object] = None
    trace: List[CsdpStep] = field(default_factory=list)
    failure: Optional[CsdpFailure] = None
    degree_bounded: bool = True

    @property
    def failed(self) -> bool:
        return self.failure is not None

    @property
    def reduced(self) -> bool:
        return self.failure is None


@dataclass
class MusRecord:
    """MUS как индексы клауз исходной формулы + семейство + путь-свидетель"""
    indices: Tuple[int, ...]
    clauses: Tuple[ClauseTuple, ...]
    family: Optional[str] = None
    witness: Optional[Tuple[int, ...]] = None

    def key(self) -> frozenset:
        """Ключ для сравнения как множества клауз"""
        return frozenset(self.clauses)

    def to_dict(self) -> Dict:
        """Конвертировать в dict (одна строка JSON-lines)"""
        return {
            'clauses': [list(c) for c in self.clauses],
            'indices': list(self.indices),
            'family': self.family,
            'witness': list(self.witness) if self.witness is not None else None,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'MusRecord':
        """Создать из dict"""
        if not isinstance(data, dict):
            raise ValueError(f"Expected dict, got {type(data)}")
        witness = data.get('witness')
        return cls(
            indices=tuple(int(i) for i in data.get('indices', [])),
            clauses=tuple(tuple(int(x) for x in c) for c in data.get('clauses', [])),
            family=data.get('family'),
            witness=tuple(int(x) for x in witness) if witness is not None else None,
        )


@dataclass
class TraceRow:
    """Строка трассы перечисления"""
    step: int
    event: str
    y: str
    R: str
    P: str
    notes: str = ""

    def to_dict(self) -> Dict:
        return {
            'step': self.step,
            'event': self.event,
            'y': self.y,
            'R': self.R,
            'P': self.P,
            'notes': self.notes,
        }

    def as_tuple(self) -> Tuple[int, str, str, str, str, str]:
        return self.step, self.event, self.y, self.R, self.P, self.notes


@dataclass
class EnumStats:
    """Статистика курсора перечисления"""
    nodes: int = 0
    paths: int = 0
    mus: int = 0
    silent: int = 0
    work: int = 0
    max_delay: int = 0

    def to_dict(self) -> Dict:
        return {
            'nodes': self.nodes,
            'paths': self.paths,
            'mus': self.mus,
            'silent': self.silent,
            'work': self.work,
            'max_delay': self.max_delay,
        }


@dataclass
class TheoremReport:
    """Проверка частей теоремы о tFC на одном st-графе (None - часть неприменима)"""
    part1: Optional[bool] = None
    part2: bool = True
    part3: bool = True
    part4: bool = True
    part5: bool = True
    prime_family_iv: Optional[bool] = None
    has_walk: bool = False
    has_cycle: bool = False
    mus_count: int = 0

    @property
    def all_hold(self) -> bool:
        checks = [self.part2, self.part3, self.part4, self.part5]
        if self.part1 is not None:
            checks.append(self.part1)
        if self.prime_family_iv is not None:
            checks.append(self.prime_family_iv)
        return all(checks)

    def to_dict(self) -> Dict:
        return {
            'part1': self.part1,
            'part2': self.part2,
            'part3': self.part3,
            'part4': self.part4,
            'part5': self.part5,
            'prime_family_iv': self.prime_family_iv,
            'has_walk': self.has_walk,
            'has_cycle': self.has_cycle,
            'mus_count': self.mus_count,
        }
