"""
Проверка масштабирования: время csDP и распознавания 2-MU на цепочках IIb
"""
import os
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import psutil

from engine.csdp import csdp_full
from engine.mu_check import is_2mu
from oracle.generators import iib_chain
from utils.constants import DEFAULT_SCALING_SIZES, LINEARITY_RATIO_LIMIT
from utils.logger import get_logger

logger = get_logger('TwoMus.Verification')


@dataclass
class ScalingPoint:
    clauses: int
    csdp_seconds: float
    mu_seconds: float
    rss_mb: float
    is_mu: bool

    def to_dict(self) -> Dict:
        return {
            'clauses': self.clauses,
            'csdp_seconds': round(self.csdp_seconds, 4),
            'mu_seconds': round(self.mu_seconds, 4),
            'rss_mb': round(self.rss_mb, 1),
            'is_mu': self.is_mu,
        }


@dataclass
class ScalingReport:
    points: List[ScalingPoint] = field(default_factory=list)
    ratios: List[Dict[str, float]] = field(default_factory=list)
    limit: float = LINEARITY_RATIO_LIMIT

    @property
    def linear(self) -> bool:
        return all(r['csdp'] <= self.limit and r['mu'] <= self.limit for r in self.ratios)

    @property
    def all_mu(self) -> bool:
        return all(p.is_mu for p in self.points)

    def to_dict(self) -> Dict:
        return {
            'points': [p.to_dict() for p in self.points],
            'ratios': self.ratios,
            'limit': self.limit,
            'linear': self.linear,
            'all_mu': self.all_mu,
        }


class ScalingVerification:
    """Замеры на цепочках семейства IIb с ростом числа клауз"""

    def __init__(self, sizes: Optional[Sequence[int]] = None, limit: float = LINEARITY_RATIO_LIMIT):
        self.sizes = sorted(sizes or DEFAULT_SCALING_SIZES)
        self.limit = limit
        self.process = psutil.Process(os.getpid())

    def _rss_mb(self) -> float:
        return self.process.memory_info().rss / 1024 / 1024

    def measure(self, c: int) -> ScalingPoint:
        F = iib_chain(c)

        start = time.perf_counter()
        outcome = csdp_full(F)
        csdp_seconds = time.perf_counter() - start

        start = time.perf_counter()
        result = is_2mu(F)
        mu_seconds = time.perf_counter() - start

        point = ScalingPoint(clauses=c, csdp_seconds=csdp_seconds, mu_seconds=mu_seconds,
                             rss_mb=self._rss_mb(), is_mu=result and outcome.reduced)
        logger.info(f"✓ c={c}: csDP {csdp_seconds:.3f}s, 2-MU {mu_seconds:.3f}s, RSS {point.rss_mb:.1f} MB")
        return point

    def run(self) -> ScalingReport:
        report = ScalingReport(limit=self.limit)
        for c in self.sizes:
            report.points.append(self.measure(c))

        for prev, cur in zip(report.points, report.points[1:]):
            report.ratios.append({
                'from': prev.clauses,
                'to': cur.clauses,
                'csdp': cur.csdp_seconds / max(prev.csdp_seconds, 1e-6),
                'mu': cur.mu_seconds / max(prev.mu_seconds, 1e-6),
            })

        if report.linear:
            logger.info("✓ Рост времени в пределах линейной полосы")
        else:
            logger.warning(f"⚠ Отношение времён превышает {self.limit}: {report.ratios}")
        return report
