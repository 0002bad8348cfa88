"""Оценки размера минимального идентифицирующего кода и справочные константы"""

from math import comb, log
from typing import List, Optional, Tuple

from src.domain.entities import BoundReport, ReferenceValue
from src.domain.exceptions import DomainViolationError
from src.domain.graph import Graph
from src.domain.identify import ensure_twin_free, forced_vertices

LLL_DENOMINATOR = 103  # знаменатель размера удаляемого множества в оценке через локальную лемму


def log_lower_bound(n: int) -> int:
    """⌈log2(n+1)⌉"""
    return n.bit_length()


def degree_lower_bound(n: int, d: int) -> int:
    """⌈2n/(d+2)⌉"""
    return -(-2 * n // (d + 2))


def lower_bounds(g: Graph) -> BoundReport:
    if not g.m:
        raise DomainViolationError("lower bounds need a graph with at least one edge")
    ensure_twin_free(g)
    return BoundReport(
        n=g.n,
        log_lower=log_lower_bound(g.n),
        degree_lower=degree_lower_bound(g.n, g.max_degree),
        forced_lower=len(forced_vertices(g).forced),
        trivial_upper=g.n - 1,
    )


def beta_gamma(k: int) -> Tuple[int, int]:
    """
    β(k) = Σ_{i=0}^{k-2} (2k-3)^i - оценка |F(u)| в графах без K_k;
    γ(k) = kβ + C(kβ, 2).
    """
    if k < 3:
        raise DomainViolationError(f"beta/gamma are defined for k >= 3, got {k}")
    beta = sum((2 * k - 3) ** i for i in range(k - 1))
    gamma = k * beta + comb(k * beta, 2)
    return beta, gamma


def lll_dependency_check(d: int, p: float) -> float:
    """
    Левая часть достаточного условия локальной леммы для весов событий;
    условие выполнено, когда значение не превосходит 1/2.
    """
    q = 2 * p
    return (d + 1) * q ** 2 + d * (d - 1) * q ** 2 + d * d * (d - 1) * q ** 3 + (d - 1) * q ** 2


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainViolationError(message)


def theorem_upper_bounds(n: int, d: int, f_ratio: float = 1.0, delta: Optional[int] = None,
                         clique_bound: Optional[int] = None) -> List[ReferenceValue]:
    """
    Таблица значений формул-оценок (главные члены). Асимптотические строки
    помечены флагом asymptotic и служат только для сравнения.
    """
    _require(n >= 1, f"n must be positive, got {n}")
    _require(d >= 3, f"d must be at least 3, got {d}")
    _require(0 < f_ratio <= 1, f"f_ratio must lie in (0, 1], got {f_ratio}")

    rows = [
        ReferenceValue("lll_main", n - n * f_ratio ** 2 / (LLL_DENOMINATOR * d), "upper", False,
                       "n - n f^2 / (103 d)"),
        ReferenceValue("lll_general", n - n / (LLL_DENOMINATOR * d * (d + 1) ** 2), "upper", False,
                       "n - n / (103 d (d+1)^2)"),
    ]

    if clique_bound is not None:
        _, gamma = beta_gamma(clique_bound)
        rows.append(ReferenceValue("lll_clique_free", n - n / (LLL_DENOMINATOR * gamma ** 2 * d), "upper", False,
                                   f"n - n / (103 gamma({clique_bound})^2 d)"))

    if delta is not None:
        _require(delta >= 3, f"min degree must be at least 3 for the girth-5 rows, got {delta}")
        rows.append(ReferenceValue("girth5", 3 * log(delta) / (2 * delta) * n, "upper", True,
                                   "3 ln(delta) / (2 delta) n"))
        rows.append(ReferenceValue("girth5_sparse", (log(delta) + log(log(delta))) / delta * n, "upper", True,
                                   "(ln delta + ln ln delta) / delta n"))

    rows.append(ReferenceValue("rrg_upper", rrg_upper_reference(n, d), "upper", True,
                               "(ln d + ln ln d) / d n"))
    rows.append(ReferenceValue("domination_lower", domination_lower_reference(n, d), "lower", True,
                               "(ln d - 2 ln ln d) / d n"))
    return rows


def domination_lower_reference(n: int, d: int) -> float:
    """Главный член нижней оценки доминирующих множеств случайного d-регулярного графа"""
    _require(d >= 3, f"d must be at least 3, got {d}")
    return (log(d) - 2 * log(log(d))) / d * n


def rrg_upper_reference(n: int, d: int) -> float:
    _require(d >= 3, f"d must be at least 3, got {d}")
    return (log(d) + log(log(d))) / d * n
