"""
Рандомизированные конструкторы идентифицирующих кодов:

- lll_construct: удаление случайного множества S из невынужденных вершин
  с пересэмплированием плохих событий (локальная лемма) и детерминированным
  сжатием S, если лимит пересэмплирований исчерпан;
- girth5_construct: 2-доминирующее множество без изолированных рёбер
  для графов обхвата не меньше 5;
- rrg_construct: тот же конвейер плюс починка треугольников и 4-циклов,
  рассчитан на случайные регулярные графы.

Все конструкторы проверяют результат перед возвратом.
"""

from itertools import combinations
from math import exp, log
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.core.logger import get_logger
from src.domain.bounds import LLL_DENOMINATOR, lll_dependency_check
from src.domain.entities import ConstructorResult, LllParameters
from src.domain.exceptions import DomainViolationError, GirthTooSmallError, MinDegreeTooSmallError
from src.domain.graph import (Graph, VertexSet, count_short_cycles, find_false_twins, girth, iter_bits,
                              iter_four_cycles, iter_triangles)
from src.domain.identify import ensure_twin_free, forced_vertices, greedy_repair, is_identifying_code

logger = get_logger(__name__)

MAX_P = 0.999
DEFAULT_MAX_RESAMPLES = 10_000
DEFAULT_MAX_RESTARTS = 100


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed))


def _sample_mask(rng: np.random.Generator, candidates: List[int], p: float) -> int:
    draws = rng.random(len(candidates)) < p
    mask = 0
    for v, hit in zip(candidates, draws):
        if hit:
            mask |= 1 << v
    return mask


def _checked_code(g: Graph, code: VertexSet, method: str) -> VertexSet:
    """Последний рубеж: код проверяется; при нарушении дочиняется жадно"""
    certificate = is_identifying_code(g, code)
    if certificate.valid:
        return code
    logger.error(f"{method}: constructed set failed verification ({certificate}), repairing")
    return greedy_repair(g, code)


# --- локальная лемма -------------------------------------------------------

def lll_parameters(d: int, f_ratio: float) -> LllParameters:
    """k = 99 ln2 / (2f), p = 1/(kd), цель |S| = f^2 n / (103 d)"""
    if d < 3:
        raise DomainViolationError(f"max degree must be at least 3, got {d}")
    if not 0 < f_ratio <= 1:
        raise DomainViolationError(f"f_ratio must lie in (0, 1], got {f_ratio}")
    k = 99 * log(2) / (2 * f_ratio)
    p = 1 / (k * d)
    # при f <= 1 имеем k >= 34.3 и p <= 1/103, условие леммы выполняется с запасом
    if lll_dependency_check(d, p) > 0.5:
        raise DomainViolationError(f"local lemma condition fails for d={d}, p={p}")
    return LllParameters(d=d, f_ratio=float(f_ratio), k=k, p=p,
                         size_target_ratio=f_ratio ** 2 / (LLL_DENOMINATOR * d))


def _lll_events(g: Graph, free_mask: int) -> List[Tuple[str, int]]:
    """
    Плохие события как маски: событие случается, когда маска целиком в S.
    События, задевающие вынужденную вершину, невозможны и отбрасываются.
    """
    events: List[Tuple[str, int]] = []

    def keep(kind: str, mask: int) -> None:
        if mask and mask & ~free_mask == 0:
            events.append((kind, mask))

    for u in range(g.n):
        keep("A", g.closed_mask(u))
    for u, v in g.edges:
        keep("B", g.closed_mask(u) ^ g.closed_mask(v))
    false_twins = set(find_false_twins(g))
    for u, v in g.pairs_within_two:
        if not g.has_edge(u, v) and (u, v) not in false_twins:
            keep("C", g.closed_mask(u) ^ g.closed_mask(v))
    for u, v in sorted(false_twins):
        keep("D", (1 << u) | (1 << v))
    return events


def _first_violated(events: List[Tuple[str, int]], s_mask: int) -> Optional[Tuple[str, int]]:
    for event in events:
        if event[1] & ~s_mask == 0:
            return event
    return None


def lll_construct(g: Graph, seed: Optional[int] = None, max_resamples: int = DEFAULT_MAX_RESAMPLES,
                  max_restarts: int = DEFAULT_MAX_RESTARTS) -> ConstructorResult:
    """
    Код C = V ∖ S, где S ⊆ V' = V ∖ F. Перезапуски продолжаются, пока |S|
    не достигнет цели или не кончится лимит; возвращается лучший S.
    """
    ensure_twin_free(g)
    report = forced_vertices(g)
    params = lll_parameters(g.max_degree, float(report.f_ratio))
    size_target = params.size_target(g.n)

    free_mask = report.forced.complement().mask
    free_vertices = list(iter_bits(free_mask))
    events = _lll_events(g, free_mask)
    logger.info(f"LLL construct: n={g.n}, d={params.d}, |F|={len(report.forced)}, "
                f"p={params.p:.6f}, target |S| >= {size_target:.2f}, events={len(events)}")

    best_s = 0
    restarts_used = 0
    total_resamples = 0
    event_counts: Dict[str, int] = {"A": 0, "B": 0, "C": 0, "D": 0}
    shrink_removals = 0

    for child in np.random.SeedSequence(seed).spawn(max(1, max_restarts)):
        restarts_used += 1
        rng = np.random.default_rng(child)
        s_mask = _sample_mask(rng, free_vertices, params.p)

        resamples = 0
        while resamples < max_resamples:
            event = _first_violated(events, s_mask)
            if event is None:
                break
            kind, mask = event
            event_counts[kind] += 1
            variables = list(iter_bits(mask))
            s_mask = (s_mask & ~mask) | _sample_mask(rng, variables, params.p)
            resamples += 1
        total_resamples += resamples

        # лимит исчерпан: сжимаем S, удаляя по вершине из каждого случившегося события
        while True:
            event = _first_violated(events, s_mask)
            if event is None:
                break
            lowest = event[1] & -event[1]
            s_mask &= ~lowest
            shrink_removals += 1

        logger.debug(f"Restart {restarts_used}: |S|={s_mask.bit_count()} after {resamples} resamples")
        if s_mask.bit_count() > best_s.bit_count():
            best_s = s_mask
        if best_s.bit_count() >= size_target:
            break

    removed = VertexSet(g.n, best_s)
    code = _checked_code(g, removed.complement(), "lll")
    result = ConstructorResult(
        method="lll",
        code=code,
        removed=code.complement(),
        seed=seed,
        restarts_used=restarts_used,
        resamples_used=total_resamples,
        size_target=size_target,
        met_size_target=len(code.complement()) >= size_target,
        p=params.p,
        stats={
            "forced": len(report.forced),
            "free": len(free_vertices),
            "k": params.k,
            "event_counts": event_counts,
            "shrink_removals": shrink_removals,
        },
    )
    logger.info(f"LLL construct done: |S|={len(result.removed)}, code size {result.size}, "
                f"restarts={restarts_used}, target met={result.met_size_target}")
    return result


# --- обхват 5 ---------------------------------------------------------------

def girth5_probability(delta: int) -> Tuple[float, bool]:
    """p = (ln δ + ln ln δ)/δ, обрезанное до MAX_P; второй элемент - было ли обрезание"""
    if delta < 3:
        raise MinDegreeTooSmallError(f"min degree must be at least 3, got {delta}")
    p = (log(delta) + log(log(delta))) / delta
    return (MAX_P, True) if p > MAX_P else (p, False)


def girth5_expected_bound(n: int, delta: int, avg_degree: float, p: float, mode: str = "case1") -> float:
    """
    Оценка ожидаемого размера кода: np + n(1+δp)e^{-δp}; в первом случае
    умножается на 3/2, во втором добавляется (n d̄ / 2)(1-p)^{2δ-2}.
    """
    base = n * p + n * (1 + delta * p) * exp(-delta * p)
    if mode == "case1":
        return 1.5 * base
    if mode == "case2":
        return base + (n * avg_degree / 2) * (1 - p) ** (2 * delta - 2)
    raise DomainViolationError(f"unknown mode {mode!r}, expected case1 or case2")


def _two_dominating_pipeline(g: Graph, rng: np.random.Generator, p: float) -> Tuple[int, Dict[str, int]]:
    """S случайно, T = {v : |N[v] ∩ S| < 2}, D = S ∪ T, затем починка изолированных рёбер G[D]"""
    s_mask = _sample_mask(rng, list(range(g.n)), p)
    t_mask = 0
    for v in range(g.n):
        if (g.closed_mask(v) & s_mask).bit_count() < 2:
            t_mask |= 1 << v
    d_mask = s_mask | t_mask

    repaired = 0
    for u, v in g.edges:
        if not (d_mask >> u & 1 and d_mask >> v & 1):
            continue
        if g.induced_degree(u, d_mask) != 1 or g.induced_degree(v, d_mask) != 1:
            continue
        candidates = (g.open_mask(u) | g.open_mask(v)) & ~((1 << u) | (1 << v))
        if candidates:
            d_mask |= candidates & -candidates
            repaired += 1

    y_count = sum(1 for u, v in g.edges if not (g.closed_mask(u) ^ g.closed_mask(v)) & s_mask)
    stats = {"s_size": s_mask.bit_count(), "t_size": t_mask.bit_count(),
             "isolated_edges_repaired": repaired, "y_count": y_count}
    return d_mask, stats


def girth5_construct(g: Graph, seed: Optional[int] = None, mode: str = "case1") -> ConstructorResult:
    """Код для графов обхвата >= 5 и минимальной степени >= 3"""
    if mode not in ("case1", "case2"):
        raise DomainViolationError(f"unknown mode {mode!r}, expected case1 or case2")
    g_girth = girth(g)
    if g_girth < 5:
        raise GirthTooSmallError(f"girth must be at least 5, got {g_girth}")
    p, clamped = girth5_probability(g.min_degree)
    ensure_twin_free(g)

    d_mask, stats = _two_dominating_pipeline(g, _rng(seed), p)
    if mode == "case1":
        stats.pop("y_count")
    code = _checked_code(g, VertexSet(g.n, d_mask), "girth5")
    size_target = girth5_expected_bound(g.n, g.min_degree, g.average_degree, p, mode)

    logger.info(f"Girth-5 construct ({mode}): code size {len(code)} of {g.n}, p={p:.4f}, "
                f"isolated edges repaired {stats['isolated_edges_repaired']}")
    return ConstructorResult(
        method="girth5",
        code=code,
        removed=code.complement(),
        seed=seed,
        size_target=size_target,
        met_size_target=len(code) <= size_target,
        p=p,
        stats={**stats, "mode": mode, "p_clamped": clamped},
    )


# --- случайные регулярные графы --------------------------------------------

def _unseparated(g: Graph, a: int, b: int, code_mask: int) -> bool:
    return not (g.closed_mask(a) ^ g.closed_mask(b)) & code_mask


def _separate_triangles(g: Graph, code_mask: int) -> Tuple[int, int, int]:
    """Для неразделённой пары треугольника добавляет вершину из N(ui) ∖ N[uj] (или наоборот)"""
    added = 0
    triangles = 0
    for u1, u2, u3 in iter_triangles(g):
        triangles += 1
        for a, b in ((u1, u2), (u2, u3), (u3, u1)):
            if not _unseparated(g, a, b, code_mask):
                continue
            only_a = g.open_mask(a) & ~g.closed_mask(b)
            pick = only_a or (g.open_mask(b) & ~g.closed_mask(a))
            if not pick:
                continue  # близнецы, исключены заранее
            code_mask |= pick & -pick
            added += 1
    return code_mask, triangles, added


def _separate_four_cycles(g: Graph, code_mask: int) -> Tuple[int, int, int]:
    """
    Множество T из 4 вершин с 4-циклом: K4 пропускаем, C4 и ромб добавляем
    целиком, если какая-то пара внутри T ещё не разделена кодом.
    """
    seen = set()
    added = 0
    for cycle in iter_four_cycles(g):
        t_mask = 0
        for v in cycle:
            t_mask |= 1 << v
        if t_mask in seen:
            continue
        seen.add(t_mask)
        inner_edges = sum(g.induced_degree(v, t_mask) for v in cycle) // 2
        if inner_edges == 6:
            continue
        if not any(_unseparated(g, a, b, code_mask) for a, b in combinations(cycle, 2)):
            continue
        added += (t_mask & ~code_mask).bit_count()
        code_mask |= t_mask
    return code_mask, len(seen), added


def rrg_construct(g: Graph, seed: Optional[int] = None) -> ConstructorResult:
    """
    Конвейер обхвата 5 без проверки обхвата, починка пар внутри треугольников
    и 4-циклов, затем жадная страховка.
    """
    ensure_twin_free(g)
    if g.max_degree < 3:
        raise DomainViolationError(f"max degree must be at least 3, got {g.max_degree}")
    delta = max(g.min_degree, 3)
    p, clamped = girth5_probability(delta)

    d_mask, stats = _two_dominating_pipeline(g, _rng(seed), p)
    d_mask, triangles, by_triangles = _separate_triangles(g, d_mask)
    d_mask, quads, by_quads = _separate_four_cycles(g, d_mask)

    before = d_mask.bit_count()
    code = greedy_repair(g, VertexSet(g.n, d_mask))
    code = _checked_code(g, code, "rrg")

    cycles = count_short_cycles(g)
    size_target = girth5_expected_bound(g.n, delta, g.average_degree, p, "case2") + 3 * cycles.x3 + 4 * cycles.x4

    logger.info(f"RRG construct: code size {len(code)} of {g.n} ({len(code) / g.n:.4f}), "
                f"triangles={triangles}, four-vertex sets={quads}, safety net added {len(code) - before}")
    return ConstructorResult(
        method="rrg",
        code=code,
        removed=code.complement(),
        seed=seed,
        size_target=size_target,
        met_size_target=len(code) <= size_target,
        p=p,
        stats={
            **stats,
            "p_clamped": clamped,
            "triangles": triangles,
            "four_cycle_sets": quads,
            "x4": cycles.x4,
            "added_by_triangles": by_triangles,
            "added_by_four_cycles": by_quads,
            "added_by_safety_net": len(code) - before,
        },
    )
