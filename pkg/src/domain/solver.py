"""
Точный и жадный поиск минимального идентифицирующего кода через задачу
о покрытии (hitting set), а также точное доминирующее множество.
"""

import time
from itertools import combinations
from typing import Dict, List, Optional

from src.core import config
from src.core.logger import get_logger
from src.domain.entities import ConstraintFamily, SolveOutcome
from src.domain.exceptions import BudgetExceededError, TwinsPresentError
from src.domain.graph import Graph, VertexSet, iter_bits
from src.domain.identify import ensure_twin_free, greedy_hitting, is_identifying_code

logger = get_logger(__name__)

_DEADLINE_CHECK_EVERY = 256  # узлов между проверками таймера


def build_constraints(g: Graph) -> ConstraintFamily:
    """
    Ограничения {N[u]} ∪ {N[u] Δ N[v] : dist(u, v) <= 2} без повторов.
    Пустое ограничение означает пару близнецов.
    """
    seen: Dict[int, int] = {}
    masks: List[int] = []
    origins = []
    for u in range(g.n):
        mask = g.closed_mask(u)
        if mask not in seen:
            seen[mask] = len(masks)
            masks.append(mask)
            origins.append(("dominate", u, u))
    twins = []
    for u, v in g.pairs_within_two:
        mask = g.closed_mask(u) ^ g.closed_mask(v)
        if not mask:
            twins.append((u, v))
            continue
        if mask not in seen:
            seen[mask] = len(masks)
            masks.append(mask)
            origins.append(("separate", u, v))
    if twins:
        raise TwinsPresentError(f"graph has {len(twins)} twin pairs, e.g. {twins[0]}", twins=twins)
    return ConstraintFamily(n=g.n, masks=masks, origins=origins)


def _drop_supersets(masks: List[int]) -> List[int]:
    """Ограничение, содержащее другое, задевается автоматически"""
    kept: List[int] = []
    for mask in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any(k & ~mask == 0 for k in kept):
            kept.append(mask)
    return kept


def _packing_bound(open_masks: List[int]) -> int:
    """Жадная упаковка попарно непересекающихся ограничений - нижняя оценка числа новых вершин"""
    used = 0
    count = 0
    for mask in sorted(open_masks, key=int.bit_count):
        if not mask & used:
            used |= mask
            count += 1
    return count


class _OutOfTime(Exception):
    pass


class _HittingSetSearch:
    """Ветви и границы для минимального покрытия набора масок"""

    def __init__(self, masks: List[int], incumbent: int, deadline: float):
        self.masks = masks
        self.best = incumbent
        self.best_size = incumbent.bit_count()
        self.deadline = deadline
        self.nodes = 0

    def run(self, chosen: int, excluded: int) -> None:
        self.nodes += 1
        if self.nodes % _DEADLINE_CHECK_EVERY == 1 and time.monotonic() >= self.deadline:
            raise _OutOfTime()

        # единичное распространение: ограничение с одной доступной вершиной решает выбор
        while True:
            open_masks = [m & ~excluded for m in self.masks if not m & chosen]
            if any(not a for a in open_masks):
                return
            units = 0
            for a in open_masks:
                if a.bit_count() == 1:
                    units |= a
            if not units:
                break
            chosen |= units

        size = chosen.bit_count()
        if not open_masks:
            if size < self.best_size:
                self.best, self.best_size = chosen, size
                logger.debug(f"New incumbent of size {size} after {self.nodes} nodes")
            return

        if size + _packing_bound(open_masks) >= self.best_size:
            return

        target = min(open_masks, key=int.bit_count)
        branch_excluded = excluded
        for v in iter_bits(target):
            bit = 1 << v
            self.run(chosen | bit, branch_excluded)
            branch_excluded |= bit


def _solve_hitting_set(n: int, masks: List[int], incumbent: int, time_budget: float, method: str) -> SolveOutcome:
    started = time.monotonic()
    forced = 0
    for m in masks:
        if m.bit_count() == 1:
            forced |= m
    reduced = _drop_supersets([m for m in masks if not m & forced])

    search = _HittingSetSearch(reduced, incumbent, started + time_budget)
    try:
        search.run(forced, 0)
    except _OutOfTime:
        elapsed = time.monotonic() - started
        outcome = SolveOutcome(gamma=search.best_size, code=VertexSet(n, search.best), optimal=False,
                               method=method, nodes=search.nodes, elapsed=elapsed)
        logger.warning(f"Solver budget of {time_budget}s exhausted after {search.nodes} nodes, "
                       f"best known {search.best_size}")
        raise BudgetExceededError(
            f"optimality not proven within {time_budget}s (best known size {search.best_size})",
            incumbent=outcome,
        )

    elapsed = time.monotonic() - started
    logger.info(f"Solved {method}: size {search.best_size} with {search.nodes} nodes in {elapsed:.3f}s")
    return SolveOutcome(gamma=search.best_size, code=VertexSet(n, search.best), optimal=True,
                        method=method, nodes=search.nodes, elapsed=elapsed)


def greedy_code(g: Graph) -> VertexSet:
    """Жадное покрытие семейства ограничений; всегда корректный код"""
    family = build_constraints(g)
    return VertexSet(g.n, greedy_hitting(g.n, family.masks))


def solve_exact(g: Graph, time_budget: Optional[float] = None) -> SolveOutcome:
    """
    Минимальный идентифицирующий код. Вынужденные вершины (одноэлементные
    ограничения) включаются сразу, верхняя граница стартует с жадного кода.
    """
    budget = config.IDCODE_SOLVER_BUDGET if time_budget is None else time_budget
    family = build_constraints(g)
    incumbent = greedy_hitting(g.n, family.masks)
    logger.info(f"Exact solve: n={g.n}, constraints={len(family)}, greedy upper bound {incumbent.bit_count()}")
    return _solve_hitting_set(g.n, family.masks, incumbent, budget, "exact")


def solve_exact_domination(g: Graph, time_budget: Optional[float] = None) -> SolveOutcome:
    """Минимальное доминирующее множество: покрытие только замкнутых окрестностей"""
    budget = config.IDCODE_SOLVER_BUDGET if time_budget is None else time_budget
    masks = [g.closed_mask(u) for u in range(g.n)]
    incumbent = greedy_hitting(g.n, masks)
    return _solve_hitting_set(g.n, masks, incumbent, budget, "domination")


def solve_naive(g: Graph) -> SolveOutcome:
    """Перебор подмножеств по возрастанию размера с прямой проверкой кода"""
    ensure_twin_free(g)
    started = time.monotonic()
    checked = 0
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            checked += 1
            code = VertexSet.from_iterable(g.n, combo)
            if is_identifying_code(g, code, witness_cap=1).valid:
                return SolveOutcome(gamma=size, code=code, optimal=True, method="naive",
                                    nodes=checked, elapsed=time.monotonic() - started)
    # для графа без близнецов V(G) всегда код, сюда не доходим
    raise TwinsPresentError("no identifying code exists")
