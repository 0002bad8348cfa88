"""Модель конфигураций: случайные d-регулярные мультиграфы и статистика коротких циклов"""

from math import exp
from typing import Dict, Optional, Union

import networkx as nx
import numpy as np

from src.core.logger import get_logger
from src.domain.entities import SampleStats
from src.domain.exceptions import DomainViolationError, SamplingExhaustedError
from src.domain.graph import Graph, MultiGraph, count_short_cycles, find_twins

logger = get_logger(__name__)

SeedLike = Union[None, int, np.random.SeedSequence, np.random.Generator]

DEFAULT_MAX_TRIES = 10_000
REJECTION_ACCEPTANCE_FLOOR = 1e-3  # ниже этой доли простых графов отбор бесполезен


def _generator(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _check_parameters(n: int, d: int) -> None:
    if n < 1 or d < 1:
        raise DomainViolationError(f"n and d must be positive, got n={n}, d={d}")
    if n * d % 2:
        raise DomainViolationError(f"n*d must be even, got n={n}, d={d}")


def sample_multigraph(n: int, d: int, seed: SeedLike = None) -> MultiGraph:
    """
    Равномерное совершенное паросочетание на n*d точках (ячейка вершины v -
    точки v*d..v*d+d-1): случайная перестановка, соседние точки образуют пару.
    """
    _check_parameters(n, d)
    rng = _generator(seed)
    cells = rng.permutation(n * d) // d
    edges = [(int(cells[i]), int(cells[i + 1])) for i in range(0, n * d, 2)]
    return MultiGraph(n, edges, allow_loops=True)


def sample_simple(n: int, d: int, seed: SeedLike = None, max_tries: int = DEFAULT_MAX_TRIES) -> Graph:
    """Выборка с отклонением: мультиграфы с петлями или кратными рёбрами отбрасываются"""
    _check_parameters(n, d)
    rng = _generator(seed)
    for attempt in range(1, max_tries + 1):
        multigraph = sample_multigraph(n, d, rng)
        if multigraph.is_simple():
            logger.debug(f"Simple {d}-regular graph on {n} vertices after {attempt} draws")
            return multigraph.to_graph()
    raise SamplingExhaustedError(f"no simple {d}-regular graph on {n} vertices in {max_tries} draws")


def sample_regular(n: int, d: int, seed: SeedLike = None) -> Graph:
    """
    Простой d-регулярный граф для экспериментов. Пока ожидаемая доля простых
    графов не ниже REJECTION_ACCEPTANCE_FLOOR, используется отбор из модели
    конфигураций; при больших d - паросочетание с перезапусками из networkx
    (распределение близко к равномерному, но не точно равномерно).
    """
    _check_parameters(n, d)
    if d >= n:
        raise DomainViolationError(f"no simple {d}-regular graph on {n} vertices")
    rng = _generator(seed)
    if cycle_references(n, d)["acceptance_rate"] >= REJECTION_ACCEPTANCE_FLOOR:
        return sample_simple(n, d, rng)
    nx_seed = int(rng.integers(2 ** 32))
    logger.debug(f"Pairing sampler for n={n}, d={d} with seed {nx_seed}")
    return Graph.from_networkx(nx.random_regular_graph(d, n, seed=nx_seed))


def cycle_references(n: int, d: int) -> Dict[str, float]:
    """Асимптотические ориентиры: доля простых графов, средние X3, X4 и вероятность близнецов"""
    return {
        "acceptance_rate": exp((1 - d * d) / 4),
        "mean_x3": (d - 1) ** 3 / 6,
        "mean_x4": (d - 1) ** 4 / 8,
        "twin_probability": (n * d / 2) * (d / n) ** (d - 1),
    }


def cycle_statistics(n: int, d: int, seed: SeedLike = None, trials: int = 100,
                     accepted_target: Optional[int] = None, max_draws: Optional[int] = None,
                     keep_samples: int = 0) -> SampleStats:
    """
    Средние числа 3- и 4-циклов и доля графов с близнецами по принятым простым
    графам. С accepted_target выборка продолжается, пока не принято столько графов
    (не более max_draws мультиграфов); иначе сэмплируется ровно trials мультиграфов.
    Первые keep_samples принятых графов возвращаются в поле samples.
    """
    _check_parameters(n, d)
    rng = _generator(seed)
    if accepted_target is not None:
        limit = max_draws if max_draws is not None else 100 * accepted_target
    else:
        limit = trials

    draws = accepted = with_twins = 0
    sum_x3 = sum_x4 = 0
    samples = []
    while draws < limit:
        if accepted_target is not None and accepted >= accepted_target:
            break
        draws += 1
        multigraph = sample_multigraph(n, d, rng)
        if not multigraph.is_simple():
            continue
        graph = multigraph.to_graph()
        accepted += 1
        if len(samples) < keep_samples:
            samples.append(graph)
        counts = count_short_cycles(graph)
        sum_x3 += counts.x3
        sum_x4 += counts.x4
        if find_twins(graph):
            with_twins += 1

    if accepted_target is not None and accepted < accepted_target:
        logger.warning(f"Only {accepted} of {accepted_target} simple graphs accepted in {draws} draws")

    stats = SampleStats(
        n=n,
        d=d,
        trials=draws,
        accepted_simple=accepted,
        mean_x3=sum_x3 / accepted if accepted else 0.0,
        mean_x4=sum_x4 / accepted if accepted else 0.0,
        twin_fraction=with_twins / accepted if accepted else 0.0,
        references=cycle_references(n, d),
        samples=samples,
    )
    logger.info(f"Cycle statistics n={n} d={d}: accepted {accepted}/{draws}, "
                f"mean x3={stats.mean_x3:.3f}, mean x4={stats.mean_x4:.3f}")
    return stats
