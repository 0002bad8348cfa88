"""
Серии испытаний на случайных регулярных графах. Испытание i получает
собственный поток случайности SeedSequence(seed, spawn_key=(i,)), поэтому
результат не зависит от числа воркеров и порядка их завершения.
"""

import asyncio
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from src.core import config
from src.core.logger import get_logger
from src.domain import bounds, config_model, randomized, solver
from src.domain.exceptions import BudgetExceededError, DomainViolationError
from src.domain.graph import is_twin_free
from src.domain.identify import is_dominating, is_identifying_code
from src.middleware.metrics import TRIAL_DURATION
from src.models.reports import ExperimentAggregates, ExperimentConfig, ExperimentReport, Timing, TrialRecord

logger = get_logger(__name__)

TABLE1_METHODS = ("rrg", "lll", "greedy")


def trial_seeds(master_seed: int, trial: int) -> Tuple[np.random.SeedSequence, int]:
    """Поток для графа и целочисленный сид для конструктора"""
    graph_stream, constructor_stream = np.random.SeedSequence(master_seed, spawn_key=(trial,)).spawn(2)
    return graph_stream, int(constructor_stream.generate_state(1, dtype=np.uint64)[0])


def table1_trial(trial: int, n: int, d: int, method: str, master_seed: int) -> Tuple[TrialRecord, float]:
    """Одно испытание: случайный d-регулярный граф и код выбранным методом"""
    started = time.monotonic()
    graph_stream, constructor_seed = trial_seeds(master_seed, trial)
    graph = config_model.sample_regular(n, d, graph_stream)

    extra = {"constructor_seed": constructor_seed}
    if not is_twin_free(graph):
        logger.warning(f"Trial {trial}: sampled graph has twins, no identifying code exists")
        record = TrialRecord(trial=trial, n=n, d=d, size=n, ratio=1.0, valid=False, extra={**extra, "twins": True})
        return record, time.monotonic() - started
    if method == "rrg":
        result = randomized.rrg_construct(graph, constructor_seed)
        code = result.code
        extra["added_by_safety_net"] = result.stats["added_by_safety_net"]
    elif method == "lll":
        result = randomized.lll_construct(graph, constructor_seed)
        code = result.code
        extra["met_size_target"] = result.met_size_target
    elif method == "greedy":
        code = solver.greedy_code(graph)
    else:
        raise DomainViolationError(f"unknown method {method!r}, expected one of {TABLE1_METHODS}")

    valid = is_identifying_code(graph, code).valid
    record = TrialRecord(trial=trial, n=n, d=d, size=len(code), ratio=len(code) / n, valid=valid, extra=extra)
    return record, time.monotonic() - started


def domination_trial(trial: int, n: int, d: int, budget: float, master_seed: int) -> Tuple[TrialRecord, float]:
    """Одно испытание: точное доминирующее множество случайного d-регулярного графа"""
    started = time.monotonic()
    graph_stream, _ = trial_seeds(master_seed, trial)
    graph = config_model.sample_regular(n, d, graph_stream)
    try:
        outcome = solver.solve_exact_domination(graph, budget)
    except BudgetExceededError as e:
        outcome = e.incumbent
    valid = is_dominating(graph, outcome.code).ok
    record = TrialRecord(trial=trial, n=n, d=d, size=outcome.gamma, ratio=outcome.gamma / n, valid=valid,
                         optimal=outcome.optimal, extra={"nodes": outcome.nodes})
    return record, time.monotonic() - started


class ExperimentService:
    """Сервис серий испытаний с параллельным выполнением в пуле процессов"""

    def __init__(self, workers: Optional[int] = None):
        self.workers = max(1, workers or config.IDCODE_THREADS)  # потолок числа процессов

    async def _run_trials(self, name: str, jobs: Sequence[Tuple[Callable, tuple]]) -> List[Tuple[TrialRecord, float]]:
        """Запускает задания; результаты упорядочиваются по номеру испытания"""
        workers = min(self.workers, len(jobs))
        logger.info(f"Running {len(jobs)} {name} trials on {workers} workers")
        if workers <= 1:
            results = [func(*job_args) for func, job_args in jobs]
        else:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [loop.run_in_executor(pool, func, *job_args) for func, job_args in jobs]
                results = await asyncio.gather(*futures)

        for record, seconds in results:
            TRIAL_DURATION.labels(experiment=name).observe(seconds)
            logger.debug(f"Trial {record.trial}: size {record.size}, ratio {record.ratio:.4f}, valid {record.valid}")
        invalid = [record.trial for record, _ in results if not record.valid]
        if invalid:
            logger.error(f"Trials produced invalid sets and were dropped: {invalid}")
        return sorted(((r, s) for r, s in results if r.valid), key=lambda item: (item[0].n, item[0].trial))

    async def table1(self, n: int, d: int, trials: int, seed: int, method: str = "rrg") -> ExperimentReport:
        """Размер кода на G(n, d) рядом со справочными формулами (в долях от n)"""
        if method not in TABLE1_METHODS:
            raise DomainViolationError(f"unknown method {method!r}, expected one of {TABLE1_METHODS}")
        started = time.monotonic()
        timestamp = datetime.now(timezone.utc)
        jobs = [(table1_trial, (i, n, d, method, seed)) for i in range(trials)]
        results = await self._run_trials("table1", jobs)

        references = {row.name: row.value / n for row in bounds.theorem_upper_bounds(n, d, 1.0, d)}
        records = [record for record, _ in results]
        report = ExperimentReport(
            config=ExperimentConfig(command="experiment table1", method=method, seed=seed, n=[n], d=d,
                                    trials=trials),
            records=records,
            aggregates=ExperimentAggregates.create(records, references),
            timing=Timing(timestamp=timestamp, elapsed_seconds=time.monotonic() - started,
                          trial_seconds=[seconds for _, seconds in results]),
        )
        logger.info(f"Table1 experiment done: mean ratio {report.aggregates.mean_ratio:.4f} "
                    f"over {len(records)} trials")
        return report

    async def domination(self, ns: List[int], d: int, trials: int, seed: int,
                         budget: Optional[float] = None) -> ExperimentReport:
        """Точное доминирующее число на G(n, d); нижняя формула только для сравнения"""
        budget = config.IDCODE_SOLVER_BUDGET if budget is None else budget
        started = time.monotonic()
        timestamp = datetime.now(timezone.utc)
        jobs = [(domination_trial, (i, n, d, budget, seed)) for n in ns for i in range(trials)]
        results = await self._run_trials("domination", jobs)

        records = [record for record, _ in results]
        report = ExperimentReport(
            config=ExperimentConfig(command="experiment domination", method="domination", seed=seed, n=list(ns),
                                    d=d, trials=trials),
            records=records,
            aggregates=ExperimentAggregates.create(
                records, {"domination_lower": bounds.domination_lower_reference(1, d)}),
            timing=Timing(timestamp=timestamp, elapsed_seconds=time.monotonic() - started,
                          trial_seconds=[seconds for _, seconds in results]),
        )
        logger.info(f"Domination experiment done: mean ratio {report.aggregates.mean_ratio:.4f}")
        return report
