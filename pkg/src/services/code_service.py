from datetime import datetime, timezone
from typing import List, Optional, Tuple

from src.core.logger import get_logger
from src.domain import bounds, config_model, extremal, randomized, solver
from src.domain.entities import CodeCertificate, ConstructorResult, ExtremalInstance, SampleStats, SolveOutcome
from src.domain.exceptions import BudgetExceededError, DomainViolationError
from src.domain.graph import Graph, MultiGraph, VertexSet
from src.domain.identify import forced_vertices, is_identifying_code
from src.middleware.metrics import CONSTRUCTOR_RUNS, SOLVER_NODES, SOLVER_RUNS
from src.models.reports import (BoundRowOut, BoundsReportOut, CertificateOut, ConstructionMethod, ConstructionOut,
                                ExtremalFamily, ExtremalSidecarOut, LowerBoundsOut, SampleStatsOut,
                                SolveResultOut, Timing, Verdict, ViolationOut)

logger = get_logger(__name__)

SOLVE_METHODS = ("exact", "greedy", "naive", "domination")


def certificate_to_model(certificate: CodeCertificate) -> CertificateOut:
    """Конвертация сертификата в модель вывода"""
    return CertificateOut(
        valid=certificate.valid,
        verdict=Verdict.VALID if certificate.valid else Verdict.INVALID,
        code=certificate.code.to_list(),
        size=len(certificate.code),
        violations=[ViolationOut(kind=v.kind.value, witnesses=list(v.witnesses)) for v in certificate.violations],
        truncated=certificate.truncated,
    )


def outcome_to_model(outcome: SolveOutcome) -> SolveResultOut:
    return SolveResultOut(
        gamma=outcome.gamma,
        optimal=outcome.optimal,
        method=outcome.method,
        code=outcome.code.to_list(),
        nodes=outcome.nodes,
        timing=Timing(timestamp=datetime.now(timezone.utc), elapsed_seconds=outcome.elapsed),
    )


def construction_to_model(result: ConstructorResult, n: int, valid: bool) -> ConstructionOut:
    return ConstructionOut(
        method=ConstructionMethod(result.method),
        seed=result.seed,
        n=n,
        code=result.code.to_list(),
        code_size=result.size,
        removed_size=len(result.removed),
        valid=valid,
        restarts_used=result.restarts_used,
        resamples_used=result.resamples_used,
        size_target=result.size_target,
        met_size_target=result.met_size_target,
        p=result.p,
        stats=result.stats,
    )


def instance_to_sidecar(instance: ExtremalInstance) -> ExtremalSidecarOut:
    return ExtremalSidecarOut(
        family=instance.family,
        n=instance.graph.n,
        m=instance.graph.m,
        max_degree=instance.graph.max_degree,
        claimed_gamma=instance.claimed_gamma,
        optimal_code=instance.optimal_code.to_list(),
        parameters=instance.parameters,
        port_map=[[port, partner] for port, partner in sorted(instance.port_map.items())],
    )


def stats_to_model(stats: SampleStats, seed: Optional[int]) -> SampleStatsOut:
    return SampleStatsOut(
        n=stats.n,
        d=stats.d,
        seed=seed,
        trials=stats.trials,
        accepted_simple=stats.accepted_simple,
        acceptance_rate=stats.acceptance_rate,
        mean_x3=stats.mean_x3,
        mean_x4=stats.mean_x4,
        twin_fraction=stats.twin_fraction,
        references=stats.references,
    )


class CodeService:
    """Сервис одиночных операций над графом: проверка, решение, оценки, построения"""

    def verify(self, graph: Graph, code: VertexSet) -> CertificateOut:
        logger.info(f"Verifying code of size {len(code)} on graph n={graph.n}")
        certificate = is_identifying_code(graph, code)
        logger.info(f"Verification result: {certificate}")
        return certificate_to_model(certificate)

    def solve(self, graph: Graph, method: str, budget: Optional[float] = None) -> SolveResultOut:
        """Запуск решателя; при исчерпании бюджета BudgetExceededError несёт модель лучшего решения"""
        logger.info(f"Solving graph n={graph.n}, m={graph.m} with method {method}")
        try:
            if method == "exact":
                outcome = solver.solve_exact(graph, budget)
            elif method == "domination":
                outcome = solver.solve_exact_domination(graph, budget)
            elif method == "naive":
                outcome = solver.solve_naive(graph)
            elif method == "greedy":
                code = solver.greedy_code(graph)
                outcome = SolveOutcome(gamma=len(code), code=code, optimal=False, method="greedy")
            else:
                raise DomainViolationError(f"unknown solve method {method!r}, expected one of {SOLVE_METHODS}")

        except BudgetExceededError as e:
            SOLVER_RUNS.labels(method=method, outcome="budget_exceeded").inc()
            if e.incumbent is not None:
                SOLVER_NODES.labels(method=method).inc(e.incumbent.nodes)
                e.incumbent = outcome_to_model(e.incumbent)
            raise

        SOLVER_RUNS.labels(method=method, outcome="optimal" if outcome.optimal else "heuristic").inc()
        SOLVER_NODES.labels(method=method).inc(outcome.nodes)
        return outcome_to_model(outcome)

    def bounds(self, graph: Optional[Graph] = None, n: Optional[int] = None, d: Optional[int] = None,
               f_ratio: Optional[float] = None, delta: Optional[int] = None,
               clique_bound: Optional[int] = None) -> BoundsReportOut:
        """Оценки для графа (нижние + справочные) или только справочные по параметрам n, d"""
        lower = None
        if graph is not None:
            report = bounds.lower_bounds(graph)
            lower = LowerBoundsOut(log_lower=report.log_lower, degree_lower=report.degree_lower,
                                   forced_lower=report.forced_lower, best_lower=report.best_lower,
                                   trivial_upper=report.trivial_upper)
            n = graph.n
            d = graph.max_degree
            delta = delta if delta is not None else graph.min_degree
            if f_ratio is None:
                f_ratio = float(forced_vertices(graph).f_ratio)
        if n is None or d is None:
            raise DomainViolationError("bounds need either a graph or both n and d")
        f_ratio = 1.0 if f_ratio is None else f_ratio
        if delta is not None and delta < 3:
            delta = None  # строки обхвата 5 определены только для δ >= 3

        rows = bounds.theorem_upper_bounds(n, d, f_ratio, delta, clique_bound) if d >= 3 else []
        logger.info(f"Computed {len(rows)} reference rows for n={n}, d={d}")
        return BoundsReportOut(
            n=n, d=d, delta=delta, f_ratio=f_ratio, lower=lower,
            rows=[BoundRowOut(name=r.name, value=r.value, kind=r.kind, asymptotic=r.asymptotic, formula=r.formula)
                  for r in rows],
        )

    def construct(self, graph: Graph, method: str, seed: Optional[int] = None, mode: str = "case1",
                  max_restarts: int = randomized.DEFAULT_MAX_RESTARTS,
                  max_resamples: int = randomized.DEFAULT_MAX_RESAMPLES) -> ConstructionOut:
        logger.info(f"Constructing code with {method} on graph n={graph.n}, seed={seed}")
        try:
            if method == "lll":
                result = randomized.lll_construct(graph, seed, max_resamples=max_resamples,
                                                  max_restarts=max_restarts)
            elif method == "girth5":
                result = randomized.girth5_construct(graph, seed, mode)
            elif method == "rrg":
                result = randomized.rrg_construct(graph, seed)
            else:
                raise DomainViolationError(f"unknown construction method {method!r}")
        except Exception:
            CONSTRUCTOR_RUNS.labels(method=method, outcome="error").inc()
            raise

        valid = is_identifying_code(graph, result.code).valid
        CONSTRUCTOR_RUNS.labels(method=method, outcome="target_met" if result.met_size_target else "valid").inc()
        return construction_to_model(result, graph.n, valid)

    def extremal(self, family: ExtremalFamily, host: Optional[MultiGraph] = None, two_k: Optional[int] = None,
                 d: Optional[int] = None, k: Optional[int] = None) -> Tuple[ExtremalInstance, ExtremalSidecarOut]:
        logger.info(f"Building extremal family {family.value}")
        if family in (ExtremalFamily.C1, ExtremalFamily.C2):
            if host is None:
                raise DomainViolationError(f"family {family.value} needs a host multigraph")
            build = extremal.construct_c1 if family == ExtremalFamily.C1 else extremal.construct_c2
            instance = build(host)
        elif family == ExtremalFamily.C3:
            if two_k is None or d is None:
                raise DomainViolationError("family c3 needs two_k and d")
            instance = extremal.construct_c3(two_k, d)
        else:
            if k is None:
                raise DomainViolationError("family ak needs k")
            instance = extremal.construct_ak_universal(k)
        return instance, instance_to_sidecar(instance)

    def sample_statistics(self, n: int, d: int, seed: Optional[int], trials: int,
                          accepted_target: Optional[int] = None,
                          keep_samples: int = 0) -> Tuple[SampleStatsOut, List[Graph]]:
        """Статистика и первые keep_samples принятых графов, вошедших в неё"""
        started = datetime.now(timezone.utc)
        stats = config_model.cycle_statistics(n, d, seed, trials, accepted_target=accepted_target,
                                              keep_samples=keep_samples)
        model = stats_to_model(stats, seed)
        model.timing = Timing(timestamp=started,
                              elapsed_seconds=(datetime.now(timezone.utc) - started).total_seconds())
        return model, stats.samples
