import argparse
import os
import sys
from typing import List, Optional

from src.core.exceptions import AppValidationError
from src.core.logger import get_logger
from src.dependencies import get_code_service, get_experiment_service, get_report_repository
from src.domain.corpus import CORPUS_MAX_ORDER, corpus_enumerate
from src.domain.exceptions import BudgetExceededError
from src.domain.generators import is_named_graph, named_graph, named_multigraph
from src.domain.graph import Graph, MultiGraph, VertexSet
from src.models.reports import BoundsReportOut, CorpusSummaryOut, ExperimentReport, ExtremalFamily
from src.repositories.report_repository import ReportRepository, render_report

logger = get_logger(__name__)

MAX_SEED = 2 ** 64 - 1


# --- типы аргументов ---------------------------------------------------------

def seed_type(raw: str) -> int:
    """Беззнаковое 64-битное целое"""
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {raw!r}")
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError(f"seed must lie in [0, 2^64 - 1], got {value}")
    return value


def int_list_type(raw: str) -> List[int]:
    """Список через запятую: "0,2,5" """
    if not raw.strip():
        return []
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {raw!r}")


def positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


# --- вспомогательные ---------------------------------------------------------

async def resolve_graph(spec: str, repo: ReportRepository, allow_isolated: bool = False) -> Graph:
    """Путь к файлу списка рёбер или именованный граф (complete:4, petersen, ...)"""
    if is_named_graph(spec) and not os.path.exists(spec):
        return named_graph(spec, allow_isolated=allow_isolated or None)
    return await repo.load_graph(spec, allow_isolated=allow_isolated)


async def resolve_multigraph(spec: str, repo: ReportRepository) -> MultiGraph:
    if is_named_graph(spec) and not os.path.exists(spec):
        return named_multigraph(spec)
    return await repo.load_multigraph(spec)


async def emit(report, repo: ReportRepository, out: Optional[str]) -> None:
    """Отчёт в файл (атомарно) или в stdout"""
    if out:
        await repo.save_report(out, report)
    else:
        sys.stdout.write(render_report(report))
        sys.stdout.flush()


def _code_from_args(graph: Graph, vertices: List[int]) -> VertexSet:
    try:
        return VertexSet.from_iterable(graph.n, vertices)
    except Exception as e:
        raise AppValidationError(f"invalid --code: {e}")


# --- обработчики команд ------------------------------------------------------

async def handle_verify(args: argparse.Namespace) -> int:
    """Проверка кода; невалидный код - код выхода 1"""
    repo = get_report_repository()
    graph = await resolve_graph(args.graph, repo, args.allow_isolated)
    certificate = get_code_service().verify(graph, _code_from_args(graph, args.code))
    await emit(certificate, repo, args.out)
    return 0 if certificate.valid else 1


async def handle_solve(args: argparse.Namespace) -> int:
    repo = get_report_repository()
    graph = await resolve_graph(args.graph, repo)
    try:
        result = get_code_service().solve(graph, args.method, args.budget)
    except BudgetExceededError as e:
        if e.incumbent is not None:
            await emit(e.incumbent, repo, args.out)  # лучшее решение с optimal=false
        raise
    await emit(result, repo, args.out)
    return 0


async def handle_bounds(args: argparse.Namespace) -> int:
    repo = get_report_repository()
    graph = await resolve_graph(args.graph, repo) if args.graph else None
    if graph is None and (args.n is None or args.d is None):
        raise AppValidationError("bounds needs --graph or both --n and --d")
    report: BoundsReportOut = get_code_service().bounds(graph=graph, n=args.n, d=args.d, f_ratio=args.f,
                                                        delta=args.delta, clique_bound=args.clique_bound)
    if args.csv:
        await repo.save_table(args.csv, ["name", "value", "kind", "asymptotic", "formula"],
                              [[r.name, r.value, r.kind, r.asymptotic, r.formula] for r in report.rows])
    await emit(report, repo, args.out)
    return 0


async def handle_construct(args: argparse.Namespace) -> int:
    repo = get_report_repository()
    graph = await resolve_graph(args.graph, repo)
    result = get_code_service().construct(graph, args.method, args.seed, args.mode,
                                          max_restarts=args.max_restarts, max_resamples=args.max_resamples)
    await emit(result, repo, args.out)
    return 0 if result.valid else 1


async def handle_extremal(args: argparse.Namespace) -> int:
    """Граф семейства в список рёбер (--out) и JSON-компаньон (--out + .json или stdout)"""
    repo = get_report_repository()
    family = ExtremalFamily(args.family)
    host = None
    if family in (ExtremalFamily.C1, ExtremalFamily.C2):
        if not args.h:
            raise AppValidationError(f"--family {family.value} needs --h (host multigraph)")
        host = await resolve_multigraph(args.h, repo)
    instance, sidecar = get_code_service().extremal(family, host=host, two_k=args.two_k, d=args.d, k=args.k)
    if args.out:
        await repo.save_graph(args.out, instance.graph,
                              comment=f"{instance.family} claimed_gamma={instance.claimed_gamma}")
        await repo.save_report(f"{args.out}.json", sidecar)
    else:
        await emit(sidecar, repo, None)
    return 0


async def handle_rrg(args: argparse.Namespace) -> int:
    repo = get_report_repository()
    stats, samples = get_code_service().sample_statistics(args.n, args.d, args.seed, args.trials,
                                                          accepted_target=args.accepted_target,
                                                          keep_samples=args.save_samples)
    directory = args.samples_dir or "."
    for i, graph in enumerate(samples):  # те же графы, что вошли в статистику
        await repo.save_graph(os.path.join(directory, f"rrg_n{args.n}_d{args.d}_{i:04d}.el"), graph,
                              comment=f"configuration model n={args.n} d={args.d} seed={args.seed} sample={i}")
    await emit(stats, repo, args.out)
    return 0


async def _emit_experiment(report: ExperimentReport, repo: ReportRepository, args: argparse.Namespace) -> int:
    if args.csv:
        await repo.save_table(args.csv, ["trial", "n", "d", "size", "ratio", "valid", "optimal"],
                              [[r.trial, r.n, r.d, r.size, r.ratio, r.valid, r.optimal] for r in report.records])
    await emit(report, repo, args.out)
    return 0


async def handle_experiment_table1(args: argparse.Namespace) -> int:
    repo = get_report_repository()
    if len(args.n) != 1:
        raise AppValidationError("experiment table1 takes a single --n")
    report = await get_experiment_service().table1(args.n[0], args.d, args.trials, args.seed, args.method)
    return await _emit_experiment(report, repo, args)


async def handle_experiment_domination(args: argparse.Namespace) -> int:
    repo = get_report_repository()
    if not args.n:
        raise AppValidationError("experiment domination needs at least one --n")
    report = await get_experiment_service().domination(args.n, args.d, args.trials, args.seed, args.budget)
    return await _emit_experiment(report, repo, args)


async def handle_corpus(args: argparse.Namespace) -> int:
    repo = get_report_repository()
    counts, twin_free = {}, {}
    for index, entry in enumerate(corpus_enumerate(args.max_n)):
        key = str(entry.graph.n)
        counts[key] = counts.get(key, 0) + 1
        twin_free[key] = twin_free.get(key, 0) + int(entry.twin_free)
        if args.out_dir:
            await repo.save_graph(os.path.join(args.out_dir, f"n{key}_{counts[key]:04d}.el"), entry.graph,
                                  comment=f"twin_free={str(entry.twin_free).lower()}")
    summary = CorpusSummaryOut(max_n=args.max_n, counts=counts, twin_free_counts=twin_free,
                               total=sum(counts.values()))
    await emit(summary, repo, args.out)
    return 0


# --- парсер ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    """Все подкоманды; обработчик и имя команды кладутся в defaults"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--metrics-out", help="write Prometheus textfile metrics to this path")
    common.add_argument("--log-level", help="override LOG_LEVEL")
    common.add_argument("--out", help="write the JSON result to this path instead of stdout")

    parser = argparse.ArgumentParser(prog="idcode", description="Identifying codes in graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="check an identifying code")
    verify.add_argument("--graph", required=True, help="edge-list file or named graph")
    verify.add_argument("--code", required=True, type=int_list_type, help="comma-separated vertices")
    verify.add_argument("--allow-isolated", action="store_true")
    verify.set_defaults(handler=handle_verify, command_name="verify")

    solve = sub.add_parser("solve", parents=[common], help="minimum identifying code")
    solve.add_argument("--graph", required=True)
    methods = solve.add_mutually_exclusive_group()
    methods.add_argument("--exact", dest="method", action="store_const", const="exact")
    methods.add_argument("--greedy", dest="method", action="store_const", const="greedy")
    methods.add_argument("--naive", dest="method", action="store_const", const="naive")
    methods.add_argument("--domination", dest="method", action="store_const", const="domination")
    solve.add_argument("--budget", type=float, help="time budget in seconds")
    solve.set_defaults(handler=handle_solve, command_name="solve", method="exact")

    bounds = sub.add_parser("bounds", parents=[common], help="lower bounds and reference formulas")
    bounds.add_argument("--graph")
    bounds.add_argument("--n", type=positive_int)
    bounds.add_argument("--d", type=positive_int)
    bounds.add_argument("--f", type=float, help="fraction of non-forced vertices")
    bounds.add_argument("--delta", type=positive_int, help="minimum degree for the girth-5 rows")
    bounds.add_argument("--clique-bound", type=positive_int, help="k for K_k-free graphs")
    bounds.add_argument("--csv")
    bounds.set_defaults(handler=handle_bounds, command_name="bounds")

    construct = sub.add_parser("construct", parents=[common], help="randomized code construction")
    construct.add_argument("--graph", required=True)
    construct.add_argument("--method", choices=["lll", "girth5", "rrg"], required=True)
    construct.add_argument("--seed", type=seed_type, default=0)
    construct.add_argument("--mode", choices=["case1", "case2"], default="case1")
    construct.add_argument("--max-restarts", type=positive_int, default=100)
    construct.add_argument("--max-resamples", type=positive_int, default=10_000)
    construct.set_defaults(handler=handle_construct, command_name="construct")

    extremal = sub.add_parser("extremal", parents=[common], help="extremal family with known optimum")
    extremal.add_argument("--family", choices=[f.value for f in ExtremalFamily], required=True)
    extremal.add_argument("--h", help="host multigraph for c1/c2 (file or named graph)")
    extremal.add_argument("--two-k", type=positive_int)
    extremal.add_argument("--d", type=positive_int)
    extremal.add_argument("--k", type=positive_int)
    extremal.set_defaults(handler=handle_extremal, command_name="extremal")

    rrg = sub.add_parser("rrg", parents=[common], help="configuration-model cycle statistics")
    rrg.add_argument("--n", type=positive_int, required=True)
    rrg.add_argument("--d", type=positive_int, required=True)
    rrg.add_argument("--trials", type=positive_int, default=100)
    rrg.add_argument("--accepted-target", type=positive_int)
    rrg.add_argument("--seed", type=seed_type, default=0)
    rrg.add_argument("--save-samples", type=int, default=0, help="write the first N accepted samples")
    rrg.add_argument("--samples-dir")
    rrg.set_defaults(handler=handle_rrg, command_name="rrg")

    experiment = sub.add_parser("experiment", help="experiment harness")
    experiments = experiment.add_subparsers(dest="experiment", required=True)

    table1 = experiments.add_parser("table1", parents=[common], help="code sizes on random regular graphs")
    table1.add_argument("--n", type=int_list_type, required=True)
    table1.add_argument("--d", type=positive_int, required=True)
    table1.add_argument("--trials", type=positive_int, default=5)
    table1.add_argument("--seed", type=seed_type, default=0)
    table1.add_argument("--method", choices=["rrg", "lll", "greedy"], default="rrg")
    table1.add_argument("--csv")
    table1.set_defaults(handler=handle_experiment_table1, command_name="experiment table1")

    domination = experiments.add_parser("domination", parents=[common], help="exact domination number")
    domination.add_argument("--n", type=int_list_type, required=True)
    domination.add_argument("--d", type=positive_int, default=3)
    domination.add_argument("--trials", type=positive_int, default=3)
    domination.add_argument("--seed", type=seed_type, default=0)
    domination.add_argument("--budget", type=float)
    domination.add_argument("--csv")
    domination.set_defaults(handler=handle_experiment_domination, command_name="experiment domination")

    corpus = sub.add_parser("corpus", parents=[common], help="connected graphs up to isomorphism")
    corpus.add_argument("--max-n", type=positive_int, default=7, help=f"at most {CORPUS_MAX_ORDER}")
    corpus.add_argument("--out-dir")
    corpus.set_defaults(handler=handle_corpus, command_name="corpus")

    return parser
