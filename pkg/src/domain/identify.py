"""
Проверка идентифицирующих кодов, вынужденные вершины и вспомогательный
орграф H(G) (подграф диаграммы Хассе замкнутых окрестностей).
"""

from collections import Counter
from typing import Iterable, List, Optional, Set, Tuple

import networkx as nx

from src.core import config
from src.core.logger import get_logger
from src.domain.entities import CheckResult, CodeCertificate, ForcedReport, Violation, ViolationKind
from src.domain.exceptions import DomainViolationError, InvalidVertexError, TwinsPresentError
from src.domain.graph import Graph, VertexSet, find_twins, iter_bits

logger = get_logger(__name__)


def _cap(witness_cap: Optional[int]) -> int:
    return config.IDCODE_WITNESS_CAP if witness_cap is None else witness_cap


def ensure_twin_free(g: Graph) -> None:
    """Бросает TwinsPresentError, если в графе есть близнецы"""
    twins = find_twins(g)
    if twins:
        raise TwinsPresentError(f"graph has {len(twins)} twin pairs, e.g. {twins[0]}", twins=twins)


def _undominated(g: Graph, code_mask: int) -> List[int]:
    return [v for v in range(g.n) if not g.closed_mask(v) & code_mask]


def is_dominating(g: Graph, code: VertexSet, witness_cap: Optional[int] = None) -> CheckResult:
    """Каждая вершина имеет N[v] ∩ C ≠ ∅; свидетели - недоминируемые вершины"""
    missing = _undominated(g, code.mask)
    return CheckResult(ok=not missing, witnesses=missing[:_cap(witness_cap)])


def is_two_dominating(g: Graph, d_set: VertexSet, witness_cap: Optional[int] = None) -> CheckResult:
    """Каждая вершина вне D имеет не меньше двух соседей в D"""
    mask = d_set.mask
    missing = [v for v in range(g.n) if not mask >> v & 1 and g.induced_degree(v, mask) < 2]
    return CheckResult(ok=not missing, witnesses=missing[:_cap(witness_cap)])


def _unseparated_pairs(g: Graph, code_mask: int, limit: int) -> Tuple[List[Tuple[int, int]], bool]:
    """
    Пары с одинаковым следом N[·] ∩ C. Пары на расстоянии >= 3 могут совпасть
    только если оба следа пусты, поэтому остальные пары дальше двух не проверяются.
    """
    pairs: List[Tuple[int, int]] = []
    overflow = False
    for u, v in g.pairs_within_two:
        if not (g.closed_mask(u) ^ g.closed_mask(v)) & code_mask:
            if len(pairs) < limit:
                pairs.append((u, v))
            else:
                overflow = True
                break

    if not overflow:
        empty = _undominated(g, code_mask)
        for i, u in enumerate(empty):
            for v in empty[i + 1:]:
                if g.ball2_masks[u] >> v & 1:
                    continue  # уже учтена выше
                if len(pairs) < limit:
                    pairs.append((u, v))
                else:
                    overflow = True
                    break
            if overflow:
                break
    return sorted(pairs), overflow


def is_separating(g: Graph, code: VertexSet, witness_cap: Optional[int] = None) -> CheckResult:
    """Все вершины имеют попарно различные следы N[v] ∩ C"""
    limit = max(1, _cap(witness_cap))
    pairs, _ = _unseparated_pairs(g, code.mask, limit)
    return CheckResult(ok=not pairs, witnesses=pairs)


def is_separating_naive(g: Graph, code: VertexSet) -> bool:
    """Проверка разделения перебором всех пар (эталон для тестов)"""
    traces: Set[int] = set()
    for v in range(g.n):
        trace = g.closed_mask(v) & code.mask
        if trace in traces:
            return False
        traces.add(trace)
    return True


def is_identifying_code(g: Graph, code: VertexSet, witness_cap: Optional[int] = None) -> CodeCertificate:
    """Код идентифицирующий, если он доминирующий и разделяющий"""
    limit = max(1, _cap(witness_cap))
    violations: List[Violation] = []
    truncated = False

    twin_pairs = set(find_twins(g))
    for u, v in sorted(twin_pairs):
        if len(violations) >= limit:
            truncated = True
            break
        violations.append(Violation(ViolationKind.TWINS, (u, v)))

    if not truncated:
        for v in _undominated(g, code.mask):
            if len(violations) >= limit:
                truncated = True
                break
            violations.append(Violation(ViolationKind.UNDOMINATED, (v,)))

    if not truncated:
        room = limit - len(violations) + len(twin_pairs)
        pairs, overflow = _unseparated_pairs(g, code.mask, room)
        for pair in pairs:
            if pair in twin_pairs:
                continue
            if len(violations) >= limit:
                truncated = True
                break
            violations.append(Violation(ViolationKind.UNSEPARATED, pair))
        truncated = truncated or overflow

    return CodeCertificate(code=code, violations=violations, truncated=truncated)


def forced_vertices(g: Graph) -> ForcedReport:
    """
    Вынужденные вершины: w с N[u] Δ N[v] = {w}. Такие u, v обязательно смежны
    (иначе в разность попадают сами u и v), поэтому просматриваются только рёбра.
    """
    if g.n == 0:
        raise DomainViolationError("forced vertices are undefined for the empty graph")
    ensure_twin_free(g)
    mask = 0
    for u, v in g.edges:
        delta = g.closed_mask(u) ^ g.closed_mask(v)
        if delta.bit_count() == 1:
            mask |= delta
    report = ForcedReport(forced=VertexSet(g.n, mask), n=g.n)
    logger.debug(f"Forced vertices: {len(report.forced)} of {g.n}")
    return report


class HasseDigraph:
    """
    Орграф H(G): дуга u -> v с меткой x, если N[v] = N[u] ∪ {x}.
    Хранится как networkx.DiGraph, метка дуги - атрибут "label".
    """

    def __init__(self, n: int, arcs: Iterable[Tuple[int, int, int]]):
        self.n = n
        self.digraph = nx.DiGraph()
        self.digraph.add_nodes_from(range(n))
        for u, v, x in arcs:
            self.digraph.add_edge(u, v, label=x)

    @property
    def arcs(self) -> List[Tuple[int, int, int]]:
        return sorted((u, v, data["label"]) for u, v, data in self.digraph.edges(data=True))

    def labels(self) -> Set[int]:
        return {data["label"] for _, _, data in self.digraph.edges(data=True)}

    def in_degree(self, v: int) -> int:
        return self.digraph.in_degree(v)

    def out_degree(self, v: int) -> int:
        return self.digraph.out_degree(v)

    def predecessors(self, v: int) -> List[int]:
        return sorted(self.digraph.predecessors(v))

    def successors(self, v: int) -> List[int]:
        return sorted(self.digraph.successors(v))

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.digraph)

    def __len__(self) -> int:
        return self.digraph.number_of_edges()


def hasse_digraph(g: Graph) -> HasseDigraph:
    """Строит H(G); как и для вынужденных вершин, достаточно просмотреть рёбра"""
    ensure_twin_free(g)
    arcs = []
    for u, v in g.edges:
        cu, cv = g.closed_mask(u), g.closed_mask(v)
        delta = cu ^ cv
        if delta.bit_count() != 1:
            continue
        x = delta.bit_length() - 1
        if cv >> x & 1:
            arcs.append((u, v, x))  # N[v] = N[u] ∪ {x}
        else:
            arcs.append((v, u, x))
    return HasseDigraph(g.n, arcs)


def forced_closure(h: HasseDigraph, v: int) -> VertexSet:
    """F(v): сама v, все её предки и все потомки в H(G)"""
    if not 0 <= v < h.n:
        raise InvalidVertexError(f"vertex {v} out of range 0..{h.n - 1}")
    members = {v} | nx.ancestors(h.digraph, v) | nx.descendants(h.digraph, v)
    return VertexSet.from_iterable(h.n, members)


def violated_constraints(g: Graph, code_mask: int) -> List[int]:
    """Маски ограничений N[u] и N[u] Δ N[v] (пары на расстоянии <= 2), не задетые кодом"""
    open_constraints = [g.closed_mask(u) for u in range(g.n) if not g.closed_mask(u) & code_mask]
    for u, v in g.pairs_within_two:
        delta = g.closed_mask(u) ^ g.closed_mask(v)
        if not delta & code_mask:
            open_constraints.append(delta)
    return open_constraints


def greedy_hitting(n: int, constraints: List[int], start_mask: int = 0) -> int:
    """
    Жадное покрытие: пока есть незадетые ограничения, добавляем вершину,
    задевающую больше всего (при равенстве - с меньшим номером).
    """
    mask = start_mask
    remaining = [c for c in constraints if not c & mask]
    while remaining:
        hits: Counter = Counter()
        for c in remaining:
            hits.update(iter_bits(c))
        best = max(hits.items(), key=lambda item: (item[1], -item[0]))[0]
        mask |= 1 << best
        bit = 1 << best
        remaining = [c for c in remaining if not c & bit]
    return mask


def greedy_repair(g: Graph, code: VertexSet) -> VertexSet:
    """Дополняет C до идентифицирующего кода; корректный код возвращается без изменений"""
    ensure_twin_free(g)
    constraints = violated_constraints(g, code.mask)
    if not constraints:
        return code
    repaired = VertexSet(g.n, greedy_hitting(g.n, constraints, code.mask))
    logger.debug(f"Greedy repair added {len(repaired) - len(code)} vertices "
                 f"for {len(constraints)} open constraints")
    return repaired
