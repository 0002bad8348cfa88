"""
Экстремальные семейства графов с известным минимальным идентифицирующим кодом.

C1(H), C2(H): каждая вершина v регулярного мультиграфа H заменяется кликой K(v);
ребро H соединяет по одному "порту" двух клик. C3(2k, d) - цикл из копий K_{d-1,d-1}.
A_k + универсальная вершина показывает точность оценки доли вынужденных вершин.
"""

from typing import Dict, List, Tuple

import networkx as nx

from src.core.logger import get_logger
from src.domain.entities import ExtremalInstance
from src.domain.exceptions import DomainViolationError, InvalidGraphError
from src.domain.graph import Edge, Graph, MultiGraph, VertexSet

logger = get_logger(__name__)


def _regular_loopless_degree(h: MultiGraph, min_degree: int) -> int:
    if h.loop_count:
        raise InvalidGraphError(f"host multigraph has {h.loop_count} loops")
    d_h = h.regular_degree()
    if d_h is None:
        raise InvalidGraphError(f"host multigraph is not regular (degrees {sorted(set(h.degrees))})")
    if d_h < min_degree:
        raise DomainViolationError(f"host degree must be at least {min_degree}, got {d_h}")
    return d_h


def _clique_blowup(h: MultiGraph, clique_size: int, first_port: int) -> Tuple[List[Edge], Dict[int, int]]:
    """
    Клики K(v) = {v*size + i}; порты раздаются по рёбрам H в порядке ввода,
    каждый раз берётся наименьший свободный номер начиная с first_port.
    """
    edges: List[Edge] = []
    for v in range(h.n):
        base = v * clique_size
        for i in range(clique_size):
            for j in range(i + 1, clique_size):
                edges.append((base + i, base + j))

    next_port = [first_port] * h.n
    port_map: Dict[int, int] = {}
    for a, b in h.edges:
        pa = a * clique_size + next_port[a]
        next_port[a] += 1
        pb = b * clique_size + next_port[b]
        next_port[b] += 1
        edges.append((pa, pb))
        port_map[pa] = pb
        port_map[pb] = pa
    return edges, port_map


def construct_c1(h: MultiGraph) -> ExtremalInstance:
    """Клики размера d_H + 1, вершина k_0(v) каждой клики без внешнего соседа"""
    d_h = _regular_loopless_degree(h, 2)
    size = d_h + 1
    edges, port_map = _clique_blowup(h, size, first_port=1)
    graph = Graph(h.n * size, edges)

    # вынужденные вершины - ровно все порты; они и образуют оптимальный код
    code = VertexSet.from_iterable(graph.n, port_map.keys())
    instance = ExtremalInstance(family="C1", graph=graph, optimal_code=code, claimed_gamma=h.n * d_h,
                                parameters={"n_h": h.n, "d_h": d_h}, port_map=port_map)
    logger.info(f"Built C1: n={graph.n}, d={graph.max_degree}, claimed gamma {instance.claimed_gamma}")
    return instance


def _matching_permutation(h: MultiGraph) -> Dict[int, int]:
    """σ с σ(v) ∈ N_H(v): совершенное паросочетание двудольного двойного покрытия H"""
    cover = nx.Graph()
    left = [("L", v) for v in range(h.n)]
    cover.add_nodes_from(left, bipartite=0)
    cover.add_nodes_from((("R", v) for v in range(h.n)), bipartite=1)
    for a, b in h.edges:
        cover.add_edge(("L", a), ("R", b))
        cover.add_edge(("L", b), ("R", a))
    matching = nx.bipartite.hopcroft_karp_matching(cover, top_nodes=left)
    sigma = {v: matching[("L", v)][1] for v in range(h.n) if ("L", v) in matching}
    if len(sigma) != h.n:
        raise InvalidGraphError("host multigraph has no perfect matching in its double cover")
    return sigma


def construct_c2(h: MultiGraph) -> ExtremalInstance:
    """
    Клики размера d_H, все вершины - порты; вынужденных вершин нет.
    Код: f(k) для всех портов k, кроме одного на клику - порта K(v),
    ведущего в K(σ(v)). Тогда в каждой клике остаётся d-1 вершина кода.
    """
    d_h = _regular_loopless_degree(h, 3)
    size = d_h
    edges, port_map = _clique_blowup(h, size, first_port=0)
    graph = Graph(h.n * size, edges)

    sigma = _matching_permutation(h)
    excluded = set()
    for v in range(h.n):
        target = sigma[v]
        port = next(p for p in range(v * size, (v + 1) * size) if port_map[p] // size == target)
        excluded.add(port)
    code = VertexSet.from_iterable(graph.n, (port_map[p] for p in port_map if p not in excluded))

    instance = ExtremalInstance(family="C2", graph=graph, optimal_code=code, claimed_gamma=h.n * (d_h - 1),
                                parameters={"n_h": h.n, "d_h": d_h}, port_map=port_map)
    logger.info(f"Built C2: n={graph.n}, d={graph.max_degree}, claimed gamma {instance.claimed_gamma}")
    return instance


def construct_c3(two_k: int, d: int) -> ExtremalInstance:
    """
    Вершины c_0..c_{2k-1}; паросочетание c_i c_{i+1} для нечётных i; для
    чётного i копия K_{d-1,d-1}, одна доля смежна с c_i, другая - с c_{i+1}.
    """
    if two_k < 4 or two_k % 2:
        raise DomainViolationError(f"two_k must be an even integer >= 4, got {two_k}")
    if d < 3:
        raise DomainViolationError(f"d must be at least 3, got {d}")
    k = two_k // 2
    side = d - 1
    edges: List[Edge] = []
    code: List[int] = []

    for i in range(1, two_k, 2):
        edges.append((i, (i + 1) % two_k))

    for j, i in enumerate(range(0, two_k, 2)):
        base = two_k + j * 2 * side
        part_a = list(range(base, base + side))
        part_b = list(range(base + side, base + 2 * side))
        edges.extend((a, b) for a in part_a for b in part_b)
        edges.extend((i, a) for a in part_a)
        edges.extend((i + 1, b) for b in part_b)
        code.append(i)
        code.extend(part_a[:d - 2])
        code.extend(part_b[:d - 2])

    graph = Graph(two_k * d, edges)
    instance = ExtremalInstance(family="C3", graph=graph, optimal_code=VertexSet.from_iterable(graph.n, code),
                                claimed_gamma=k + two_k * (d - 2), parameters={"two_k": two_k, "d": d})
    logger.info(f"Built C3: n={graph.n}, claimed gamma {instance.claimed_gamma}")
    return instance


def construct_ak_universal(k: int) -> ExtremalInstance:
    """A_k (x_i x_j при |i-j| <= k-1) на 2k вершинах плюс универсальная вершина 2k"""
    if k < 2:
        raise DomainViolationError(f"k must be at least 2, got {k}")
    size = 2 * k
    edges = [(i, j) for i in range(size) for j in range(i + 1, size) if j - i <= k - 1]
    edges.extend((i, size) for i in range(size))
    graph = Graph(size + 1, edges)
    instance = ExtremalInstance(family="AkUniversal", graph=graph,
                                optimal_code=VertexSet.from_iterable(graph.n, range(size)),
                                claimed_gamma=size, parameters={"k": k})
    logger.info(f"Built A_{k} + universal vertex: n={graph.n}")
    return instance
