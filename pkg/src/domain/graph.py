"""
Представления графов и алгебра окрестностей.

Вершины - плотные целые 0..n-1. Множества вершин хранятся битовыми масками
(int), поэтому объединение/пересечение/симметрическая разность работают
за время порядка n / размер машинного слова.
"""

import math
from collections import defaultdict
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import networkx as nx

from src.domain.exceptions import InvalidGraphError, InvalidVertexError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Перебирает индексы установленных битов по возрастанию"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class VertexSet:
    """Неизменяемое подмножество вершин {0..n-1}"""

    __slots__ = ("_n", "_mask")

    def __init__(self, n: int, mask: int = 0):
        if mask >> n:
            raise InvalidVertexError(f"mask has vertices outside 0..{n - 1}")
        self._n = n
        self._mask = mask

    @classmethod
    def from_iterable(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise InvalidVertexError(f"vertex {v} out of range 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @property
    def n(self) -> int:
        return self._n

    @property
    def mask(self) -> int:
        return self._mask

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other._n != self._n:
            raise InvalidVertexError(f"vertex sets over different orders: {self._n} vs {other._n}")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self._n, self._mask | other._mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self._n, self._mask & other._mask)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self._n, self._mask ^ other._mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self._n, self._mask & ~other._mask)

    union = __or__
    intersection = __and__
    symmetric_difference = __xor__
    difference = __sub__

    def complement(self) -> "VertexSet":
        return VertexSet(self._n, ((1 << self._n) - 1) & ~self._mask)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self._mask & ~other._mask == 0

    def with_vertex(self, v: int) -> "VertexSet":
        return VertexSet(self._n, self._mask | (1 << v))

    def without_vertex(self, v: int) -> "VertexSet":
        return VertexSet(self._n, self._mask & ~(1 << v))

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self._n and bool(self._mask >> v & 1)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __bool__(self) -> bool:
        return self._mask != 0

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self._mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self._n == other._n and self._mask == other._mask

    def __hash__(self) -> int:
        return hash((self._n, self._mask))

    def to_list(self) -> List[int]:
        return list(iter_bits(self._mask))

    def __repr__(self) -> str:
        return f"VertexSet(n={self._n}, {self.to_list()})"


class Graph:
    """
    Простой неориентированный граф с предвычисленными замкнутыми окрестностями.

    Неизменяем после построения; все запросы чистые.
    """

    def __init__(self, n: int, edges: Iterable[Edge], *, allow_isolated: bool = False):
        if n < 0:
            raise InvalidGraphError(f"negative vertex count: {n}")
        self._n = n
        open_masks = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidGraphError(f"parallel edge {key}")
            seen.add(key)
            open_masks[u] |= 1 << v
            open_masks[v] |= 1 << u

        if not allow_isolated:
            isolated = [v for v in range(n) if not open_masks[v]]
            if isolated:
                raise InvalidGraphError(f"isolated vertices are not allowed: {isolated[:10]}")

        self._edges: Tuple[Edge, ...] = tuple(sorted(seen))
        self._open: Tuple[int, ...] = tuple(open_masks)
        self._closed: Tuple[int, ...] = tuple(m | (1 << v) for v, m in enumerate(open_masks))
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(iter_bits(m)) for m in open_masks)
        self.allow_isolated = allow_isolated

    # базовые параметры
    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    @cached_property
    def closed_nbhd(self) -> Tuple[VertexSet, ...]:
        return tuple(VertexSet(self._n, m) for m in self._closed)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidVertexError(f"vertex {v} out of range 0..{self._n - 1}")

    def closed_mask(self, v: int) -> int:
        return self._closed[v]

    def open_mask(self, v: int) -> int:
        return self._open[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._open[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adjacency), default=0)

    @cached_property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adjacency), default=0)

    @property
    def average_degree(self) -> float:
        return 2 * self.m / self._n if self._n else 0.0

    def is_regular(self) -> bool:
        return self.max_degree == self.min_degree

    def full_set(self) -> VertexSet:
        return VertexSet.full(self._n)

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.from_iterable(self._n, vertices)

    @cached_property
    def ball2_masks(self) -> Tuple[int, ...]:
        """Маски шаров радиуса 2 вокруг каждой вершины"""
        balls = []
        for v in range(self._n):
            ball = 0
            for w in iter_bits(self._closed[v]):
                ball |= self._closed[w]
            balls.append(ball)
        return tuple(balls)

    @cached_property
    def pairs_within_two(self) -> Tuple[Edge, ...]:
        """Все пары u < v на расстоянии не больше 2"""
        pairs = []
        for u in range(self._n):
            rest = self.ball2_masks[u] >> (u + 1)
            for offset in iter_bits(rest):
                pairs.append((u, u + 1 + offset))
        return tuple(pairs)

    def induced_degree(self, v: int, mask: int) -> int:
        return (self._open[v] & mask).bit_count()

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self._edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph, *, allow_isolated: bool = False) -> "Graph":
        """Строит Graph из networkx-графа; метки вершин переводятся в индексы по порядку сортировки"""
        relabelled = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls(relabelled.number_of_nodes(), relabelled.edges(), allow_isolated=allow_isolated)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


class MultiGraph:
    """
    Мультиграф: кратные рёбра разрешены, петли - только с явным флагом
    (их порождает модель конфигураций; экстремальные конструкции их отвергают).
    """

    def __init__(self, n: int, edges: Iterable[Edge], *, allow_loops: bool = False):
        self._n = n
        normalized = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v and not allow_loops:
                raise InvalidGraphError(f"loop at vertex {u}")
            normalized.append((u, v))
        self._edges: Tuple[Edge, ...] = tuple(normalized)  # порядок ввода сохраняется
        self.allow_loops = allow_loops

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        deg = [0] * self._n
        for u, v in self._edges:
            deg[u] += 1
            deg[v] += 1  # петля даёт вклад 2
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def regular_degree(self) -> Optional[int]:
        """Степень регулярности или None, если мультиграф нерегулярен"""
        if not self._n:
            return None
        first = self.degrees[0]
        return first if all(d == first for d in self.degrees) else None

    @property
    def loop_count(self) -> int:
        return sum(1 for u, v in self._edges if u == v)

    @property
    def parallel_edge_count(self) -> int:
        counts: Dict[Edge, int] = defaultdict(int)
        for u, v in self._edges:
            if u != v:
                counts[(min(u, v), max(u, v))] += 1
        return sum(c - 1 for c in counts.values() if c > 1)

    def is_simple(self) -> bool:
        return self.loop_count == 0 and self.parallel_edge_count == 0

    def to_graph(self, *, allow_isolated: bool = False) -> Graph:
        if not self.is_simple():
            raise InvalidGraphError(
                f"multigraph has {self.loop_count} loops and {self.parallel_edge_count} parallel edges")
        return Graph(self._n, self._edges, allow_isolated=allow_isolated)

    @classmethod
    def from_graph(cls, g: Graph) -> "MultiGraph":
        return cls(g.n, g.edges)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self._n}, m={len(self._edges)})"


class ShortCycleCounts(NamedTuple):
    x3: int
    x4: int


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    """N[v] = {v} ∪ N(v)"""
    g._check_vertex(v)
    return g.closed_nbhd[v]


def nbhd_symmetric_difference(g: Graph, u: int, v: int) -> VertexSet:
    """N[u] Δ N[v] для различных u, v"""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise InvalidVertexError(f"symmetric difference needs distinct vertices, got {u} twice")
    return VertexSet(g.n, g.closed_mask(u) ^ g.closed_mask(v))


def girth(g: Graph) -> Union[int, float]:
    """
    Длина кратчайшего цикла (BFS из каждой вершины); math.inf для леса.
    """
    best = math.inf
    adjacency = g.adjacency
    for source in range(g.n):
        dist = {source: 0}
        parent = {source: -1}
        frontier = [source]
        while frontier:
            # из более глубоких уровней цикл короче best уже не получить
            if 2 * dist[frontier[0]] + 1 >= best:
                break
            next_frontier = []
            for x in frontier:
                for y in adjacency[x]:
                    if y == parent[x]:
                        continue
                    if y in dist:
                        best = min(best, dist[x] + dist[y] + 1)
                    else:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        next_frontier.append(y)
            frontier = next_frontier
        if best == 3:
            break
    return best


def iter_triangles(g: Graph) -> Iterator[Tuple[int, int, int]]:
    """Треугольники (a < b < c), каждый ровно один раз"""
    for a, b in g.edges:
        common = g.open_mask(a) & g.open_mask(b)
        for c in iter_bits(common >> (b + 1)):
            yield a, b, b + 1 + c


def iter_four_cycles(g: Graph) -> Iterator[Tuple[int, int, int, int]]:
    """
    4-циклы как последовательности (u, a, w, b), каждый цикл ровно один раз:
    u - минимальная вершина цикла, w - противоположная ей, a < b.
    """
    for u in range(g.n):
        above_u = ~((1 << (u + 1)) - 1)
        through: Dict[int, List[int]] = defaultdict(list)
        for a in iter_bits(g.open_mask(u) & above_u):
            for w in iter_bits(g.open_mask(a) & above_u):
                through[w].append(a)
        for w in sorted(through):
            middles = through[w]
            for i in range(len(middles)):
                for j in range(i + 1, len(middles)):
                    yield u, middles[i], w, middles[j]


def count_short_cycles(g: Graph) -> ShortCycleCounts:
    """Точное число 3- и 4-циклов (каждый цикл считается один раз)"""
    x3 = sum(1 for _ in iter_triangles(g))
    x4 = sum(1 for _ in iter_four_cycles(g))
    return ShortCycleCounts(x3, x4)


def _pairs_by_key(masks: Sequence[int]) -> List[Edge]:
    groups: Dict[int, List[int]] = defaultdict(list)
    for v, key in enumerate(masks):
        groups[key].append(v)
    pairs = []
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                pairs.append((members[i], members[j]))
    return sorted(pairs)


def find_twins(g: Graph) -> List[Edge]:
    """Пары u < v с N[u] = N[v]"""
    return _pairs_by_key([g.closed_mask(v) for v in range(g.n)])


def find_false_twins(g: Graph) -> List[Edge]:
    """Пары u < v с N(u) = N(v); такие вершины автоматически несмежны"""
    # изолированные вершины имеют одинаковую пустую окрестность, но ложными близнецами их не считаем
    pairs = _pairs_by_key([g.open_mask(v) for v in range(g.n)])
    return [(u, v) for u, v in pairs if g.open_mask(u)]


def is_twin_free(g: Graph) -> bool:
    return len({g.closed_mask(v) for v in range(g.n)}) == g.n


def distance_at_most_two(g: Graph, u: int, v: int) -> bool:
    return bool(g.ball2_masks[u] >> v & 1)
