"""Именованные графы: complete:k, cycle:k, path:k, hypercube:k, bipartite:d, petersen"""

from typing import Callable, Dict, Optional

import networkx as nx

from src.core.exceptions import GraphFormatError
from src.domain.graph import Graph, MultiGraph

_FAMILIES: Dict[str, Callable[[int], nx.Graph]] = {
    "complete": nx.complete_graph,
    "cycle": nx.cycle_graph,
    "path": nx.path_graph,
    "hypercube": nx.hypercube_graph,
    "bipartite": lambda d: nx.complete_bipartite_graph(d, d),
}

_FIXED: Dict[str, Callable[[], nx.Graph]] = {
    "petersen": nx.petersen_graph,
}


def is_named_graph(spec: str) -> bool:
    name = spec.split(":", 1)[0]
    return name in _FAMILIES or name in _FIXED


def _parse(spec: str) -> nx.Graph:
    name, _, raw = spec.partition(":")
    if name in _FIXED:
        if raw:
            raise GraphFormatError(f"named graph {name!r} takes no parameter")
        return _FIXED[name]()
    if name not in _FAMILIES:
        known = ", ".join(sorted([*_FAMILIES, *_FIXED]))
        raise GraphFormatError(f"unknown named graph {spec!r}; known: {known}")
    try:
        size = int(raw)
    except ValueError:
        raise GraphFormatError(f"named graph {spec!r} needs an integer parameter, e.g. {name}:4")
    if size < 1:
        raise GraphFormatError(f"named graph parameter must be positive, got {size}")
    return _FAMILIES[name](size)


def named_graph(spec: str, *, allow_isolated: Optional[bool] = None) -> Graph:
    """Строит Graph по имени; вершины нумеруются в порядке сортировки меток"""
    g = _parse(spec)
    if allow_isolated is None:
        allow_isolated = g.number_of_nodes() == 1
    return Graph.from_networkx(g, allow_isolated=allow_isolated)


def named_multigraph(spec: str) -> MultiGraph:
    """Хост-мультиграф для экстремальных конструкций"""
    return MultiGraph.from_graph(named_graph(spec))
