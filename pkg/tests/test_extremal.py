import pytest

from src.domain.exceptions import DomainViolationError, InvalidGraphError
from src.domain.extremal import construct_ak_universal, construct_c1, construct_c2, construct_c3
from src.domain.generators import named_multigraph
from src.domain.graph import MultiGraph, count_short_cycles, girth
from src.domain.identify import forced_vertices, is_identifying_code


@pytest.mark.parametrize("host, n, d, gamma", [
    ("hypercube:3", 32, 4, 24),
    ("complete:4", 16, 4, 12),
])
def test_construct_c1(host, n, d, gamma):
    """Тест C1: параметры и корректность заявленного кода"""
    # Act
    instance = construct_c1(named_multigraph(host))

    # Assert
    assert instance.graph.n == n
    assert instance.graph.max_degree == d and instance.graph.is_regular()
    assert instance.claimed_gamma == gamma
    assert len(instance.optimal_code) == gamma
    assert is_identifying_code(instance.graph, instance.optimal_code).valid
    assert instance.optimal_code == forced_vertices(instance.graph).forced


@pytest.mark.parametrize("host, n, d, gamma", [
    ("complete:5", 20, 4, 15),
    ("complete:4", 12, 3, 8),
])
def test_construct_c2(host, n, d, gamma):
    instance = construct_c2(named_multigraph(host))

    assert (instance.graph.n, instance.graph.max_degree, instance.claimed_gamma) == (n, d, gamma)
    assert len(instance.optimal_code) == gamma
    assert is_identifying_code(instance.graph, instance.optimal_code).valid
    assert len(forced_vertices(instance.graph).forced) == 0


def test_construct_c2_accepts_parallel_edges():
    """Хост с кратными рёбрами: 3-регулярный мультиграф на двух парах вершин"""
    host = MultiGraph(4, [(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)])
    instance = construct_c2(host)

    assert instance.graph.n == 12
    assert is_identifying_code(instance.graph, instance.optimal_code).valid


def test_port_map_is_an_involution(c1_q3):
    for port, partner in c1_q3.port_map.items():
        assert c1_q3.port_map[partner] == port
        assert c1_q3.graph.has_edge(port, partner)


def test_extremal_host_errors():
    with pytest.raises(InvalidGraphError):
        construct_c1(named_multigraph("path:3"))
    with pytest.raises(InvalidGraphError):
        construct_c1(MultiGraph(2, [(0, 0), (1, 1)], allow_loops=True))
    with pytest.raises(DomainViolationError):
        construct_c2(named_multigraph("cycle:5"))


@pytest.mark.parametrize("two_k, d, n, gamma", [(8, 3, 24, 12), (4, 3, 12, 6), (6, 4, 24, 15)])
def test_construct_c3(two_k, d, n, gamma):
    instance = construct_c3(two_k, d)

    assert instance.graph.n == n
    assert instance.graph.is_regular() and instance.graph.max_degree == d
    assert instance.claimed_gamma == gamma == len(instance.optimal_code)
    assert is_identifying_code(instance.graph, instance.optimal_code).valid


@pytest.mark.parametrize("two_k, d", [(4, 3), (8, 3), (6, 4), (10, 5)])
def test_construct_c3_is_triangle_free(two_k, d):
    """Треугольников нет, кратчайшие циклы - 4-циклы внутри K_{d-1,d-1}"""
    g = construct_c3(two_k, d).graph

    assert count_short_cycles(g).x3 == 0
    assert girth(g) >= 4


@pytest.mark.parametrize("two_k, d", [(7, 3), (2, 3), (8, 2)])
def test_construct_c3_errors(two_k, d):
    with pytest.raises(DomainViolationError):
        construct_c3(two_k, d)


def test_construct_ak_universal():
    instance = construct_ak_universal(3)
    report = forced_vertices(instance.graph)

    assert instance.graph.n == 7
    assert instance.graph.max_degree == 6
    assert instance.claimed_gamma == 6
    assert report.forced == instance.optimal_code
    assert report.f_ratio * (instance.graph.max_degree + 1) == 1

    small = construct_ak_universal(2)
    assert (small.graph.n, small.claimed_gamma) == (5, 4)
    assert is_identifying_code(small.graph, small.optimal_code).valid

    with pytest.raises(DomainViolationError):
        construct_ak_universal(1)
