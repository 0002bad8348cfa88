from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.strategies import composite

from src.domain.bounds import beta_gamma
from src.domain.entities import ViolationKind
from src.domain.exceptions import DomainViolationError, TwinsPresentError
from src.domain.extremal import construct_ak_universal, construct_c2
from src.domain.generators import named_graph, named_multigraph
from src.domain.graph import Graph, VertexSet, count_short_cycles
from src.domain.identify import (forced_closure, forced_vertices, greedy_repair, hasse_digraph, is_dominating,
                                 is_identifying_code, is_separating, is_separating_naive, is_two_dominating)

# корпус n <= 6 в обычном прогоне, n <= 7 под меткой slow
CORPORA = ["twin_free_corpus", pytest.param("twin_free_corpus_7", marks=pytest.mark.slow)]


@composite
def graphs_with_codes(draw, min_nodes=1, max_nodes=8):
    """Случайный граф (изолированные вершины разрешены) и случайное подмножество вершин"""
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if draw(st.booleans())]
    code = [v for v in range(n) if draw(st.booleans())]
    g = Graph(n, edges, allow_isolated=True)
    return g, VertexSet.from_iterable(n, code)


# --- проверка кодов ----------------------------------------------------------

def test_is_dominating(p3):
    assert is_dominating(p3, p3.vertex_set([1])).ok

    result = is_dominating(p3, p3.vertex_set([0]))
    assert not result.ok
    assert result.witnesses == [2]

    assert is_dominating(p3, p3.full_set())


def test_is_two_dominating(c5):
    assert is_two_dominating(c5, c5.vertex_set([0, 1, 2, 3])).ok
    assert is_two_dominating(c5, c5.full_set()).ok

    result = is_two_dominating(c5, c5.vertex_set([0, 2]))
    assert not result.ok
    assert result.witnesses[0] == 3


def test_is_separating(k33, k2):
    assert is_separating(k33, k33.vertex_set([0, 1, 3, 4])).ok

    result = is_separating(k33, k33.vertex_set([0, 3, 4]))
    assert not result.ok
    assert (1, 2) in result.witnesses

    assert not is_separating(k2, k2.full_set()).ok


def test_identifying_code_certificates(k33, p3):
    """Тест вердиктов сертификата на известных кодах"""
    # Act
    valid = is_identifying_code(k33, k33.vertex_set([0, 1, 3, 4]))
    also_valid = is_identifying_code(p3, p3.vertex_set([0, 2]))
    invalid = is_identifying_code(p3, p3.vertex_set([1]))

    # Assert
    assert valid.valid and valid.violations == []
    assert also_valid.valid
    assert not invalid.valid
    assert all(v.kind == ViolationKind.UNSEPARATED for v in invalid.violations)


def test_certificate_reports_twins_first(k2):
    certificate = is_identifying_code(k2, k2.full_set())

    assert not certificate.valid
    assert [v.kind for v in certificate.violations] == [ViolationKind.TWINS]
    assert certificate.violations[0].witnesses == (0, 1)


def test_certificate_orders_undominated_before_unseparated(p3):
    certificate = is_identifying_code(p3, p3.vertex_set([0]))
    kinds = [v.kind for v in certificate.violations]

    assert kinds[0] == ViolationKind.UNDOMINATED
    assert ViolationKind.UNSEPARATED in kinds
    assert kinds.index(ViolationKind.UNSEPARATED) > kinds.index(ViolationKind.UNDOMINATED)


def test_witness_cap_truncates_but_keeps_verdict():
    """Лимит свидетелей обрезает список, но вердикт остаётся точным"""
    # Arrange
    g = named_graph("cycle:10")

    # Act
    certificate = is_identifying_code(g, VertexSet.empty(10), witness_cap=3)

    # Assert
    assert not certificate.valid
    assert len(certificate.violations) == 3
    assert certificate.truncated


@pytest.mark.parametrize("corpus", CORPORA)
def test_full_vertex_set_is_code_on_twin_free_corpus(corpus, request):
    for g in request.getfixturevalue(corpus):
        assert is_identifying_code(g, g.full_set()).valid


@pytest.mark.parametrize("corpus", CORPORA)
def test_distance_two_separation_on_corpus(corpus, request):
    """Разделение без одной или двух вершин: быстрая проверка совпадает с перебором пар"""
    for g in request.getfixturevalue(corpus):
        full = g.full_set()
        for u in range(g.n):
            for v in range(u, g.n):
                code = full.without_vertex(u).without_vertex(v)
                assert is_separating(g, code).ok == is_separating_naive(g, code), f"{g.edges} without {u}, {v}"


@settings(max_examples=200, deadline=None)
@given(graphs_with_codes())
def test_distance_two_separation_matches_all_pairs(case):
    """Оптимизированная проверка разделения совпадает с перебором всех пар"""
    g, code = case
    assert is_separating(g, code).ok == is_separating_naive(g, code)


@settings(max_examples=200, deadline=None)
@given(graphs_with_codes(), st.integers(min_value=0, max_value=7))
def test_supersets_of_codes_stay_valid(case, extra):
    g, code = case
    if not is_identifying_code(g, code).valid:
        return
    bigger = code.with_vertex(extra % g.n)
    assert is_identifying_code(g, bigger).valid


@pytest.mark.parametrize("corpus", CORPORA)
def test_take_out_vertex_on_corpus(corpus, request):
    """Для каждой u найдётся v ∈ N[u], без которой V(G) остаётся кодом"""
    for g in request.getfixturevalue(corpus):
        full = g.full_set()
        for u in range(g.n):
            assert any(is_identifying_code(g, full.without_vertex(v), witness_cap=1).valid
                       for v in g.closed_nbhd[u]), f"{g.edges} fails at {u}"


# --- вынужденные вершины и H(G) ---------------------------------------------

def test_forced_vertices_examples(c1_q3):
    ak = construct_ak_universal(3).graph
    report = forced_vertices(ak)
    assert len(report.forced) == 6
    assert report.f_ratio == Fraction(1, 7)

    c2 = construct_c2(named_multigraph("complete:5")).graph
    report = forced_vertices(c2)
    assert len(report.forced) == 0
    assert report.f_ratio == 1

    assert len(forced_vertices(c1_q3.graph).forced) == 24


def test_forced_vertices_rejects_twins(k2):
    with pytest.raises(TwinsPresentError):
        forced_vertices(k2)


def test_forced_vertices_rejects_empty_graph():
    with pytest.raises(DomainViolationError):
        forced_vertices(Graph(0, []))


def test_hasse_digraph_examples(p3, k33, c1_q3):
    assert hasse_digraph(p3).arcs == [(0, 1, 2), (2, 1, 0)]
    assert len(hasse_digraph(k33)) == 0

    h = hasse_digraph(c1_q3.graph)
    assert len(h) == 24
    for u, _, _ in h.arcs:
        assert u % 4 == 0  # все дуги выходят из k_0(v)


def test_forced_closure(p3, k33, c1_q3):
    h = hasse_digraph(p3)
    assert forced_closure(h, 1).to_list() == [0, 1, 2]
    assert forced_closure(h, 0).to_list() == [0, 1]

    assert forced_closure(hasse_digraph(k33), 2).to_list() == [2]

    closure = forced_closure(hasse_digraph(c1_q3.graph), 8)
    assert closure.to_list() == [8, 9, 10, 11]


@pytest.mark.parametrize("corpus", CORPORA)
def test_forced_structure_invariants_on_corpus(corpus, request):
    """Свойства вынужденных вершин и H(G) на всём корпусе"""
    beta3, _ = beta_gamma(3)
    for g in request.getfixturevalue(corpus):
        report = forced_vertices(g)
        h = hasse_digraph(g)

        assert report.f_ratio >= Fraction(1, g.max_degree + 1)
        assert h.is_acyclic()
        assert h.labels() == set(report.forced)
        for s in h.labels():
            assert h.in_degree(s) <= 1

        if count_short_cycles(g).x3 == 0:
            for v in range(g.n):
                assert h.out_degree(v) <= 1
                assert h.in_degree(v) <= 3
                assert len(forced_closure(h, v)) <= beta3


# --- жадная починка ------------------------------------------------------------

def test_greedy_repair(p3, k33, k2):
    repaired = greedy_repair(p3, VertexSet.empty(3))
    assert is_identifying_code(p3, repaired).valid
    assert len(repaired) <= 3

    code = k33.vertex_set([0, 1, 3, 4])
    assert greedy_repair(k33, code) == code

    with pytest.raises(TwinsPresentError):
        greedy_repair(k2, k2.full_set())
