import math
from itertools import combinations

import pytest

from src.domain.exceptions import BudgetExceededError, TwinsPresentError
from src.domain.extremal import construct_ak_universal, construct_c2, construct_c3
from src.domain.generators import named_graph, named_multigraph
from src.domain.graph import VertexSet
from src.domain.identify import forced_vertices, is_dominating, is_identifying_code
from src.domain.solver import build_constraints, greedy_code, solve_exact, solve_exact_domination, solve_naive


def test_build_constraints_rejects_twins(k2):
    with pytest.raises(TwinsPresentError) as exc_info:
        build_constraints(k2)
    assert exc_info.value.twins == [(0, 1)]


def test_constraint_singletons_are_forced_vertices(c1_q3):
    family = build_constraints(c1_q3.graph)
    assert family.singletons() == forced_vertices(c1_q3.graph).forced
    assert len(family.singletons()) == 24


def test_hitting_sets_are_exactly_codes(p3):
    """На P3 покрытия семейства ограничений совпадают с кодами (полный перебор)"""
    family = build_constraints(p3)
    for size in range(p3.n + 1):
        for combo in combinations(range(p3.n), size):
            code = VertexSet.from_iterable(p3.n, combo)
            assert family.is_hit_by(code) == is_identifying_code(p3, code).valid


@pytest.mark.parametrize("spec, gamma", [
    ("bipartite:3", 4),
    ("path:3", 2),
    ("cycle:5", 3),
])
def test_solve_exact_known_values(spec, gamma):
    """Тест точного решателя на графах с известным ответом"""
    # Arrange
    g = named_graph(spec)

    # Act
    outcome = solve_exact(g)

    # Assert
    assert outcome.gamma == gamma
    assert outcome.optimal
    assert is_identifying_code(g, outcome.code).valid


def test_solve_exact_on_extremal_families():
    c2 = construct_c2(named_multigraph("complete:4"))
    assert solve_exact(c2.graph).gamma == c2.claimed_gamma == 8

    c3 = construct_c3(4, 3)
    assert solve_exact(c3.graph).gamma == c3.claimed_gamma == 6

    c3 = construct_c3(8, 3)
    assert is_identifying_code(c3.graph, c3.optimal_code).valid
    assert solve_exact(c3.graph, time_budget=600).gamma == c3.claimed_gamma == 12

    ak = construct_ak_universal(3)
    assert solve_exact(ak.graph).gamma == ak.claimed_gamma == 6


@pytest.mark.slow
def test_solve_exact_c2_of_k5():
    c2 = construct_c2(named_multigraph("complete:5"))
    outcome = solve_exact(c2.graph)
    assert outcome.gamma == 15
    assert outcome.optimal


def test_solve_exact_matches_naive_on_petersen(petersen):
    assert solve_exact(petersen).gamma == solve_naive(petersen).gamma


def test_solve_naive_examples(p3, c5):
    assert solve_naive(p3).gamma == 2
    assert solve_naive(c5).gamma == 3
    with pytest.raises(TwinsPresentError):
        solve_naive(named_graph("complete:3"))


@pytest.mark.parametrize("corpus", ["twin_free_corpus", pytest.param("twin_free_corpus_7", marks=pytest.mark.slow)])
def test_exact_matches_naive_on_corpus(corpus, request):
    """Точный решатель совпадает с перебором и укладывается в классические оценки"""
    for g in request.getfixturevalue(corpus):
        gamma = solve_exact(g).gamma
        assert gamma == solve_naive(g).gamma, f"mismatch on {g.edges}"
        assert math.ceil(math.log2(g.n + 1)) <= gamma <= g.n - 1
        assert gamma >= math.ceil(2 * g.n / (g.max_degree + 2))


def test_greedy_is_valid_and_not_smaller_than_optimum(twin_free_corpus, p3, c1_q3):
    for g in twin_free_corpus:
        code = greedy_code(g)
        assert is_identifying_code(g, code).valid
        assert len(code) >= solve_exact(g).gamma

    assert len(greedy_code(p3)) in (2, 3)
    assert len(greedy_code(c1_q3.graph)) >= 24


def test_budget_exhaustion_carries_incumbent():
    """Нулевой бюджет: BudgetExceededError с лучшим известным кодом"""
    # Arrange
    g = construct_c3(8, 4).graph

    # Act
    with pytest.raises(BudgetExceededError) as exc_info:
        solve_exact(g, time_budget=0.0)

    # Assert
    incumbent = exc_info.value.incumbent
    assert incumbent is not None
    assert not incumbent.optimal
    assert is_identifying_code(g, incumbent.code).valid


@pytest.mark.parametrize("spec, gamma", [("cycle:5", 2), ("bipartite:3", 2), ("path:3", 1)])
def test_solve_exact_domination(spec, gamma):
    g = named_graph(spec)
    outcome = solve_exact_domination(g)
    assert outcome.gamma == gamma
    assert is_dominating(g, outcome.code).ok
