import pytest

from src.domain.bounds import (beta_gamma, degree_lower_bound, domination_lower_reference, lll_dependency_check,
                               log_lower_bound, lower_bounds, rrg_upper_reference, theorem_upper_bounds)
from src.domain.exceptions import DomainViolationError, TwinsPresentError
from src.domain.graph import Graph


def _row(rows, name):
    return next(r for r in rows if r.name == name)


def test_simple_lower_bounds():
    assert log_lower_bound(6) == 3
    assert log_lower_bound(7) == 3
    assert log_lower_bound(8) == 4
    assert degree_lower_bound(3, 2) == 2
    assert degree_lower_bound(6, 3) == 3


def test_lower_bounds_examples(k33, p3, c1_q3):
    """Тест нижних оценок на известных графах"""
    # Act
    k33_report = lower_bounds(k33)
    p3_report = lower_bounds(p3)
    c1_report = lower_bounds(c1_q3.graph)

    # Assert
    assert (k33_report.log_lower, k33_report.degree_lower, k33_report.forced_lower) == (3, 3, 0)
    assert k33_report.best_lower == 3
    assert (p3_report.log_lower, p3_report.degree_lower) == (2, 2)
    assert p3_report.best_lower == 2
    assert c1_report.forced_lower == 24
    assert c1_report.best_lower == 24


def test_lower_bounds_errors(k2):
    with pytest.raises(TwinsPresentError):
        lower_bounds(k2)
    with pytest.raises(DomainViolationError):
        lower_bounds(Graph(1, [], allow_isolated=True))


@pytest.mark.parametrize("k, expected", [(3, (4, 78)), (4, (31, 7750))])
def test_beta_gamma(k, expected):
    assert beta_gamma(k) == expected


def test_beta_gamma_domain():
    with pytest.raises(DomainViolationError):
        beta_gamma(2)


def test_theorem_upper_bounds_values():
    """Значения справочных формул"""
    # Act
    rows = theorem_upper_bounds(1000, 3, 1.0)
    girth_rows = theorem_upper_bounds(1000, 100, 1.0, delta=100)

    # Assert
    assert _row(rows, "lll_main").value == pytest.approx(1000 - 1000 / 309)
    assert _row(rows, "lll_main").value == pytest.approx(996.76, abs=0.01)
    assert _row(rows, "lll_general").value == pytest.approx(1000 - 1000 / (103 * 3 * 16))
    assert _row(girth_rows, "girth5").value == pytest.approx(69.08, abs=0.01)
    assert _row(girth_rows, "girth5").asymptotic
    assert not _row(rows, "lll_main").asymptotic
    assert all(r.name != "girth5" for r in rows)


def test_theorem_upper_bounds_clique_row():
    rows = theorem_upper_bounds(1000, 3, 1.0, clique_bound=3)
    assert _row(rows, "lll_clique_free").value == pytest.approx(1000 - 1000 / (103 * 78 ** 2 * 3))


@pytest.mark.parametrize("kwargs", [
    {"n": 10, "d": 2},
    {"n": 10, "d": 3, "f_ratio": 0.0},
    {"n": 10, "d": 3, "f_ratio": 1.5},
    {"n": 10, "d": 3, "delta": 2},
    {"n": 0, "d": 3},
])
def test_theorem_upper_bounds_domain(kwargs):
    with pytest.raises(DomainViolationError):
        theorem_upper_bounds(**kwargs)


def test_domination_and_rrg_references():
    assert domination_lower_reference(100, 3) == pytest.approx(30.35, abs=0.01)
    assert rrg_upper_reference(2000, 10) / 2000 == pytest.approx(0.313, abs=0.001)
    with pytest.raises(DomainViolationError):
        domination_lower_reference(100, 2)


def test_lll_condition_holds_for_default_probability():
    """При p = 1/(kd), f = 1 условие локальной леммы выполнено"""
    for d in (3, 4, 10, 50):
        assert lll_dependency_check(d, 1 / (34.31 * d)) <= 0.5
