import pytest

from polsys.algebra.poly import to_ints
from polsys.errors import InsufficientPointsError
from polsys.system import generate_instance, usable_points
from polsys.system.solve import exact_solve

from ..utils import cramer_solution, system_from_ints


def test_identity_system(gf7):
    system = system_from_ints(gf7, [[[1], [0]], [[0], [1]]], [[0, 1], [1, 1]])
    solution = exact_solve(system, 1, 0, seed=0)
    assert [[0, 1], [1, 1]] == [to_ints(f) for f in solution.f]
    assert [1] == to_ints(solution.g)


def test_rational_solution(gf7):
    system = system_from_ints(gf7, [[[0, 1], [0]], [[0], [0, 1]]], [[1], [1]])
    solution = exact_solve(system, 0, 1, seed=0)
    assert [[1], [1]] == [to_ints(f) for f in solution.f]
    assert [0, 1] == to_ints(solution.g)


def test_loose_bounds_still_give_reduced_solution(gf101):
    system, planted = generate_instance(gf101, 2, 3, 1, 2, 1, seed=2)
    assert planted == exact_solve(system, 5, 4, seed=8)


@pytest.mark.parametrize('seed', range(10))
def test_recovers_planted_solution(gf16, seed):
    system, planted = generate_instance(gf16, 2, 2, 2, 2, 1, seed=seed, min_points=4)
    assert planted == exact_solve(system, 2, 1, seed=seed)


def test_not_enough_points(gf7):
    system = system_from_ints(gf7, [[[1]]], [[1]])
    with pytest.raises(InsufficientPointsError):
        exact_solve(system, 5, 2)


def test_matches_cramer_rule(gf7):
    checked = 0
    for index in range(200):
        n = 1 + index % 2
        df, dg = index % 3, (index // 3) % 3
        system, planted = generate_instance(gf7, n, n, 2, df, dg, seed=[17, index], min_points=df + dg + 1)
        usable = usable_points(system)
        solution = exact_solve(system, df, dg, seed=index, usable=usable)
        assert cramer_solution(system) == solution
        assert planted == solution
        checked += 1
    assert 200 == checked
