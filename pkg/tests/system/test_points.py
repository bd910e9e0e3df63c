import pytest

from polsys.algebra.poly import poly
from polsys.errors import InsufficientPointsError, UsageError
from polsys.system import choose_evaluation_points, generate_instance, usable_points

from ..utils import system_from_ints


def test_identity_accepts_every_point(gf7):
    system = system_from_ints(gf7, [[[1]]], [[0, 1]])
    points = choose_evaluation_points(system, poly([1], gf7.GF), 7, seed=1)
    assert list(range(7)) == sorted(int(a) for a in points)


def test_roots_of_denominator_are_excluded(gf7):
    system = system_from_ints(gf7, [[[1]]], [[1]])
    points = choose_evaluation_points(system, poly([0, 1], gf7.GF), 6, seed=3)
    assert 0 not in [int(a) for a in points]
    with pytest.raises(InsufficientPointsError) as error:
        choose_evaluation_points(system, poly([0, 1], gf7.GF), 7, seed=3)
    assert 6 == error.value.available


def test_excluded_points_are_roots_of_g_and_rank_drops(gf16):
    system, solution = generate_instance(gf16, 2, 2, 1, 1, 2, seed=11)
    usable = usable_points(system, solution.g)
    for a in gf16.elements():
        expected = solution.g(a) != 0 and system.is_full_rank_at(a)
        assert expected == (int(a) in usable)
    # g divides every entry of A, so its roots are rank drops as well
    assert usable == usable_points(system)


def test_points_are_seeded_and_distinct(gf16):
    system, solution = generate_instance(gf16, 2, 3, 2, 2, 1, seed=5)
    first = choose_evaluation_points(system, solution.g, 8, seed=42)
    second = choose_evaluation_points(system, solution.g, 8, seed=42)
    assert first.tolist() == second.tolist()
    assert 8 == len(set(first.tolist()))
    for a in first:
        assert solution.g(a) != 0
        assert system.is_full_rank_at(a)


def test_point_count_must_be_positive(gf7):
    system = system_from_ints(gf7, [[[1]]], [[1]])
    with pytest.raises(UsageError):
        choose_evaluation_points(system, None, 0)
