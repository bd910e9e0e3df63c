import pytest

from polsys.algebra.poly import poly, to_ints
from polsys.errors import FieldMismatchError, RankDeficientSystemError, ShapeMismatchError, UsageError
from polsys.system import PolySystem, ReducedRationalSolution, plant_solution, reduce_fraction

from ..utils import polys, system_from_ints


def test_system_shape_checks(gf7, gf16):
    with pytest.raises(UsageError):
        system_from_ints(gf7, [[[1], [0]]], [[1]])
    with pytest.raises(ShapeMismatchError):
        system_from_ints(gf7, [[[1]], [[1]]], [[1]])
    with pytest.raises(FieldMismatchError):
        PolySystem(gf7, ((poly([1], gf16.GF),),), (poly([1], gf7.GF),))


def test_system_dimensions_and_evaluation(gf7):
    system = system_from_ints(gf7, [[[0, 1], [1]], [[2], [1, 1]], [[1], [0]]], [[1], [2], [3]])
    assert (3, 2) == (system.m, system.n)
    A, b = system.evaluate(gf7.GF([0, 1]))
    assert (2, 3, 2) == A.shape
    assert (2, 3) == b.shape
    assert [[1, 1], [2, 2], [1, 0]] == A[1].tolist()
    assert system.is_full_rank_at(1)


def test_full_rank_check(gf7, rng):
    assert system_from_ints(gf7, [[[1], [0]], [[0], [1]]], [[1], [1]]).check_full_rank(rng)
    singular = system_from_ints(gf7, [[[0, 1], [0, 2]], [[1], [2]]], [[1], [1]])
    with pytest.raises(RankDeficientSystemError):
        singular.check_full_rank(rng)


def test_reduce_fraction_removes_common_factor(gf7):
    locator = poly([6, 1], gf7.GF)  # x - 1
    solution = reduce_fraction([locator * poly([0, 1], gf7.GF)], locator)
    assert [0, 1] == to_ints(solution.f[0])
    assert [1] == to_ints(solution.g)


def test_reduce_fraction_normalizes_denominator(gf7):
    solution = reduce_fraction(polys(gf7, [0, 0, 2], [0, 2]), poly([0, 2], gf7.GF))
    assert [[0, 1], [1]] == [to_ints(f) for f in solution.f]
    assert [1] == to_ints(solution.g)
    assert (1, 0) == (solution.df, solution.dg)

    solution = reduce_fraction(polys(gf7, [1, 2], [3]), poly([0, 3], gf7.GF))
    assert [[5, 3], [1]] == [to_ints(f) for f in solution.f]
    assert [0, 1] == to_ints(solution.g)


def test_reduce_fraction_is_idempotent(gf7):
    once = reduce_fraction(polys(gf7, [3, 3], [0, 6, 6]), poly([2, 0, 2], gf7.GF))
    assert once == reduce_fraction(once.f, once.g)


def test_reduce_fraction_rejects_zero_denominator(gf7):
    with pytest.raises(UsageError):
        reduce_fraction(polys(gf7, [1]), poly([0], gf7.GF))


def test_planted_system_is_satisfied(gf7):
    M = (polys(gf7, [1, 1], [2]), polys(gf7, [0], [1, 0, 1]))
    f = polys(gf7, [0, 1], [3])
    g = poly([1, 1], gf7.GF)
    system = plant_solution(M, f, g)
    assert system.satisfied_by(ReducedRationalSolution(f, g))
    assert not system.satisfied_by(ReducedRationalSolution(f, poly([2, 1], gf7.GF)))
    assert all(entry == g * m for row_a, row_m in zip(system.A, M) for entry, m in zip(row_a, row_m))


def test_one_by_one_planted_example(gf7):
    # A = (x + 1) M, f = x, g = x + 1
    M = (polys(gf7, [3]),)
    system = plant_solution(M, polys(gf7, [0, 1]), poly([1, 1], gf7.GF))
    assert [3, 3] == to_ints(system.A[0][0])
    assert [0, 3] == to_ints(system.b[0])
