import numpy as np
import pytest

from polsys.algebra.matrix import rank
from polsys.algebra.poly import poly
from polsys.errors import ShapeMismatchError, UsageError
from polsys.oracle import (
    ErrorPlan,
    adversarial_corrupt,
    black_box_outputs,
    corrupted_positions,
    sample_black_box,
)
from polsys.system import ReducedRationalSolution, choose_evaluation_points, generate_instance

from ..utils import polys, system_from_ints


def consistent(sample, solution):
    f_value, g_value = solution.evaluate(sample.point.reshape(1))
    output = sample.output
    return bool(np.all(output.A @ f_value[0] == g_value[0] * output.b))


@pytest.fixture
def instance(gf16):
    system, solution = generate_instance(gf16, 3, 3, 2, 2, 2, seed=21, min_points=12)
    points = choose_evaluation_points(system, solution.g, 12, seed=1)
    return system, solution, points


def test_error_plan_validation():
    assert 3 == ErrorPlan(5, {0, 2, 4}).e
    with pytest.raises(UsageError):
        ErrorPlan(5, {5})
    with pytest.raises(UsageError):
        ErrorPlan.random(3, 4)
    plan = ErrorPlan.random(10, 4, seed=3)
    assert 4 == len(plan.errors)
    assert plan.errors == ErrorPlan.random(10, 4, seed=3).errors


def test_no_errors_gives_exact_evaluations(instance):
    system, solution, points = instance
    samples = sample_black_box(system, solution, points, ErrorPlan(12, set()))
    A, b = system.evaluate(points)
    for sample in samples:
        assert not sample.is_corrupted
        assert A[sample.index].tolist() == sample.output.A.tolist()
        assert b[sample.index].tolist() == sample.output.b.tolist()
        assert consistent(sample, solution)


def test_corrupted_samples_are_true_errors(instance):
    system, solution, points = instance
    for seed in range(20):
        plan = ErrorPlan.random(12, 5, seed=seed)
        samples = sample_black_box(system, solution, points, plan)
        assert plan.errors == corrupted_positions(samples)
        for sample in samples:
            assert sample.is_corrupted != consistent(sample, solution)
            assert system.n == rank(sample.output.A)
        assert 12 == len(black_box_outputs(samples))


def test_scalar_channel_is_reed_solomon(gf7):
    # n = m = 1, A = 1, g = 1: honest samples are codeword symbols, corrupted ones are inconsistent
    system = system_from_ints(gf7, [[[1]]], [[2, 1]])
    solution = ReducedRationalSolution(polys(gf7, [2, 1]), poly([1], gf7.GF))
    points = gf7.GF([0, 1, 2, 3, 4, 5, 6])
    samples = sample_black_box(system, solution, points, ErrorPlan(7, {1, 4}, seed=0))
    for sample in samples:
        if sample.is_corrupted:
            assert sample.output.A[0, 0] * solution.f[0](sample.point) != sample.output.b[0]
        else:
            assert 1 == int(sample.output.A[0, 0])
            assert solution.f[0](sample.point) == sample.output.b[0]
    assert {1, 4} == corrupted_positions(samples)


def test_corrupted_right_hand_sides_look_uniform(gf7):
    system = system_from_ints(gf7, [[[1], [0]], [[0], [1]]], [[1], [1]])
    solution = ReducedRationalSolution(polys(gf7, [1], [1]), poly([1], gf7.GF))
    points = gf7.GF([0, 1, 2, 3, 4, 5, 6])
    counts = np.zeros(7)
    for seed in range(1000):
        for sample in sample_black_box(system, solution, points, ErrorPlan(7, set(range(7)), seed=seed)):
            counts += np.bincount(np.asarray(sample.output.b).astype(int), minlength=7)
    expected = counts.sum() / 7
    chi_squared = ((counts - expected) ** 2 / expected).sum()
    # 0.999 quantile of chi-squared with 6 degrees of freedom
    assert chi_squared < 22.46


def test_adversarial_corruption(instance, gf16):
    system, solution, points = instance
    alternative = ReducedRationalSolution(polys(gf16, [1, 2], [3], [0, 0, 5]), poly([1], gf16.GF))
    samples = adversarial_corrupt(system, solution, points, {0, 3, 7}, alternative)
    for sample in samples:
        assert sample.is_corrupted != consistent(sample, solution)
        if sample.index in (0, 3, 7):
            assert consistent(sample, alternative)
    assert corrupted_positions(samples) <= {0, 3, 7}


def test_adversarial_without_errors_is_honest(instance, gf16):
    system, solution, points = instance
    alternative = ReducedRationalSolution(polys(gf16, [1], [1], [1]), poly([1], gf16.GF))
    samples = adversarial_corrupt(system, solution, points, set(), alternative)
    assert all(consistent(sample, solution) and not sample.is_corrupted for sample in samples)


def test_adversarial_shape_mismatch(instance, gf16):
    system, solution, points = instance
    with pytest.raises(ShapeMismatchError):
        adversarial_corrupt(system, solution, points, {1}, ReducedRationalSolution(polys(gf16, [1]),
                                                                                   poly([1], gf16.GF)))
    with pytest.raises(ShapeMismatchError):
        sample_black_box(system, solution, points[:5], ErrorPlan(12, {1}))
