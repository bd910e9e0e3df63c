import numpy as np
import pytest

from polsys.algebra.matrix import rank
from polsys.algebra.poly import linear_product, poly, to_ints
from polsys.decoders.keyeq import build_key_matrix, minimal_solution, reduce_with_locator, verified
from polsys.decoders.glz import local_kernels
from polsys.errors import ShapeMismatchError, UsageError
from polsys.oracle import ErrorPlan, black_box_outputs, sample_black_box
from polsys.system import choose_evaluation_points, generate_instance
from polsys.algebra.matrix import right_kernel_basis

from ..utils import polys


def test_layout(gf7):
    GF = gf7.GF
    points = GF([1, 2, 3])
    y = GF([[1, 2], [3, 4], [5, 6]])
    key = build_key_matrix(y, points, 2, 0, 1, 0)
    # phi blocks of width 1, psi block of width 2, n L = 6 rows
    assert (6, 4) == key.matrix.shape
    assert (1, 2, 4, 3) == (key.phi_width, key.psi_width, key.unknowns, key.rho)
    assert [1, 0, -1 % 7, -1 % 7] == key.matrix[0].tolist()
    assert [0, 1, -4 % 7, (-4 * 2) % 7] == key.matrix[4].tolist()


def test_split_join(gf7):
    GF = gf7.GF
    key = build_key_matrix(GF.Zeros((3, 1)), GF([0, 1, 2]), 1, 1, 0, 0)
    phis, psi = key.split(GF([1, 2, 3]))
    assert [1, 2] == to_ints(phis[0])
    assert [3] == to_ints(psi)
    assert [1, 2, 3] == key.join(phis, psi).tolist()
    with pytest.raises(ShapeMismatchError):
        key.split(GF([1, 2]))


def test_rejects_bad_input(gf7):
    GF = gf7.GF
    with pytest.raises(ShapeMismatchError):
        build_key_matrix(GF.Zeros((3, 2)), GF([0, 1, 2]), 1, 1, 0, 0)
    with pytest.raises(UsageError):
        build_key_matrix(GF.Zeros((3, 1)), GF([0, 1, 1]), 1, 1, 0, 0)
    with pytest.raises(UsageError):
        # at least df + dg + 2e + 1 = 5 points for a single unknown
        build_key_matrix(GF.Zeros((4, 1)), GF([0, 1, 2, 3]), 1, 1, 1, 1)


@pytest.mark.parametrize('seed', range(10))
def test_locator_times_solution_is_in_kernel(gf16, seed):
    n, df, dg, e, L = 3, 2, 2, 5, 12
    system, solution = generate_instance(gf16, n, n, 2, df, dg, seed=[3, seed], min_points=L)
    points = choose_evaluation_points(system, solution.g, L, seed=seed)
    plan = ErrorPlan.random(L, e, seed=seed)
    samples = sample_black_box(system, solution, points, plan)
    y = local_kernels(black_box_outputs(samples), rng=seed).values
    key = build_key_matrix(y, points, n, df, dg, e)

    locator = linear_product([points[l] for l in plan.errors], gf16.GF)
    vector = key.join([locator * f for f in solution.f], locator * solution.g)
    assert not np.any(key.matrix @ vector)
    assert rank(key.matrix) <= key.rho


def test_minimal_solution_and_reduction(gf7):
    GF = gf7.GF
    points = GF([1, 2, 3, 4, 5])
    f, g = poly([0, 1], GF), poly([1], GF)
    y = (f(points) / g(points)).reshape(5, 1)
    key = build_key_matrix(y, points, 1, 2, 1, 0)
    candidate = minimal_solution(key, right_kernel_basis(key.matrix))
    solution, locator = reduce_with_locator(*candidate)
    assert [0, 1] == to_ints(solution.f[0])
    assert [1] == to_ints(solution.g)
    assert [1] == to_ints(locator)


def test_minimal_solution_skips_zero_denominators(gf7):
    GF = gf7.GF
    key = build_key_matrix(GF.Zeros((2, 1)), GF([1, 2]), 1, 1, 0, 0)
    assert minimal_solution(key, [GF([1, 0, 0])]) is None


def test_verified_degrees(gf7):
    solution, _ = reduce_with_locator(polys(gf7, [1, 1]), poly([2, 2], gf7.GF))
    assert verified(solution, 0, 0)
    assert verified(solution, 3, 2)
    assert not verified(solution, 3, 2, exact_dg=True)
