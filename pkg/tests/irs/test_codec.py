import numpy as np
import pytest

from polsys.algebra.poly import poly, to_ints
from polsys.errors import ShapeMismatchError, UsageError
from polsys.irs import (
    IRSParams,
    irs_encode,
    random_messages,
    random_spr_instance,
    reference_bounds,
    spr_decode,
    spr_trial_rate,
)

from ..utils import berlekamp_welch, polys


def test_params_validation(gf16):
    params = IRSParams(gf16, 16, 4, 3)
    assert tuple(range(16)) == params.points
    assert 6 == params.unique_radius
    with pytest.raises(UsageError):
        IRSParams(gf16, 17, 4, 3)
    with pytest.raises(UsageError):
        IRSParams(gf16, 5, 4, 0)
    with pytest.raises(ShapeMismatchError):
        IRSParams(gf16, 5, 2, 1, points=(1, 2, 3))
    with pytest.raises(UsageError):
        IRSParams(gf16, 3, 2, 1, points=(1, 2, 2))


def test_encode(gf7):
    params = IRSParams(gf7, 5, 2, 2)
    codeword = irs_encode(polys(gf7, [0], [1, 1]), params)
    assert (2, 5) == codeword.shape
    assert [0] * 5 == codeword[0].tolist()
    assert [1, 2, 3, 4, 5] == codeword[1].tolist()
    with pytest.raises(UsageError):
        irs_encode(polys(gf7, [1, 1, 1], [1]), params)
    with pytest.raises(ShapeMismatchError):
        irs_encode(polys(gf7, [1]), params)


def test_error_columns_differ_from_codeword(gf7):
    params = IRSParams(gf7, 7, 2, 1)
    for seed in range(50):
        messages = random_messages(params, seed)
        instance = random_spr_instance(params, messages, 3, seed)
        codeword = irs_encode(messages, params)
        differing = {j for j in range(7) if not np.array_equal(codeword[:, j], instance.received[:, j])}
        assert differing == instance.errors


def test_no_errors_decodes(gf101):
    params = IRSParams(gf101, 20, 5, 3)
    messages = random_messages(params, 1)
    outcome = spr_decode(random_spr_instance(params, messages, 0, 1), 5, 0)
    assert outcome.ok
    assert messages == outcome.solution.f
    assert [1] == to_ints(outcome.solution.g)


def test_single_row_agrees_with_berlekamp_welch(gf101):
    params = IRSParams(gf101, 20, 6, 1)
    for seed in range(200):
        rng = np.random.default_rng([31, seed])
        e = int(rng.integers(0, params.unique_radius + 1))
        messages = random_messages(params, rng)
        instance = random_spr_instance(params, messages, e, rng)
        outcome = spr_decode(instance, params.k, e, rng=rng)
        expected = berlekamp_welch(gf101, params.points, instance.received[0], params.k, e)
        assert outcome.ok
        assert expected == outcome.solution.f[0] == messages[0]


def test_beyond_unique_radius(gf16):
    # n_c = 16, k = 4, r = 3: unique radius 6, 7 errors still decode with probability >= 1 - 7/16
    params = IRSParams(gf16, 16, 4, 3)
    result = spr_trial_rate(params, 7, 200, seed=3)
    assert 200 == result.trials == result.successes + result.failures + result.wrong
    assert 0 == result.wrong
    p = 1 - 7 / 16
    assert result.success_rate >= p - 3 * np.sqrt(p * (1 - p) / 200)


def test_reference_bounds(gf16):
    bounds = reference_bounds(IRSParams(gf16, 16, 4, 3), 7)
    assert 9 == bounds.e_max_collab
    assert 7 / 16 == bounds.p_spr == bounds.p_glz
    assert bounds.p_bms == pytest.approx(0.071, abs=5e-4)


def test_messages_must_be_over_the_code_field(gf7, gf101):
    params = IRSParams(gf7, 5, 2, 1)
    with pytest.raises(UsageError):
        irs_encode((poly([1], gf101.GF),), params)
