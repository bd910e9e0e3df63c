import pytest

from polsys.algebra.field import FieldSpec
from polsys.errors import UsageError
from polsys.experiments import ExperimentConfig, ExperimentResult, experiment_grid


def test_point_count_modes(gf16):
    assert 12 == ExperimentConfig(gf16).L
    assert 15 == ExperimentConfig(gf16, l_mode='bk').L
    assert 11 == ExperimentConfig(gf16, l_mode='star').L
    assert 13 == ExperimentConfig(gf16, l_mode='explicit', explicit_L=13).L


@pytest.mark.parametrize('changes', [
    {'l_mode': 'other'},
    {'method': 'other'},
    {'generator': 'other'},
    {'trials': 0},
    {'n': 4, 'm': 3},
    {'e': -1},
    {'l_mode': 'explicit'},
    {'l_mode': 'explicit', 'explicit_L': 10},
    {'method': 'bk'},
    {'l_mode': 'explicit', 'explicit_L': 17},
])
def test_invalid_configs(gf16, changes):
    with pytest.raises(UsageError):
        ExperimentConfig(gf16, **changes)


def test_grid(gf16):
    base = ExperimentConfig(FieldSpec.parse('GF(2^5)'), systems=1, trials=1)
    configs = experiment_grid(base, fields=[FieldSpec.parse('GF(2^5)'), FieldSpec.parse('GF(2^6)')],
                              modes=['glz', 'star'], errors=[4, 5])
    assert 8 == len(configs)
    assert {(32, 'glz', 4), (64, 'star', 5)} <= {(c.spec.order, c.l_mode, c.e) for c in configs}
    assert [base] == experiment_grid(base)


def test_result_row(gf16):
    cfg = ExperimentConfig(gf16, systems=2, trials=10, seed=7)
    result = ExperimentResult(cfg, 3, 0)
    row = result.row()
    assert 16 == row['q']
    assert 'glz' == row['mode']
    assert '0.15' == row['p_observed']
    assert '0.4375' == row['p_glz']
    assert '0.0709663' == row['p_bms']
    assert 0 == row['ms']
    assert result.within_glz_bound
    assert not ExperimentResult(cfg, 20, 0).within_glz_bound
