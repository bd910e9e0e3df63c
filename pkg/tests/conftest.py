import sys
from pathlib import Path

import numpy as np
from flask import Config
from pytest import fixture

from polsys.algebra.field import FieldSpec
from polsys.factory import get_app


root = (Path(__file__).parent / '..').resolve()
sys.path.insert(0, str(root))


def update_config(conf):
    conf['DEFAULT_FIELD'] = 'GF(2^4; 1,1,0,0,1)'
    conf['DEFAULT_SEED'] = 0
    conf['EXPERIMENT_WORKERS'] = 1
    conf['EXPERIMENT_RECORD_TIMING'] = False
    conf['TESTING'] = True
    return conf


@fixture
def app():
    cfg = Config(root)
    cfg.from_object('polsys.default_settings')
    update_config(cfg)
    return get_app(config=cfg, testing=True)


@fixture
def runner(app):
    return app.test_cli_runner()


@fixture
def gf7():
    return FieldSpec(7)


@fixture
def gf16():
    return FieldSpec.parse('GF(2^4; 1,1,0,0,1)')


@fixture
def gf101():
    return FieldSpec(101)


@fixture
def rng():
    return np.random.default_rng(2024)
