import argparse

import pytest

from gias3.chevalley.module.weight_module import WeightModule
from gias3.chevalley.tools.config import (
    DEFAULT_TYPES, LARGE_TYPES, RunConfig, fundamental_weight, parse_module_spec,
)
from gias3.chevalley.tools.verify import verification_plan


def test_sc_default_lists_each_summand_once(a1, a2):
    assert parse_module_spec(a1, 'sc-default') == [(1,)]
    assert WeightModule(a1, parse_module_spec(a1, None)).dim == 2
    assert parse_module_spec(a2, 'sc-default') == [(1, 1), (1, 0), (0, 1)]


def test_presets(b2):
    assert parse_module_spec(b2, 'fundamental') == [(1, 0), (0, 1)]
    assert parse_module_spec(b2, 'adjoint') == [b2.root_to_weight(b2.highest_root)]
    assert parse_module_spec(b2, '2,0; 0,1') == [(2, 0), (0, 1)]
    assert fundamental_weight(3, 1) == (0, 1, 0)


def test_c3_is_a_default_type():
    assert 'C3' in DEFAULT_TYPES
    assert 'C3' not in LARGE_TYPES
    assert 'D4' in LARGE_TYPES
    plan = dict(verification_plan(['module', 'integrality']))
    assert plan['C3'] == ['module', 'integrality']
    assert 'D4' not in plan
    assert 'D4' in dict(verification_plan(['module'], large=True))


def test_size_check():
    RunConfig('C3').check_size()
    with pytest.raises(ValueError):
        RunConfig('D4').check_size()
    RunConfig('D4', large=True).check_size()
    RunConfig('D4', module='fundamental').check_size()


def test_from_args():
    args = argparse.Namespace(type='G2', module='adjoint', seed=7, json=True, force=True, workers=0)
    config = RunConfig.from_args(args)
    assert str(config.cartan_type) == 'G2'
    assert config.seed == 7
    assert config.workers == 1
    assert not config.strict
