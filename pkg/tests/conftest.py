"""
Shared fixtures. Root systems, modules and lattices are immutable, so they
are built once per session.
"""
import pytest

from gias3.chevalley.module.lattice import AdmissibleLattice
from gias3.chevalley.module.weight_module import WeightModule
from gias3.chevalley.roots.root_system import RootSystem
from gias3.chevalley.tools.config import parse_module_spec

SMALL_TYPES = ('A1', 'A2', 'A3', 'B2', 'G2')


@pytest.fixture(scope='session')
def root_systems():
    return {name: RootSystem(name) for name in SMALL_TYPES}


@pytest.fixture(scope='session')
def a1(root_systems):
    return root_systems['A1']


@pytest.fixture(scope='session')
def a2(root_systems):
    return root_systems['A2']


@pytest.fixture(scope='session')
def b2(root_systems):
    return root_systems['B2']


@pytest.fixture(scope='session')
def g2(root_systems):
    return root_systems['G2']


@pytest.fixture(scope='session')
def sl2_module(a1):
    """ The natural module V^omega of SL2.
    """
    return WeightModule(a1, [(1,)])


@pytest.fixture(scope='session')
def sl2_lattice(sl2_module):
    return AdmissibleLattice(sl2_module)


@pytest.fixture(scope='session')
def a2_module(a2):
    """ V^rho + V^omega_1 + V^omega_2, dimension 14.
    """
    return WeightModule(a2, parse_module_spec(a2, 'sc-default'))


@pytest.fixture(scope='session')
def a2_lattice(a2_module):
    return AdmissibleLattice(a2_module)


@pytest.fixture(scope='session')
def a2_fundamental(a2):
    return WeightModule(a2, parse_module_spec(a2, 'fundamental'))


@pytest.fixture(scope='session')
def b2_fundamental(b2):
    return WeightModule(b2, parse_module_spec(b2, 'fundamental'))


@pytest.fixture(scope='session')
def b2_module(b2):
    return WeightModule(b2, parse_module_spec(b2, 'sc-default'))


@pytest.fixture(scope='session')
def b2_lattice(b2_module):
    return AdmissibleLattice(b2_module)
