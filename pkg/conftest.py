"""
Shared fixtures: the shipped complexes and the expensive pipeline runs
"""
import pytest

from bordlab.classifier import classify_st
from bordlab.corpus import load_all
from bordlab.omega import OmegaKit


@pytest.fixture(scope="session")
def corpus():
    return load_all()


@pytest.fixture(scope="session")
def v23(corpus):
    return corpus['v23']


@pytest.fixture(scope="session")
def xprime(corpus):
    return corpus['xprime']


@pytest.fixture(scope="session")
def xpp(corpus):
    return corpus['xpp']


@pytest.fixture(scope="session")
def w158(corpus):
    return corpus['w158']


@pytest.fixture(scope="session")
def st_report():
    return classify_st()


@pytest.fixture(scope="session")
def omega_kit():
    return OmegaKit('split')
