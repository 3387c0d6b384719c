import random

import pytest

from utils.parsing import parse_origami


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow enumerations")
    parser.addoption("--seed", type=int, default=20240601, help="seed for randomized property tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def _quiet(monkeypatch):
    monkeypatch.setenv("ORIGAMI_PROGRESS", "0")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture
def three_square():
    return parse_origami("((2,3),(1,2,3))")


@pytest.fixture
def cache_dir(tmp_path):
    return str(tmp_path / "cache")
