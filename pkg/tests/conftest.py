import random

import pytest

from markoff.tree import node_at, root
from markoff.utils import log_utils


@pytest.fixture
def rng():
    return random.Random(20240229)


@pytest.fixture
def root_node():
    return root()


@pytest.fixture
def node_194():
    """(13, 194, 5), the node reached by LR."""
    return node_at("LR")


@pytest.fixture(autouse=True)
def quiet_status():
    log_utils.set_quiet(True)
    yield
    log_utils.set_quiet(False)
