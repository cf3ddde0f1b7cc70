import random

import pytest

from qec.scalars import get_q, set_q


@pytest.fixture(autouse=True)
def _restore_q():
    # tests may switch q; never leak it into the next test
    q0 = get_q()
    yield
    set_q(q0)


@pytest.fixture
def rng():
    return random.Random(20260825)
