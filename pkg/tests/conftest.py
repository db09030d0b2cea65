import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20260817)


class RiggedZeroRng:
    """Random source whose draws are always zero, so every localization
    point is degenerate."""

    def randint(self, a, b):
        return 0

    def uniform(self, a, b):
        return 0.0


@pytest.fixture
def zero_rng():
    return RiggedZeroRng()
