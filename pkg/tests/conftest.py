import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# scripts/ is imported by the CLI transcript tests
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("suite")

SEED = 20240816


@pytest.fixture
def rng():
    return random.Random(SEED)


def random_signed_word(rng, rank, max_len):
    return tuple(
        rng.choice([1, -1]) * rng.randint(1, rank)
        for _ in range(rng.randint(0, max_len))
    )
