import pathlib
import random

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
GOLDEN = pathlib.Path(__file__).resolve().parent / "golden"


@pytest.fixture
def rng():
    return random.Random(0xD00D1E)


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()
