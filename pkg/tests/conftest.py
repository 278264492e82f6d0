import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import pytest

from bridgeburn.families import FamilySpec, generate


@pytest.fixture
def fam():
    def build(name, *params):
        return generate(FamilySpec(name, params))

    return build
