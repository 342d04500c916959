import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from packed_semigroups import NumericalSemigroup, kernels  # noqa: E402


def S(*gens):
    return NumericalSemigroup(tuple(gens))


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request):
    return kernels.backends()[request.param]
