import pytest
from hypothesis import settings

from wienerlab import kernels

settings.register_profile("wienerlab", deadline=None)
settings.load_profile("wienerlab")


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the jitted kernels once so timed tests measure steady state
    kernels.warmup()
