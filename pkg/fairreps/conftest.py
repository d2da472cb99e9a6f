import os

os.environ.setdefault("FAIRREPS_SETTINGS_MODULE", "config.settings.test")

from factory.random import reseed_random  # noqa: E402
from hypothesis import HealthCheck  # noqa: E402
from hypothesis import settings as hypothesis_settings  # noqa: E402
import pytest  # noqa: E402

from fairreps.conf import settings as fairreps_settings  # noqa: E402
from fairreps.graphs.generators import bowtie  # noqa: E402
from fairreps.graphs.generators import complete_graph  # noqa: E402
from fairreps.graphs.generators import cycle_graph  # noqa: E402
from fairreps.graphs.generators import tailed_triangle  # noqa: E402
from fairreps.graphs.models import Graph  # noqa: E402


@pytest.fixture(autouse=True)
def _reproducible(request) -> None:
    # Each test draws the same random instances on every run.
    reseed_random(request.node.nodeid)


@pytest.fixture
def settings():
    yield fairreps_settings
    fairreps_settings.reset()


@pytest.fixture
def triangle() -> Graph:
    return cycle_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def tadpole() -> Graph:
    return tailed_triangle()


@pytest.fixture
def bowtie_graph() -> Graph:
    return bowtie()


hypothesis_settings.register_profile(
    "fairreps",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture, HealthCheck.too_slow],
)
hypothesis_settings.load_profile("fairreps")
