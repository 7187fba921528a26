import random
import sys

import pytest
from hypothesis import HealthCheck, settings

from skewinc import GF, QQ

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

F5, F7 = GF(5), GF(7)
FIELDS = [QQ, F5, F7]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=FIELDS, ids=lambda F: F.name)
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line("criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", detail))
