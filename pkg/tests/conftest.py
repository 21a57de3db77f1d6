import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_LOG = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Call ``criterion(n, ok, detail)`` to log and assert one acceptance criterion."""
    log = request.config.stash.setdefault(_LOG, [])

    def report(n, ok, detail=""):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
        log.append((n, line))
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(_LOG, [])
    if log:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(log):
            terminalreporter.write_line(line)
