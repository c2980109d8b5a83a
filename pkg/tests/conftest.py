import pytest

_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_KEY] = {}


@pytest.fixture
def acceptance_log(request):
    """Criterion id -> list of (ok, detail); summarised at the end of the run."""
    return request.config.stash[_KEY]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(_KEY, {})
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(log, key=lambda c: int(c.split()[0])):
        parts = log[cid]
        ok = all(p[0] for p in parts)
        failed = [d for good, d in parts if not good]
        detail = "; ".join(failed) if failed else parts[-1][1]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {cid}: {detail}")
