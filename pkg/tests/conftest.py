import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

_criteria: dict[str, tuple[bool, str]] = {}


class _Recorder:
    def __call__(self, name: str, passed: bool, detail: str = "") -> None:
        _criteria[name] = (bool(passed), detail)


@pytest.fixture
def record_criterion():
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        ok, detail = _criteria[name]
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        if detail:
            line += f": {detail}"
        terminalreporter.write_line(line)
