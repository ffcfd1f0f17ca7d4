import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion for the run summary."""

    def record(label, passed, note=""):
        line = f"criterion {label}: {'PASS' if passed else 'FAIL'}" + (f"  ({note})" if note else "")
        _CRITERIA[label] = line
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: (int(s.split("-")[0]), s)):
        terminalreporter.write_line(_CRITERIA[label])
