import pytest

# acceptance outcomes, keyed by criterion number
_ACCEPTANCE = {}


@pytest.fixture
def record():
    """``record(num, ok, detail)`` stores one acceptance line for the summary."""

    def _record(num, ok, detail):
        _ACCEPTANCE[num] = (bool(ok), detail)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
