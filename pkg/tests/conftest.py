import pytest

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


class _Criterion:
    def __init__(self, key: str, title: str):
        self.key, self.title = key, title
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ok = exc_type is None
        first = str(exc).splitlines()[0] if exc is not None and str(exc) else ""
        detail = self.detail if ok else f"{self.detail} [{exc_type.__name__}: {first}]".strip()
        ACCEPTANCE_RESULTS[self.key] = (ok, f"{self.title}: {detail}")
        return False


@pytest.fixture
def criterion():
    """Record an acceptance criterion outcome for the terminal summary."""
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[-1])):
        ok, text = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {text}")
