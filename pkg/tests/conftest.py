import pytest

from p2motive.hilb import HilbCache

ACCEPTANCE = {}


@pytest.fixture
def fresh_cache():
    return HilbCache()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``with criterion("1 ..."):`` asserts inside."""

    class _Rec:
        def __init__(self):
            self.label = None

        def __call__(self, label):
            self.label = label
            ACCEPTANCE[label] = "FAIL"
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            ACCEPTANCE[self.label] = "FAIL" if exc_type else "PASS"
            print(f"[{ACCEPTANCE[self.label]}] {self.label}")
            return False

    return _Rec()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{ACCEPTANCE[label]}] {label}")
