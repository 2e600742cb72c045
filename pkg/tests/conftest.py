import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--update-goldens", action="store_true", default=False,
                     help="rewrite golden files from the current implementation")


@pytest.fixture
def update_goldens(request):
    return request.config.getoption("--update-goldens")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


GOLDEN_DIR = __import__("pathlib").Path(__file__).parent / "golden"


@pytest.fixture
def golden(update_goldens):
    """Compare ``data`` with tests/golden/<name>.json; rewrite it under --update-goldens."""
    import json

    def check(name, data):
        path = GOLDEN_DIR / f"{name}.json"
        if update_goldens:
            path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
        if not path.exists():
            pytest.fail(f"missing golden {path.name}; run pytest --update-goldens")
        assert data == json.loads(path.read_text())

    return check
