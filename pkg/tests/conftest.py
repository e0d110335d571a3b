import io
import json
from contextlib import redirect_stdout

import pytest

from pathstruve.cli import main

_ACCEPTANCE = {}


def record(criterion: str, passed: bool, detail: str) -> None:
    _ACCEPTANCE[criterion] = (passed, detail)


@pytest.fixture(scope="session")
def acceptance_record():
    return record


@pytest.fixture(scope="session")
def verify_all_payload(tmp_path_factory):
    """One in-process ``verify --case all --format json`` run shared by the suite."""
    out = tmp_path_factory.mktemp("verify") / "report.json"
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["verify", "--case", "all", "--format", "json", "--out", str(out)])
    return {"exit": code, "stdout": buf.getvalue(), "file": out.read_text(), "reports": json.loads(buf.getvalue())}


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
        passed, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
