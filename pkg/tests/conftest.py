from pathlib import Path

import transmi

DATA = Path(transmi.__file__).parent / "data"

# acceptance criterion number -> outcome, filled in as tests report
_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    marker = "test_acceptance.py::test_ac"
    if marker not in report.nodeid:
        return
    key = report.nodeid.split("::test_ac", 1)[1].split("_", 1)[0]
    if report.when == "call" or report.failed or report.skipped:
        previous = _criteria.get(key)
        if report.skipped:
            outcome = "SKIP"
        else:
            outcome = "PASS" if report.passed else "FAIL"
        if previous != "FAIL":
            _criteria[key] = outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=int):
        terminalreporter.write_line(f"criterion {key}: {_criteria[key]}")
    terminalreporter.write_line("criterion 10: NOT TESTED (downstream task scores need pretrained checkpoints)")
