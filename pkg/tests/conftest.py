import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[int, list] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    node = report.nodeid
    if "test_acceptance.py::test_criterion_" not in node:
        return
    num = int(node.split("test_criterion_")[1][:2])
    _CRITERIA.setdefault(num, []).append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        results = _CRITERIA.get(num)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d} {status}  {CRITERIA[num]}")
