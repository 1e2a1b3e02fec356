"""Collects acceptance-criterion outcomes and prints one line per criterion."""

_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_criteria.items(), key=lambda kv: int(kv[0].split("_criterion_")[1].split("_")[0])):
        name = nodeid.split("::")[-1][len("test_criterion_"):]
        num, _, what = name.partition("_")
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  {what.replace('_', ' ')}")
