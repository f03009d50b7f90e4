"""Collect acceptance outcomes and print one PASS/FAIL line per criterion."""

_outcomes: dict[int, list] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    if report.when != "call" and not (report.failed or report.skipped):
        return
    from test_acceptance import criterion_of

    name = report.nodeid.split("::")[-1]
    n = criterion_of(name)
    if n is None:
        return
    msg = ""
    if report.failed:
        crash = getattr(report.longrepr, "reprcrash", None)
        msg = crash.message.splitlines()[0] if crash is not None else ""
    _outcomes.setdefault(n, []).append((name, report.passed, msg))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import summary_lines

    terminalreporter.section("acceptance criteria")
    for line in summary_lines(_outcomes):
        terminalreporter.write_line(line)
