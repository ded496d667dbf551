"""Shared pytest plumbing: collect acceptance-criterion outcomes and print
one line per criterion at the end of the run."""

_CRITERION_LINES: dict[int, str] = {}


def record_criterion(number: int, passed: bool, description: str):
    status = "PASS" if passed else "FAIL"
    _CRITERION_LINES[number] = f"criterion {number:2d}: {status}  {description}"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERION_LINES):
        terminalreporter.write_line(_CRITERION_LINES[number])
