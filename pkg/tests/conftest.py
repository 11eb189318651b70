"""Shared pytest hooks for the suite.

The acceptance tests record one verdict line per numbered criterion; the
terminal summary below replays them after the run so they are visible even
under output capture.
"""

criterion_results = []


def pytest_terminal_summary(terminalreporter):
    if criterion_results:
        terminalreporter.section("acceptance criteria")
        for line in criterion_results:
            terminalreporter.write_line(line)
