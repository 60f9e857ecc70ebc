"""Shared pytest plumbing: the acceptance scoreboard.

Acceptance tests register one line per criterion; the terminal summary
prints them after the run, outside capture, so the scoreboard shows up in
any ``pytest`` invocation that executed those tests.
"""

SCOREBOARD: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not SCOREBOARD:
        return
    terminalreporter.section("acceptance scoreboard")
    for line in SCOREBOARD:
        terminalreporter.write_line(line)
