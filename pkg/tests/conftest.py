"""Replay acceptance verdict lines after the run, whatever the capture mode."""

import verdicts


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if verdicts.LINES:
        terminalreporter.section("acceptance criteria")
        for line in verdicts.LINES:
            terminalreporter.write_line(line)
