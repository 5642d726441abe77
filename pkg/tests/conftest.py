"""Prints the acceptance verdict lines after the run, outside capture."""

import sys


def pytest_terminal_summary(terminalreporter):
    for name, module in sys.modules.items():
        if name.rpartition(".")[2] == "test_acceptance":
            lines = getattr(module, "RESULTS", [])
            if lines:
                terminalreporter.section("acceptance criteria")
                for line in lines:
                    terminalreporter.write_line(line)
            return
