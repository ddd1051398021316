"""Replay the acceptance-criterion PASS/FAIL lines in the terminal summary.

The acceptance tests write one line per criterion to the real stderr, but
pytest's fd-level capture swallows those for passing tests; collecting the
lines in the test module and printing them here keeps them visible in every
run (and in any teed log) without requiring -s.
"""

import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "CRITERION_LINES", None) if mod else None
    if not lines:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
