import sys


def pytest_terminal_summary(terminalreporter):
    # acceptance tests record one line per criterion; echo them after the
    # run so they survive output capture
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ANNOUNCED", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
