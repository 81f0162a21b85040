import sys


def pytest_terminal_summary(terminalreporter):
    """One visible pass/fail line per acceptance criterion."""
    mod = sys.modules.get("tests.test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
