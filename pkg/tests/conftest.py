def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for tag in sorted(VERDICTS, key=lambda t: int(t[1:])):
        terminalreporter.write_line(VERDICTS[tag])
