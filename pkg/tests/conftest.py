import acceptance_report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = acceptance_report.summary_lines()
    if not lines:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance gate", sep="-")
    for line in lines:
        terminalreporter.write_line(line)
