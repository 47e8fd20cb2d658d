def pytest_terminal_summary(terminalreporter):
    reports = [
        r for key in ("passed", "failed")
        for r in terminalreporter.stats.get(key, [])
        if r.when == "call" and "test_acceptance" in r.nodeid
    ]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        verdict = "PASS" if r.passed else "FAIL"
        terminalreporter.write_line(f"{verdict}  {r.nodeid.split('::')[-1]}")
