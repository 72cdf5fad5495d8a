import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not any(mod.RESULTS.values()):
        return
    terminalreporter.section("acceptance criteria")
    for n, title in mod.TITLES.items():
        rows = mod.RESULTS[n]
        if not rows:
            terminalreporter.write_line(f"criterion {n} [{title}]: NOT RUN")
            continue
        failed = sorted({label for label, ok in rows if not ok})
        verdict = "PASS" if not failed else "FAIL"
        line = f"criterion {n} [{title}]: {verdict} ({len(rows) - sum(not ok for _, ok in rows)}/{len(rows)} checks)"
        if failed:
            line += " failing: " + "; ".join(failed)
        terminalreporter.write_line(line)
