"""Pytest wiring: print one PASS/FAIL line per acceptance criterion."""

from __future__ import annotations


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if getattr(report, "when", "call") != "call":
                continue
            results.append((nodeid.split("::", 1)[1], "PASS" if outcome == "passed" else "FAIL"))
    if results:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(results):
            terminalreporter.write_line(f"{verdict}  {name}")
