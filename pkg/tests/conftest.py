"""Shared bookkeeping for the acceptance gate.

test_acceptance.py registers one record per numbered criterion; after the
run, the terminal summary prints a single pass/fail line for each so the
gate can be read at a glance instead of scrolling through dots.
"""

ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        rec = ACCEPTANCE_RESULTS[num]
        tag = "[PASS]" if rec["status"] == "pass" else "[FAIL]"
        if rec["elapsed"] is None:
            timing = "not timed"
        else:
            timing = f"{rec['elapsed']:.2f}s of {rec['budget']:.0f}s budget"
        terminalreporter.write_line(f"{tag} C{num}: {rec['title']} ({timing})")
