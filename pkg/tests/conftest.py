"""Prints one pass/fail line per acceptance criterion after the test run."""

CRITERIA = {
    "test_criterion_1_exact_proof_values": "exact counterexample reproduction",
    "test_criterion_2_binary_exhaustion": "binary sign-class exhaustion",
    "test_criterion_3_ternary_sweep": "ternary exhaustive sweep",
    "test_criterion_4_boundary_structure": "boundary minimum location",
    "test_criterion_5_invariants": "binary invariants",
    "test_criterion_6_inequalities": "inequality residuals",
    "test_criterion_7_property_suites": "randomized property suites",
}

_results = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if name in CRITERIA and (report.when == "call" or report.failed):
        _results[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, (name, title) in enumerate(CRITERIA.items(), start=1):
        outcome = _results.get(name)
        if outcome is not None:
            terminalreporter.write_line(
                f"criterion {number} ({title}): {outcome}"
            )
