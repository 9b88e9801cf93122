import sys


def pytest_runtest_logreport(report):
    # one visible pass/fail line per acceptance criterion
    if "test_acceptance.py" not in report.nodeid or report.when != "call":
        return
    name = report.nodeid.split("::", 1)[-1]
    status = "PASS" if report.passed else "FAIL"
    sys.stderr.write(f"[acceptance] {name}: {status}\n")
