import pytest

# filled by test_acceptance.py: criterion number -> (description, passed, detail)
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        description, passed, detail = ACCEPTANCE_RESULTS[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {description} ({detail})")


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary."""
    state = {}

    def start(number, description):
        state.update(number=number, description=description, detail="")

    def note(detail):
        state["detail"] = detail

    yield start, note
    if state:
        call = getattr(request.node, "rep_call", None)
        passed = call is not None and call.passed
        ACCEPTANCE_RESULTS[state["number"]] = (state["description"], passed, state["detail"] or "-")


@pytest.hookimpl(wrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    report = yield
    if report.when == "call":
        item.rep_call = report
    return report
