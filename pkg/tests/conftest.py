from hypothesis import settings

settings.register_profile("exact", max_examples=100, deadline=None)
settings.load_profile("exact")

# filled in by test_acceptance.py, reported after the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
