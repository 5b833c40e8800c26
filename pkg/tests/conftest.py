from pathlib import Path

import pytest

from hpindex import PaperRecord, ResearcherRecord

DATA = Path(__file__).parent / "data"

# (citations, n_pi, n_authors) for the five-paper record used across modules
WORKED = [(12, 2, 4), (9, 3, 3), (8, 2, 4), (4, 1, 1), (3, 1, 1)]


@pytest.fixture
def worked_record():
    return ResearcherRecord(
        "worked",
        tuple(PaperRecord(f"p{i}", c, a, pi) for i, (c, pi, a) in enumerate(WORKED, 1)),
    )


# -- acceptance summary: one PASS/FAIL line per criterion -------------------

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.get_closest_marker("acceptance"):
        label = (item.function.__doc__ or item.name).strip().splitlines()[0]
        detail = "; ".join(str(v) for k, v in rep.user_properties if k == "detail")
        _ACCEPTANCE.append((label, rep.outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, detail in _ACCEPTANCE:
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] {label}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
