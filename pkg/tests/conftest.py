from itertools import combinations

import pytest

from lpbus.hamming import BitWord, Code

# Two 3-limited-weight codes of length 6 and size 32; both contain every word
# of weight <= 2 and differ only in the ten weight-3 words below.
LWC_FIRST_EXTRA = [
    "000111", "001011", "010011", "100011", "001110",
    "111000", "110100", "101100", "011100", "110001",
]
LWC_SECOND_EXTRA = [
    "100011", "100101", "100110", "101001", "101010",
    "101100", "110001", "110010", "110100", "111000",
]


def low_weight_words(n, max_weight):
    return [
        BitWord.from_support(n, c)
        for w in range(max_weight + 1)
        for c in combinations(range(1, n + 1), w)
    ]


@pytest.fixture
def lwc_pair():
    base = low_weight_words(6, 2)
    first = Code(6, base + [BitWord.from_string(s) for s in LWC_FIRST_EXTRA])
    second = Code(6, base + [BitWord.from_string(s) for s in LWC_SECOND_EXTRA])
    return first, second


_acceptance = {}


def pytest_runtest_logreport(report):
    criterion = dict(report.user_properties).get("criterion")
    if criterion is None:
        return
    if report.when == "call" or report.outcome == "failed":
        previous = _acceptance.get(criterion, True)
        _acceptance[criterion] = previous and report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_acceptance, key=lambda c: int(c.split(".")[0])):
        status = "PASS" if _acceptance[criterion] else "FAIL"
        terminalreporter.write_line(f"[{status}] {criterion}")
