import math

import pytest

from hsdiag import Dpi

KB5_DIAGNOSES = {("ax1", "ax3"), ("ax1", "ax4"), ("ax2", "ax3"), ("ax2", "ax5")}
KB5_CONFLICTS = {("ax1", "ax2"), ("ax2", "ax3", "ax4"), ("ax1", "ax3", "ax5"),
                 ("ax3", "ax4", "ax5")}

SEVEN_PR = (0.26, 0.18, 0.21, 0.41, 0.18, 0.40, 0.18)
# 1-based component ids
SEVEN_CONFLICTS_1 = [(1, 2, 5), (2, 4, 6), (1, 3, 4), (1, 5, 6, 7)]
SEVEN_EXPECTED_1 = [(1, 4), (1, 6), (4, 5), (2, 4, 6)]


def zero_based(sets):
    return [tuple(i - 1 for i in s) for s in sets]


def one_based(sets):
    return [tuple(i + 1 for i in s) for s in sets]


def make_kb5():
    return Dpi.from_cnf(
        ["A", "B", "C"],
        [("ax1", [["-A", "-B"]]), ("ax2", [["-A", "B"]]), ("ax3", [["-A", "-C"]]),
         ("ax4", [["-B", "C"]]), ("ax5", [["-A", "B", "C"]])],
        negative=[[["-A"]]],
    )


def make_seven():
    names = [f"ax{i}" for i in range(1, 8)]
    return Dpi.from_conflicts(names, zero_based(SEVEN_CONFLICTS_1), SEVEN_PR)


@pytest.fixture
def kb5():
    return make_kb5()


@pytest.fixture
def seven():
    return make_seven()


def named(dpi, diagnoses):
    return {tuple(dpi.names(d)) for d in diagnoses}


def non_increasing(values, tol=1e-12):
    return all(a >= b - tol for a, b in zip(values, values[1:]))


def binary_entropy(values):
    return -math.fsum(p * math.log(p) for p in values if p > 0)


# -- acceptance report --------------------------------------------------------

ACCEPTANCE = {}


class report:
    """Record a pass/fail line for acceptance criterion ``n``."""

    def __init__(self, n, title):
        self.n, self.title, self.notes = n, title, []

    def note(self, text):
        self.notes.append(text)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        detail = "; ".join(self.notes)
        if exc_type is not None:
            detail = (detail + "; " if detail else "") + f"{exc_type.__name__}: {exc}"[:300]
        line = f"criterion {self.n}: {status} - {self.title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE[self.n] = line
        print(line)
        return False


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
