import itertools

import pytest
from hypothesis import strategies as st

from homconj.perm import Permutation, parse_cycles

ACCEPTANCE_LINES = []


def P(text, n):
    return parse_cycles(text, n)


def all_perms(n):
    return [Permutation(p, check=False) for p in itertools.permutations(range(1, n + 1))]


def perms(min_n=1, max_n=8):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation))


def perm_pairs(min_n=1, max_n=8, count=2):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(*[st.permutations(list(range(1, n + 1))).map(Permutation)] * count))


@pytest.fixture
def acceptance_line():
    def record(number, ok, detail):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
