from __future__ import annotations

import pathlib

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from scgrowth.words import free_reduce, make_presentation, parse_presentation

ROOT = pathlib.Path(__file__).resolve().parent.parent
PRESENTATIONS = ROOT / "presentations"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def load(name: str):
    return parse_presentation((PRESENTATIONS / f"{name}.txt").read_text())


@pytest.fixture(scope="session")
def F2():
    return load("f2")


@pytest.fixture(scope="session")
def SURF():
    return load("surf")


@pytest.fixture(scope="session")
def ZZ():
    return load("zz")


@pytest.fixture(scope="session")
def TWO_REL():
    return make_presentation("ab", ["aaaaaab", "aaab"])


def words(rank: int, max_len: int = 12, reduced: bool = False):
    letters = [x for i in range(1, rank + 1) for x in (i, -i)]
    s = st.lists(st.sampled_from(letters), max_size=max_len).map(tuple)
    return s.map(free_reduce) if reduced else s


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def report(n: int, ok: bool, detail: str, elapsed: float | None = None) -> bool:
    t = "" if elapsed is None else f" ({elapsed:.2f} s)"
    line = f"criterion {n:>2} {'PASS' if ok else 'FAIL'}: {detail}{t}"
    ACCEPTANCE[n] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
