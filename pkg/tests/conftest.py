from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hookfusion import algebra, wreath

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@st.composite
def group_elements(draw, n):
    images = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return wreath.GroupElement(n, tuple(images), tuple(signs))


rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@st.composite
def algebra_elements(draw, n, max_terms=5):
    pairs = draw(st.lists(st.tuples(group_elements(n), rationals), max_size=max_terms))
    return algebra.linear_combination(n, ((c, algebra.from_group(g)) for g, c in pairs))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in sorted(ACCEPTANCE_RESULTS.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
