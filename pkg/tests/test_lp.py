from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from toricbunch.lp import feasible_point, is_feasible

rows = st.lists(st.integers(-4, 4), min_size=3, max_size=3)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
       st.lists(rows, min_size=0, max_size=3),
       st.lists(rows, min_size=0, max_size=4),
       st.lists(st.integers(0, 3), min_size=0, max_size=2))
def test_systems_built_around_a_point_are_feasible(point, eq_rows, ineq_rows, slack):
    eqs = [(a, sum(x * y for x, y in zip(a, point))) for a in eq_rows]
    ineqs = [(a, sum(x * y for x, y in zip(a, point)) - s)
             for a, s in zip(ineq_rows, slack + [0] * len(ineq_rows))]
    x = feasible_point(3, eqs, ineqs)
    assert x is not None
    for a, b in eqs:
        assert sum(Fraction(c) * v for c, v in zip(a, x)) == b
    for a, b in ineqs:
        assert sum(Fraction(c) * v for c, v in zip(a, x)) >= b


@settings(max_examples=100, deadline=None)
@given(rows.filter(any), st.lists(rows, max_size=3))
def test_contradictory_pair_is_infeasible(a, extra):
    ineqs = [(a, 1), ([-x for x in a], 0)] + [(r, -100) for r in extra]
    assert feasible_point(3, (), ineqs) is None


def test_small_cases():
    assert feasible_point(1, [([2], 1)]) == (Fraction(1, 2),)
    assert not is_feasible(1, [([0], 1)])
    assert feasible_point(2) == (0, 0)
    assert feasible_point(1, (), [([1], -5)], nonneg=[0])[0] >= 0
    assert not is_feasible(1, (), [([-1], 1)], nonneg=[0])
    # rational coefficients are accepted
    x = feasible_point(2, [([Fraction(1, 2), Fraction(1, 3)], 1)], [([1, 0], 1)])
    assert x[0] >= 1 and x[0] / 2 + x[1] / 3 == 1
