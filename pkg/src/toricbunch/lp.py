"""Exact feasibility of rational linear systems.

A phase-one simplex on an integer tableau: every row is kept scaled by the
current pivot product (fraction-free, Bareiss-style), so all arithmetic is
on Python ints and divisions are exact. Bland's rule rules out cycling.

Strict inequalities never occur here; callers exploit homogeneity and ask
for ``>= 1`` instead of ``> 0``.
"""

from fractions import Fraction
from functools import reduce
from math import lcm


def _scale_row(coeffs, rhs):
    if type(rhs) is int and all(type(c) is int for c in coeffs):
        return list(coeffs), rhs
    den = reduce(lcm, (Fraction(c).denominator for c in coeffs), Fraction(rhs).denominator)
    return [int(Fraction(c) * den) for c in coeffs], int(Fraction(rhs) * den)


def feasible_point(nvars, equalities=(), inequalities=(), nonneg=()):
    """Find a rational point of a polyhedron.

    Args:
      nvars: number of variables.
      equalities: pairs (a, b) meaning a.x == b.
      inequalities: pairs (a, b) meaning a.x >= b.
      nonneg: indices of variables constrained to be >= 0; all other
        variables are free.

    Returns:
      A tuple of Fractions satisfying every constraint, or None when the
      system is infeasible.
    """
    nonneg = set(nonneg)
    # column layout: each variable gets one column, free ones get a second
    # (negative part); inequalities get a surplus column.
    colmap = []
    for i in range(nvars):
        colmap.append((i, 1))
        if i not in nonneg:
            colmap.append((i, -1))
    nstruct = len(colmap)
    nsurplus = len(inequalities)
    rows = []
    for k, (a, b) in enumerate(list(equalities) + list(inequalities)):
        a = list(a)
        row = [a[i] * sgn for i, sgn in colmap]
        surplus = [0] * nsurplus
        if k >= len(equalities):
            surplus[k - len(equalities)] = -1
        ints, rhs = _scale_row(row + surplus, b)
        if rhs < 0:
            ints, rhs = [-x for x in ints], -rhs
        rows.append((ints, rhs))
    m = len(rows)
    if m == 0:
        return tuple(Fraction(0) for _ in range(nvars))
    ncols = nstruct + nsurplus
    tab = []
    for i, (ints, rhs) in enumerate(rows):
        art = [0] * m
        art[i] = 1
        tab.append(ints + art + [rhs])
    obj = [-sum(tab[i][j] for i in range(m)) for j in range(ncols)] + [0] * m
    obj.append(-sum(tab[i][-1] for i in range(m)))
    basis = [ncols + i for i in range(m)]
    denom = 1
    while True:
        enter = next((j for j in range(ncols + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i in range(m):
            a = tab[i][enter]
            if a <= 0:
                continue
            if leave is None:
                leave = i
                continue
            # compare rhs_i / a_i with rhs_leave / a_leave
            lhs = tab[i][-1] * tab[leave][enter]
            rhs = tab[leave][-1] * a
            if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                leave = i
        if leave is None:  # cannot happen in phase one (objective bounded below)
            break
        prow = tab[leave]
        piv = prow[enter]
        for i in range(m):
            if i == leave:
                continue
            row = tab[i]
            f = row[enter]
            if f == 0:
                tab[i] = [(x * piv) // denom for x in row]
            else:
                tab[i] = [(x * piv - f * y) // denom for x, y in zip(row, prow)]
        f = obj[enter]
        obj = [(x * piv - f * y) // denom for x, y in zip(obj, prow)]
        denom = piv
        basis[leave] = enter
    if obj[-1] != 0:
        return None
    # point = nums / denom, checked in integers before leaving the tableau
    nums = [0] * ncols
    for i, var in enumerate(basis):
        if var < ncols:
            nums[var] = tab[i][-1]
    xnum = [0] * nvars
    for col, (i, sgn) in enumerate(colmap):
        xnum[i] += sgn * nums[col]
    _check(xnum, denom, equalities, inequalities, nonneg)
    return tuple(Fraction(v, denom) for v in xnum)


def _check(xnum, denom, equalities, inequalities, nonneg):
    # denom > 0: it is a product of positive pivots
    for a, b in equalities:
        assert sum(c * v for c, v in zip(a, xnum)) == b * denom, \
            "simplex produced an infeasible point"
    for a, b in inequalities:
        assert sum(c * v for c, v in zip(a, xnum)) >= b * denom, \
            "simplex produced an infeasible point"
    assert all(xnum[i] >= 0 for i in nonneg)


def is_feasible(nvars, equalities=(), inequalities=(), nonneg=()):
    return feasible_point(nvars, equalities, inequalities, nonneg) is not None
