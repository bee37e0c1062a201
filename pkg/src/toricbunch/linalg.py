"""Exact integer and rational linear algebra for lattices.

Matrices are tuples of row tuples holding Python ints (or Fractions where
noted). Because an empty tuple carries no column count, functions that may
meet a matrix without rows take the number of columns explicitly.

Row-style Hermite normal form is the canonical choice wherever a basis has
to be picked, so equal inputs always produce identical outputs.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

Matrix = tuple  # tuple[tuple[int, ...], ...]


def as_matrix(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m, ncols):
    return tuple(tuple(row[j] for row in m) for j in range(ncols))


def matmul(a, b, ncols=None):
    """Product a*b; ``ncols`` is the column count of b, needed if b is empty."""
    if ncols is None:
        ncols = len(b[0]) if b else 0
    cols = transpose(b, ncols)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
                 for row in a)


def matvec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def primitive(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    den = reduce(lcm, (Fraction(x).denominator for x in v), 1)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def integral_rows(rows):
    """Clear denominators row by row (rays and spans are unaffected)."""
    return tuple(primitive(r) for r in rows)


def _xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf(m, ncols=None):
    """Row-style Hermite normal form.

    Args:
      m: integer matrix.
      ncols: column count (only needed when m has no rows).

    Returns:
      (h, u) with h = u*m and u unimodular. Pivots of h are positive, the
      entries above a pivot lie in [0, pivot), and zero rows come last.
    """
    a = [list(r) for r in m]
    nrows = len(a)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    u = [list(r) for r in identity(nrows)]
    p = 0
    for col in range(ncols):
        if p == nrows:
            break
        for i in range(p + 1, nrows):
            y = a[i][col]
            if y == 0:
                continue
            x = a[p][col]
            g, s, t = _xgcd(x, y)
            xg, yg = x // g, y // g
            for mat in (a, u):
                rp, ri = mat[p], mat[i]
                mat[p] = [s * v + t * w for v, w in zip(rp, ri)]
                mat[i] = [-yg * v + xg * w for v, w in zip(rp, ri)]
        piv = a[p][col]
        if piv == 0:
            continue
        if piv < 0:
            a[p] = [-v for v in a[p]]
            u[p] = [-v for v in u[p]]
            piv = -piv
        for i in range(p):
            q = a[i][col] // piv
            if q:
                a[i] = [v - q * w for v, w in zip(a[i], a[p])]
                u[i] = [v - q * w for v, w in zip(u[i], u[p])]
        p += 1
    return as_matrix(a), as_matrix(u)


def hnf_basis(vectors, ncols):
    """Nonzero rows of the HNF: a canonical basis of the generated lattice."""
    h, _ = hnf(vectors, ncols)
    return tuple(r for r in h if any(r))


def snf(m, ncols=None):
    """Smith normal form.

    Returns:
      (s, u, v) with s = u*m*v diagonal, nonnegative, each diagonal entry
      dividing the next, and u, v unimodular.
    """
    a = [list(r) for r in m]
    nrows = len(a)
    if ncols is None:
        ncols = len(a[0]) if a else 0
    u = [list(r) for r in identity(nrows)]
    v = [list(r) for r in identity(ncols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (a, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for mat in (a, v):
            for row in mat:
                row[dst] += q * row[src]

    for t in range(min(nrows, ncols)):
        entries = [(abs(a[i][j]), i, j) for i in range(t, nrows)
                   for j in range(t, ncols) if a[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            clean = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, ncols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        clean = False
            if not clean:
                cands = [(abs(a[i][t]), i, t) for i in range(t + 1, nrows) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t + 1, ncols) if a[t][j]]
                _, i1, j1 = min(cands)
                if i1 != t:
                    swap_rows(t, i1)
                else:
                    swap_cols(t, j1)
                continue
            bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return as_matrix(a), as_matrix(u), as_matrix(v)


def elementary_divisors(m, ncols=None):
    """Nonzero diagonal entries of the Smith form."""
    s, _, _ = snf(m, ncols)
    return tuple(s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i])


def det(m):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _echelon(rows, ncols):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows, ncols=None):
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return len(_echelon(rows, ncols)[1])


def inverse(m):
    """Inverse of a square rational matrix, as Fractions."""
    n = len(m)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(m)]
    red, piv = _echelon(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(r[n:]) for r in red[:n])


def solve(m, b, ncols):
    """Some rational x with m*x = b, or None."""
    aug = [list(r) + [bi] for r, bi in zip(m, b)]
    red, piv = _echelon(aug, ncols + 1)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, c in zip(red, piv):
        x[c] = row[ncols]
    return tuple(x)


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of Z^ambient given by linearly independent basis rows."""

    ambient: int
    basis: Matrix

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, x):
        """Membership of an integer vector."""
        if not self.basis:
            return not any(x)
        y = solve(transpose(self.basis, self.ambient), x, len(self.basis))
        return y is not None and all(c.denominator == 1 for c in y)


def lattice(vectors, ambient):
    """Sublattice generated by integer vectors, with canonical HNF basis."""
    return Sublattice(ambient, hnf_basis(as_matrix(vectors), ambient))


def full_lattice(n):
    return Sublattice(n, identity(n))


def kernel_basis(m, ncols):
    """Saturated integer kernel {x : m x = 0} with HNF basis."""
    if not m:
        return full_lattice(ncols)
    h, u = hnf(transpose(m, ncols), len(m))
    kernel = [u[i] for i in range(ncols) if not any(h[i])]
    return lattice(kernel, ncols)


def is_surjective(m, ncols=None):
    """Whether m maps Z^ncols onto Z^rows."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    divs = elementary_divisors(m, ncols)
    return len(divs) == len(m) and all(d == 1 for d in divs)


def saturate(s):
    """The saturation lin(s) cap Z^ambient."""
    if s.rank == 0:
        return s
    orth = kernel_basis(s.basis, s.ambient)
    return kernel_basis(orth.basis, s.ambient)


def index_in_saturation(s):
    """[saturate(s) : s] as the product of the elementary divisors."""
    out = 1
    for d in elementary_divisors(s.basis, s.ambient):
        out *= d
    return out


def is_primitive(s):
    return saturate(s) == Sublattice(s.ambient, hnf_basis(s.basis, s.ambient))


def span(vectors, ambient):
    """Rational span of vectors, as a saturated lattice with HNF basis."""
    return saturate(lattice(integral_rows(vectors), ambient))


def orthogonal_complement(s):
    return kernel_basis(s.basis, s.ambient)


def subspace_intersection(subspaces, ambient):
    """Intersection of rational subspaces, each given as a list of vectors.

    Returns the saturated lattice of integral points of the intersection.
    """
    normals = []
    for vecs in subspaces:
        normals.extend(orthogonal_complement(span(vecs, ambient)).basis)
    if not normals:
        return full_lattice(ambient)
    return kernel_basis(tuple(normals), ambient)


def lattice_intersection(lattices):
    """Intersection of sublattices of a common Z^n, not saturated."""
    lattices = list(lattices)
    if not lattices:
        raise ValueError("need at least one lattice")
    acc = lattices[0]
    n = acc.ambient
    acc = Sublattice(n, hnf_basis(acc.basis, n))
    for other in lattices[1:]:
        if acc.rank == 0:
            break
        if other.rank == 0:
            return Sublattice(n, ())
        stacked = acc.basis + tuple(tuple(-x for x in r) for r in other.basis)
        rel = kernel_basis(transpose(stacked, n), len(stacked))
        r1 = acc.rank
        points = [tuple(sum(c * b[j] for c, b in zip(vec[:r1], acc.basis)) for j in range(n))
                  for vec in rel.basis]
        acc = lattice(points, n)
    return acc


def image(s, m, nrows):
    """Image lattice of s under the matrix m (nrows x s.ambient)."""
    pts = [matvec(m, b) for b in s.basis]
    return lattice(pts, nrows)
