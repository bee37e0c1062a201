"""Exact rational polyhedral cones.

A ``Cone`` is created from generators. The facet description and the
canonical ray description are derived lazily with the double description
method, so cones that are only used for membership-free bookkeeping stay
cheap. Cones need not be strictly convex; the lineality space is carried
alongside the rays.

Canonical form: the lineality space as an HNF lattice basis, and the rays
as primitive integer vectors reduced modulo the lineality space (orthogonal
projection), sorted lexicographically. Two cones are equal iff their
canonical forms agree.
"""

from fractions import Fraction
from functools import cached_property

from . import linalg as la
from .config import resolve
from .errors import FaceEnumerationTooLarge
from .lp import feasible_point


def _dd(constraints, d):
    """Double description of {x in Q^d : a.x >= 0 for all constraints a}.

    Returns (lines, rays): a basis of the lineality space and a minimal set
    of rays generating the cone modulo that space. Vectors are integral.
    """
    lines = [tuple(r) for r in la.identity(d)]
    rays = []
    done = []
    for a in constraints:
        if not any(a):
            continue
        lvals = [la.dot(a, l) for l in lines]
        k = next((i for i, v in enumerate(lvals) if v), None)
        if k is not None:
            line = lines.pop(k)
            al = lvals.pop(k)
            if al < 0:
                line, al = tuple(-x for x in line), -al
            lines = [l if v == 0 else la.primitive([al * x - v * y for x, y in zip(l, line)])
                     for l, v in zip(lines, lvals)]
            new_rays = []
            for r in rays:
                v = la.dot(a, r)
                new_rays.append(r if v == 0 else la.primitive([al * x - v * y for x, y in zip(r, line)]))
            rays = new_rays + [line]
            done.append(a)
            continue
        vals = [la.dot(a, r) for r in rays]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            done.append(a)
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        tight = [frozenset(j for j, c in enumerate(done) if la.dot(c, r) == 0) for r in rays]
        need = d - len(lines) - 2
        out = [r for r, v in zip(rays, vals) if v >= 0]
        for p in pos:
            for n in neg:
                common = tight[p] & tight[n]
                if len(common) < need:
                    continue
                if any(common <= tight[o] for o in range(len(rays)) if o != p and o != n):
                    continue
                vp, vn = vals[p], vals[n]
                out.append(la.primitive([vp * x - vn * y for x, y in zip(rays[n], rays[p])]))
        rays = list(dict.fromkeys(out))
        done.append(a)
    return lines, rays


def _reduce_modulo(vectors, subspace, d):
    """Orthogonally project integer vectors away from a subspace, primitivized."""
    if not subspace:
        return [tuple(v) for v in vectors]
    gram_inv = la.inverse([[la.dot(b, c) for c in subspace] for b in subspace])
    out = []
    for v in vectors:
        coeffs = [la.dot(b, v) for b in subspace]
        lam = [sum(g * c for g, c in zip(row, coeffs)) for row in gram_inv]
        w = [Fraction(v[j]) - sum(l * b[j] for l, b in zip(lam, subspace)) for j in range(d)]
        out.append(la.primitive(w))
    return out


class Cone:
    """A rational polyhedral cone in Q^ambient_dim.

    Args:
      generators: rational vectors generating the cone (zero vectors are
        ignored, an empty list gives the zero cone).
      ambient_dim: required when there are no generators.
    """

    def __init__(self, generators, ambient_dim=None):
        gens = [tuple(g) for g in generators]
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient_dim needed for a cone without generators")
            ambient_dim = len(gens[0])
        if any(len(g) != ambient_dim for g in gens):
            raise ValueError("generator length differs from ambient dimension")
        self.ambient_dim = ambient_dim
        self.generators = tuple(dict.fromkeys(g for g in la.integral_rows(gens) if any(g)))

    @classmethod
    def from_inequalities(cls, ambient_dim, inequalities, equations=()):
        """The cone {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}."""
        cons = list(la.integral_rows(inequalities))
        for e in la.integral_rows(equations):
            cons.append(e)
            cons.append(tuple(-x for x in e))
        lines, rays = _dd(cons, ambient_dim)
        gens = list(rays) + list(lines) + [tuple(-x for x in l) for l in lines]
        return cls(gens, ambient_dim)

    @classmethod
    def zero(cls, ambient_dim):
        return cls((), ambient_dim)

    @classmethod
    def full(cls, ambient_dim):
        eye = la.identity(ambient_dim)
        return cls(list(eye) + [tuple(-x for x in r) for r in eye], ambient_dim)

    # -- descriptions -----------------------------------------------------

    @cached_property
    def _hrep(self):
        d = self.ambient_dim
        lines, rays = _dd(self.generators, d)
        equations = la.hnf_basis(lines, d)
        facets = sorted(set(_reduce_modulo(rays, equations, d)))
        return equations, tuple(facets)

    @cached_property
    def _vrep(self):
        d = self.ambient_dim
        equations, facets = self._hrep
        cons = list(facets)
        for e in equations:
            cons.append(e)
            cons.append(tuple(-x for x in e))
        lines, rays = _dd(cons, d)
        lineality = la.hnf_basis(lines, d)
        canon = sorted(set(_reduce_modulo(rays, lineality, d)))
        return lineality, tuple(canon)

    @property
    def equations(self):
        """Integral basis of the linear forms vanishing on the cone."""
        return self._hrep[0]

    @property
    def facets(self):
        """Inward facet normals, irredundant, reduced modulo the equations."""
        return self._hrep[1]

    @property
    def lineality(self):
        return self._vrep[0]

    @property
    def rays(self):
        """Canonical primitive rays (modulo lineality), sorted."""
        return self._vrep[1]

    def full_generators(self):
        """Canonical rays plus both signs of the lineality basis."""
        return self.rays + self.lineality + tuple(tuple(-x for x in l) for l in self.lineality)

    @property
    def key(self):
        return (self.ambient_dim, self.lineality, self.rays)

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.lineality:
            return f"Cone(rays={list(self.rays)}, lineality={list(self.lineality)})"
        return f"Cone({list(self.rays)}, ambient_dim={self.ambient_dim})"

    # -- basic invariants ---------------------------------------------------

    @cached_property
    def dim(self):
        return la.rank(self.generators, self.ambient_dim)

    def is_zero(self):
        return not self.generators

    def is_strictly_convex(self):
        return not self.lineality

    def is_simplicial(self):
        return self.is_strictly_convex() and len(self.rays) == self.dim

    def is_regular(self):
        """Simplicial, with primitive rays extending to a lattice basis."""
        if not self.is_simplicial():
            return False
        if not self.rays:
            return True
        return all(x == 1 for x in la.elementary_divisors(self.rays, self.ambient_dim))

    def is_full_dimensional(self):
        return self.dim == self.ambient_dim

    def is_linear_subspace(self):
        return not self.rays

    # -- membership -------------------------------------------------------

    def contains(self, x):
        eqs, facets = self._hrep
        return all(la.dot(e, x) == 0 for e in eqs) and all(la.dot(f, x) >= 0 for f in facets)

    def relint_contains(self, x):
        eqs, facets = self._hrep
        return all(la.dot(e, x) == 0 for e in eqs) and all(la.dot(f, x) > 0 for f in facets)

    def contains_cone(self, other):
        return all(self.contains(g) for g in other.generators)

    def relint_point(self):
        """An integral point of the relative interior (sum of generators)."""
        return tuple(sum(g[j] for g in self.generators) for j in range(self.ambient_dim))


def dual_cone(c):
    """The dual cone {u : u.x >= 0 for x in c}."""
    eqs, facets = c._hrep
    gens = list(facets) + list(eqs) + [tuple(-x for x in e) for e in eqs]
    return Cone(gens, c.ambient_dim)


def faces(c, limits=None):
    """All faces of c, from c itself down to its lineality space.

    Faces are intersections of facets; each is recorded by the set of
    canonical rays it contains.

    Raises:
      FaceEnumerationTooLarge: more faces than the configured cap.
    """
    cap = resolve(limits).max_faces
    rays = c.rays
    facet_sets = [frozenset(i for i, r in enumerate(rays) if la.dot(f, r) == 0) for f in c.facets]
    top = frozenset(range(len(rays)))
    seen = {top}
    queue = [top]
    while queue:
        s = queue.pop()
        for t in facet_sets:
            u = s & t
            if u not in seen:
                seen.add(u)
                if len(seen) > cap:
                    raise FaceEnumerationTooLarge(f"more than {cap} faces")
                queue.append(u)
    lin = list(c.lineality) + [tuple(-x for x in l) for l in c.lineality]
    order = sorted(seen, key=lambda s: (len(s), sorted(s)))
    return [Cone([rays[i] for i in sorted(s)] + lin, c.ambient_dim) for s in order]


def is_face_of(f, c):
    """Whether f is a face of c."""
    if f.ambient_dim != c.ambient_dim or not c.contains_cone(f):
        return False
    return f == minimal_face(c, f.relint_point())


def minimal_face(c, x):
    """The smallest face of c containing the point x of c."""
    tight = [fa for fa in c.facets if la.dot(fa, x) == 0]
    rays = [r for r in c.rays if all(la.dot(fa, r) == 0 for fa in tight)]
    lin = list(c.lineality) + [tuple(-v for v in l) for l in c.lineality]
    return Cone(rays + lin, c.ambient_dim)


def relint_overlap(c1, c2):
    """Whether the relative interiors of c1 and c2 meet.

    Decided exactly: some strictly positive combination of the generators of
    c1 equals one of c2. By homogeneity "strictly positive" becomes ">= 1".
    """
    if c1.ambient_dim != c2.ambient_dim:
        raise ValueError("cones live in different spaces")
    g1, g2 = c1.generators, c2.generators
    n1, n2 = len(g1), len(g2)
    nvars = n1 + n2
    eqs = []
    for j in range(c1.ambient_dim):
        row = [g[j] for g in g1] + [-g[j] for g in g2]
        eqs.append((row, 0))
    ineqs = []
    for i in range(nvars):
        row = [0] * nvars
        row[i] = 1
        ineqs.append((row, 1))
    return feasible_point(nvars, eqs, ineqs) is not None


def relint_inside(inner, outer):
    """Whether inner° is contained in outer° (for inner inside outer)."""
    return outer.contains_cone(inner) and outer.relint_contains(inner.relint_point())


def intersect(c1, c2):
    return intersect_all([c1, c2])


def intersect_all(cones):
    cones = list(cones)
    d = cones[0].ambient_dim
    ineqs, eqs = [], []
    for c in cones:
        ineqs.extend(c.facets)
        eqs.extend(c.equations)
    return Cone.from_inequalities(d, ineqs, eqs)


def minkowski_sum(cones, ambient_dim=None):
    cones = list(cones)
    if ambient_dim is None:
        ambient_dim = cones[0].ambient_dim
    return Cone([g for c in cones for g in c.generators], ambient_dim)


def linear_span(c):
    """Saturated integral basis of lin(c)."""
    return la.span(c.generators, c.ambient_dim)


def image(c, m, nrows):
    """Image of c under the linear map given by the matrix m."""
    return Cone([la.matvec(m, g) for g in c.generators], nrows)


def separating_form(c1, c2, subspace=None):
    """A linear form separating c1 and c2 in the sense of fans.

    Looks for u with u >= 0 on c1, u <= 0 on c2 and
    u-perp meets each c_i exactly in c1 & c2. If ``subspace`` (a list of
    vectors) is given, u is restricted to their span.

    Returns:
      u as a tuple of Fractions, or None if no such form exists.
    """
    d = c1.ambient_dim
    rho = intersect(c1, c2)
    basis = list(la.identity(d)) if subspace is None else [tuple(v) for v in subspace]
    nb = len(basis)
    eqs, ineqs = [], []

    def form(v):
        return [la.dot(b, v) for b in basis]

    for c, sign in ((c1, 1), (c2, -1)):
        if any(not rho.contains(l) for l in c.lineality):
            return None
        inside = [r for r in c.rays if rho.contains(r)]
        lin = list(c.lineality) + [tuple(-x for x in l) for l in c.lineality]
        if Cone(inside + lin, d) != rho:
            return None
        for l in c.lineality:
            eqs.append((form(l), 0))
        for r in c.rays:
            if rho.contains(r):
                eqs.append((form(r), 0))
            else:
                ineqs.append(([sign * x for x in form(r)], 1))
    y = feasible_point(nb, eqs, ineqs)
    if y is None:
        return None
    return tuple(sum(yi * b[j] for yi, b in zip(y, basis)) for j in range(d))


def is_separating_form(u, c1, c2):
    """Check the separation conditions for a given form u."""
    rho = intersect(c1, c2)
    d = c1.ambient_dim
    for c, sign in ((c1, 1), (c2, -1)):
        gens = c.full_generators()
        if any(sign * la.dot(u, g) < 0 for g in gens):
            return False
        kernel = Cone([g for g in gens if la.dot(u, g) == 0], d)
        if kernel != rho:
            return False
    return True
