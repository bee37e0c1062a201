"""Fans, projectable fans and the passage between fans and bunches.

Conventions:
  * A ``Fan`` lists primitive rays and its maximal cones as sorted tuples
    of ray indices.
  * A ``ProjectableFan`` lives on the dual side: ``dpc`` is a projected cone
    (P, delta) and ``max_faces`` are faces of delta (generator index sets).
    ``dpc.dual`` is the projected cone (Q, gamma) carrying the bunch, and
    the face J of delta corresponds to the face of gamma with the
    complementary indices.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations, permutations
from math import lcm

import networkx as nx

from . import linalg as la
from .bunches import Bunch, covering_collection, is_standard, minimal_cones
from .cones import Cone, image, intersect_all, relint_inside, separating_form
from .config import resolve
from .errors import (Degenerate, FaceEnumerationTooLarge, InvalidFan, NotFullDimensional,
                     NotMaximal, NotSimplicial, NotStandard)
from .lp import feasible_point
from .projected import ProjectedCone, invariant_separation


class Fan:
    """A fan in Z^n_rank given by primitive rays and maximal cones.

    Args:
      n_rank: rank of the lattice N.
      rays: ray generators (made primitive).
      max_cones: ray index collections, one per maximal cone.
    """

    def __init__(self, n_rank, rays, max_cones):
        self.n_rank = n_rank
        self.rays = la.integral_rows(rays)
        cones = sorted({tuple(sorted(set(c))) for c in max_cones})
        self.max_cones = tuple(cones)
        if any(len(r) != n_rank for r in self.rays):
            raise InvalidFan("ray of wrong length", condition="shape")
        if any(not any(r) for r in self.rays):
            raise InvalidFan("zero ray", condition="shape")
        if len(set(self.rays)) != len(self.rays):
            raise InvalidFan("repeated ray", condition="distinct rays")
        used = {i for c in self.max_cones for i in c}
        if any(i < 0 or i >= len(self.rays) for i in used):
            raise InvalidFan("ray index out of range", condition="shape")
        if used != set(range(len(self.rays))):
            raise InvalidFan("some ray lies in no maximal cone", condition="rays used")
        sets = [frozenset(c) for c in self.max_cones]
        if any(a < b for a in sets for b in sets):
            raise InvalidFan("a maximal cone is contained in another", condition="antichain")

    def __eq__(self, other):
        return (isinstance(other, Fan) and self.n_rank == other.n_rank
                and self.rays == other.rays and self.max_cones == other.max_cones)

    def __hash__(self):
        return hash((self.n_rank, self.rays, self.max_cones))

    def __repr__(self):
        return f"Fan(n_rank={self.n_rank}, rays={list(self.rays)}, max_cones={list(self.max_cones)})"

    def cone(self, idx):
        """The cone spanned by the rays with the given indices."""
        return Cone([self.rays[i] for i in idx], self.n_rank)

    @cached_property
    def max_cone_objects(self):
        return tuple(self.cone(c) for c in self.max_cones)


def fan_failures(f):
    """Violations of the fan axioms (empty list for a valid fan)."""
    out = []
    cones = f.max_cone_objects
    for idx, c in zip(f.max_cones, cones):
        if not c.is_strictly_convex():
            out.append(f"strict convexity: cone {list(idx)} contains a line")
        elif len(c.rays) != len(idx):
            out.append(f"rays: cone {list(idx)} lists a ray that is not extreme")
    if out:
        return out
    for a in range(len(cones)):
        for b in range(a + 1, len(cones)):
            if separating_form(cones[a], cones[b]) is None:
                out.append(f"separation: cones {list(f.max_cones[a])} and {list(f.max_cones[b])} "
                           "do not meet in a common face")
    return out


def is_valid_fan(f):
    return not fan_failures(f)


@dataclass(frozen=True)
class ProjectableFan:
    """Faces of delta forming a projectable fan.

    Attributes:
      dpc: the projected cone (P, delta).
      max_faces: maximal faces as frozensets of delta-generator indices.
    """

    dpc: ProjectedCone
    max_faces: tuple

    def __post_init__(self):
        faces = sorted({frozenset(f) for f in self.max_faces}, key=lambda f: (len(f), sorted(f)))
        object.__setattr__(self, "max_faces", tuple(faces))

    @property
    def pc(self):
        return self.dpc.dual

    def contains_face(self, face):
        return any(face <= m for m in self.max_faces)


def separable(dpc, face1, face2):
    """Whether two faces of delta admit an L-invariant separating form."""
    pc = dpc.dual
    return invariant_separation(pc, pc.complement(face1), pc.complement(face2)) is not None


def is_projectable(pf):
    faces = pf.max_faces
    return all(separable(pf.dpc, a, b) for a, b in combinations(faces, 2))


def is_maximal_projectable(pf):
    """Whether every face of delta separable from all maximal faces is in the fan."""
    for face in pf.dpc.all_faces():
        if pf.contains_face(face):
            continue
        if all(separable(pf.dpc, face, m) for m in pf.max_faces):
            return False
    return True


def bunch_to_projectable_fan(b):
    """The maximal projectable fan of a bunch: stars of the covering faces."""
    pc = b.pc
    stars = [pc.complement(f) for f in covering_collection(b)]
    maximal = [s for s in stars if not any(s < t for t in stars)]
    return ProjectableFan(pc.dual, tuple(maximal))


def projectable_fan_to_bunch(pf):
    """The bunch of a maximal projectable fan.

    Raises:
      NotMaximal: pf is not maximal.
    """
    if not is_maximal_projectable(pf):
        raise NotMaximal("the projectable fan can be enlarged by a separable face",
                         condition="projectable fan maximality")
    return _bunch_of_faces(pf)


def _bunch_of_faces(pf):
    pc = pf.pc
    images = {}
    for face in pf.max_faces:
        gface = pc.complement(face)
        images.setdefault(pc.projected_face(gface), gface)
    keep = minimal_cones(list(images))
    return Bunch(pc, [images[c] for c in keep], verify=False)


def quotient_fan(pf):
    """Project the maximal faces to N and divide out the minimal cone.

    Returns:
      (fan, R) where R is the matrix of F -> N' = N / L'.
    """
    dpc = pf.dpc
    n = dpc.k_rank
    images = [dpc.projected_face(f) for f in pf.max_faces]
    minimal = intersect_all(images) if images else Cone.zero(n)
    lprime = la.span(minimal.lineality, n)
    pprime = la.kernel_basis(lprime.basis, n).basis if lprime.rank else la.identity(n)
    nprime = len(pprime)
    r = la.matmul(pprime, dpc.q, dpc.e_rank) if pprime else ()
    gens = [la.primitive(la.matvec(r, d)) if r else () for d in dpc.generators]
    cones = [Cone([gens[j] for j in sorted(f)], nprime) for f in pf.max_faces]

    def order(ray):
        hits = [j for j, g in enumerate(gens) if g == ray]
        return (hits[0] if hits else len(gens), ray)

    rays = sorted({ray for c in cones for ray in c.rays}, key=order)
    pos = {ray: i for i, ray in enumerate(rays)}
    max_cones = [[pos[ray] for ray in c.rays] for c in cones]
    return Fan(nprime, rays, max_cones), r


def bunch_to_fan(b):
    """The fan of a standard bunch.

    Raises:
      NotStandard: b is not standard.
    """
    if not is_standard(b):
        raise NotStandard("conversion to a fan needs a standard bunch", condition="standard")
    fan, _ = quotient_fan(bunch_to_projectable_fan(b))
    return fan


def all_fan_cones(b):
    """Every cone of the fan of b with the face of gamma it comes from.

    Returns:
      list of (face, cone) over the faces gamma_0 whose image contains some
      member of b in its relative interior; the cone is R(gamma_0*).
    """
    pc = b.pc
    _, r = quotient_fan(bunch_to_projectable_fan(b))
    nprime = len(r)
    out = []
    for face in pc.all_faces():
        img = pc.projected_face(face)
        if any(relint_inside(t, img) for t in b.cones):
            star = pc.face_star(face)
            out.append((face, image(star, r, nprime) if r else Cone.zero(0)))
    return out


def _ray_matrix(f):
    return la.transpose(f.rays, f.n_rank)


def fan_to_bunch(f):
    """A standard bunch whose fan is (the 2-completion of) f.

    Uses the Cox construction when the ray map C: Z^R -> N is surjective and
    otherwise the lattice F = s(N) + ker(C), with the section s read off the
    Hermite form of C.

    Raises:
      Degenerate: the rays do not span N_Q.
    """
    pf = reduced_cox(f)
    return _bunch_of_faces(pf)


def reduced_cox(f):
    """The projectable fan (P, delta, Sigma) presenting f."""
    n, nr = f.n_rank, len(f.rays)
    c = _ray_matrix(f)
    if la.rank(f.rays, n) < n:
        raise Degenerate("the rays do not span N_Q", condition="nondegenerate")
    if la.is_surjective(c, nr):
        dpc = ProjectedCone(c, la.identity(nr), e_rank=nr)
    else:
        h, u = la.hnf(la.transpose(c, nr), n)  # u C^T = h, so C u^T = h^T = [H | 0]
        v = la.transpose(u, nr)
        vinv = la.as_matrix(la.inverse(v))
        lower = la.transpose(h[:n], n)  # n x n lower triangular block
        block = [list(lower[i]) + [0] * (nr - n) for i in range(n)]
        block += [[1 if j == i else 0 for j in range(nr)] for i in range(n, nr)]
        coords = la.matmul(block, vinv, nr)
        delta = [tuple(coords[i][rho] for i in range(nr)) for rho in range(nr)]
        p = [[1 if j == i else 0 for j in range(nr)] for i in range(n)]
        dpc = ProjectedCone(p, delta, e_rank=nr)
    return ProjectableFan(dpc, tuple(frozenset(m) for m in f.max_cones))


def universal_reduced_cox(f):
    """The universal reduced Cox construction of a simplicial full fan.

    F is the lattice generated by the points of P^-1(N) on the support of
    the lifted fan inside Q^R.

    Returns:
      (dpc, pf): the projected cone (P, delta) and the projectable fan.

    Raises:
      NotSimplicial, NotFullDimensional: hypotheses of the construction.
    """
    n, nr = f.n_rank, len(f.rays)
    for idx, cone in zip(f.max_cones, f.max_cone_objects):
        if not cone.is_simplicial() or len(cone.rays) != len(idx):
            raise NotSimplicial(f"cone {list(idx)} is not simplicial", condition="simplicial")
        if cone.dim != n:
            raise NotFullDimensional(f"cone {list(idx)} is not full-dimensional",
                                     condition="full-dimensional")
    gens = []
    for idx in f.max_cones:
        inv = la.inverse([[f.rays[rho][i] for rho in idx] for i in range(n)])
        for k in range(n):
            x = [Fraction(0)] * nr
            for pos, rho in enumerate(idx):
                x[rho] = inv[pos][k]
            gens.append(x)
    den = reduce(lcm, (x.denominator for g in gens for x in g), 1)
    scaled = la.hnf_basis([[int(x * den) for x in g] for g in gens], nr)
    binv = la.inverse(scaled)  # rows of scaled / den form a basis of F
    delta = [tuple(den * binv[rho][i] for i in range(nr)) for rho in range(nr)]
    c = _ray_matrix(f)
    p_cols = [[Fraction(x, den) for x in la.matvec(c, b)] for b in scaled]
    if any(x.denominator != 1 for col in p_cols for x in col):
        raise AssertionError("P does not map F into N")
    p = la.transpose([[int(x) for x in col] for col in p_cols], n)
    dpc = ProjectedCone(p, delta, e_rank=nr)
    pf = ProjectableFan(dpc, tuple(frozenset(m) for m in f.max_cones))
    _check_universal(pf)
    return dpc, pf


def _check_universal(pf):
    dpc = pf.dpc
    n = dpc.k_rank
    pieces = []
    for face in pf.max_faces:
        sat = la.span([dpc.generators[j] for j in sorted(face)], dpc.e_rank)
        img = la.image(sat, dpc.q, n)
        if img.rank != sat.rank or img.basis != la.identity(n):
            raise AssertionError("a lifted cone does not map its lattice onto N")
        pieces.extend(sat.basis)
    if la.lattice(pieces, dpc.e_rank).basis != la.identity(dpc.e_rank):
        raise AssertionError("F is not the sum of the lifted cone lattices")


# -- fan-side oracles -------------------------------------------------------


@dataclass(frozen=True)
class FanReport:
    smooth: bool
    simplicial: bool
    complete: bool
    quasiprojective: bool
    nondegenerate: bool
    two_complete: bool
    only_constant_functions: bool
    pure_full_dimensional: bool

    @property
    def full(self):
        return self.two_complete and self.pure_full_dimensional


def is_complete_fan(f):
    """Pure full-dimensional, two cones at each wall, wall graph connected."""
    n = f.n_rank
    cones = f.max_cone_objects
    if n == 0:
        return True
    if any(c.dim != n for c in cones):
        return False
    walls = {}
    for i, (idx, c) in enumerate(zip(f.max_cones, cones)):
        for fa in c.facets:
            wall = frozenset(r for r in idx if la.dot(fa, f.rays[r]) == 0)
            walls.setdefault(wall, []).append(i)
    if any(len(v) != 2 for v in walls.values()):
        return False
    graph = nx.Graph()
    graph.add_nodes_from(range(len(cones)))
    graph.add_edges_from(tuple(v) for v in walls.values())
    return nx.is_connected(graph)


def is_quasiprojective_fan(f):
    """Existence of a strictly convex support function (exact LP)."""
    n = f.n_rank
    m = len(f.max_cones)
    if m <= 1 or n == 0:
        return True
    cones = f.max_cone_objects
    if all(c.dim == n and len(idx) == n for idx, c in zip(f.max_cones, cones)):
        return _quasiprojective_simplicial(f)
    return _quasiprojective_general(f)


def _quasiprojective_general(f):
    # one linear form per maximal cone, agreeing on shared rays
    n = f.n_rank
    m = len(f.max_cones)
    nvars = n * m
    eqs, ineqs = [], []

    def row(i, j, v):
        r = [0] * nvars
        for t in range(n):
            r[i * n + t] += v[t]
            r[j * n + t] -= v[t]
        return r

    for i, j in combinations(range(m), 2):
        si, sj = set(f.max_cones[i]), set(f.max_cones[j])
        for rho in si & sj:
            eqs.append((row(i, j, f.rays[rho]), 0))
        for rho in si - sj:
            ineqs.append((row(i, j, f.rays[rho]), 1))
        for rho in sj - si:
            ineqs.append((row(j, i, f.rays[rho]), 1))
    return feasible_point(nvars, eqs, ineqs) is not None


def _quasiprojective_simplicial(f):
    # Same system with the values a_rho on the rays as unknowns: on a full
    # simplicial cone the linear form is A^-1 a, and strictness asks
    # a_rho - <m_sigma, v_rho> >= 1 for each ray outside sigma.
    n, nr = f.n_rank, len(f.rays)
    ineqs = []
    for idx in f.max_cones:
        inv = la.inverse([f.rays[r] for r in idx])  # row i of inv^T pairs with v
        for rho in range(nr):
            if rho in idx:
                continue
            coeffs = la.matvec(la.transpose(inv, n), f.rays[rho])
            row = [Fraction(0)] * nr
            row[rho] += 1
            for pos, r in enumerate(idx):
                row[r] -= coeffs[pos]
            ineqs.append((row, 1))
    return feasible_point(nr, (), ineqs) is not None


def is_two_complete_fan(f, limits=None):
    """Whether no cone on existing rays can be added to the fan.

    Raises:
      FaceEnumerationTooLarge: too many ray subsets to examine.
    """
    cap = resolve(limits).max_faces
    nr = len(f.rays)
    if 2**nr > cap:
        raise FaceEnumerationTooLarge(f"2^{nr} ray subsets exceed the cap {cap}")
    maxsets = [frozenset(c) for c in f.max_cones]
    cones = f.max_cone_objects
    for size in range(2, nr + 1):
        for subset in combinations(range(nr), size):
            s = frozenset(subset)
            if any(s <= m for m in maxsets):
                continue
            cand = f.cone(subset)
            if not cand.is_strictly_convex() or len(cand.rays) != size:
                continue
            # another ray inside cand would meet it outside a common face
            if any(cand.contains(f.rays[r]) for r in range(nr) if r not in s):
                continue
            if all(separating_form(cand, c) is not None for c in cones):
                return False
    return True


def fan_oracles(f, limits=None):
    n = f.n_rank
    cones = f.max_cone_objects
    rays_cone = Cone(f.rays, n) if f.rays else Cone.zero(n)
    complete = is_complete_fan(f)
    return FanReport(
        smooth=all(c.is_regular() for c in cones),
        simplicial=all(c.is_simplicial() for c in cones),
        complete=complete,
        quasiprojective=is_quasiprojective_fan(f),
        nondegenerate=la.rank(f.rays, n) == n,
        # a cone added to a complete fan would be a face of a maximal cone
        two_complete=complete or is_two_complete_fan(f, limits),
        only_constant_functions=rays_cone == Cone.full(n),
        pure_full_dimensional=all(c.dim == n for c in cones),
    )


def fan_isomorphism(f1, f2):
    """A unimodular matrix carrying f1 onto f2 (rays and cones), or None.

    Both fans must be nondegenerate. Tries all injective assignments of a
    spanning set of rays of f1 to rays of f2.
    """
    n = f1.n_rank
    if n != f2.n_rank or len(f1.rays) != len(f2.rays) or len(f1.max_cones) != len(f2.max_cones):
        return None
    basis = []
    for i, r in enumerate(f1.rays):
        if la.rank([f1.rays[j] for j in basis] + [r], n) > len(basis):
            basis.append(i)
    if len(basis) != n:
        raise Degenerate("the rays do not span N_Q", condition="nondegenerate")
    if n == 0:
        return () if set(f1.max_cones) == set(f2.max_cones) else None
    inv = la.inverse(la.transpose([f1.rays[i] for i in basis], n))
    target_cones = {frozenset(c) for c in f2.max_cones}
    pos2 = {r: i for i, r in enumerate(f2.rays)}
    for images in permutations(range(len(f2.rays)), n):
        cols = la.transpose([f2.rays[j] for j in images], n)
        phi = la.matmul(cols, inv, n)
        if any(x.denominator != 1 for row in phi for x in row):
            continue
        phi = la.as_matrix(phi)
        if abs(la.det(phi)) != 1:
            continue
        mapped = [pos2.get(la.matvec(phi, r)) for r in f1.rays]
        if None in mapped:
            continue
        if {frozenset(mapped[i] for i in c) for c in f1.max_cones} == target_cones:
            return phi
    return None
