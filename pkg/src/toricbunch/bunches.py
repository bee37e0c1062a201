"""Bunches of cones in the rational divisor class space.

A bunch in a projected cone (Q, gamma) is a nonempty collection of
projected faces tau such that a projected face tau_0 belongs to it exactly
when, for every other member tau,

    tau_0° meets tau°   and   tau° is not contained in tau_0°.

Equivalently: members overlap pairwise, none strictly contains another, and
every projected face overlapping all members contains one of them.
"""

from collections import Counter
from dataclasses import dataclass, field
from itertools import product

import networkx as nx

from . import linalg as la
from .cones import Cone, relint_inside, relint_overlap
from .config import resolve
from .errors import (ConditionViolated, EnumerationTooLarge, FaceEnumerationTooLarge,
                     NotAProjectedFace, NotFree, NotStandard, SearchTooLarge)
from .projected import ProjectedCone


def cone_sort_key(c):
    return (c.dim, c.rays, c.lineality)


class _Relations:
    """Memoized overlap and containment tests between cones."""

    def __init__(self):
        self._overlap = {}

    def overlap(self, a, b):
        key = (a, b) if hash(a) <= hash(b) else (b, a)
        if key not in self._overlap:
            self._overlap[key] = relint_overlap(a, b)
        return self._overlap[key]

    def condition(self, t0, t):
        """The membership condition of t0 tested against a member t != t0."""
        return self.overlap(t0, t) and not relint_inside(t, t0)


def projected_face_table(pc, limits=None):
    """Distinct projected faces mapped to the smallest face realizing them."""
    limits = resolve(limits)
    if pc.e_rank > limits.max_verify_rank:
        raise FaceEnumerationTooLarge(
            f"rank(E) = {pc.e_rank} exceeds the verification cap {limits.max_verify_rank}")
    table = {}
    for face in pc.all_faces():
        table.setdefault(pc.projected_face(face), face)
    return table


@dataclass
class BunchCheck:
    """Outcome of ``verify_bunch``; truthy iff all conditions hold."""

    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def _describe(c):
    return "cone(" + ", ".join(str(list(r)) for r in c.rays) + ")" if c.rays else "{0}"


def verify_bunch(pc, candidate, limits=None):
    """Check both directions of the membership biconditional.

    Args:
      pc: the projected cone.
      candidate: cones in K_Q.

    Returns:
      BunchCheck; the failure strings start with the name of the violated
      condition ("nonempty", "pairwise overlap", "no strict containment",
      "maximality").

    Raises:
      NotAProjectedFace: a candidate is not the image of a face of gamma.
    """
    table = projected_face_table(pc, limits)
    theta = []
    for i, c in enumerate(candidate):
        if c not in table:
            raise NotAProjectedFace(i)
        if c not in theta:
            theta.append(c)
    failures = []
    if not theta:
        return BunchCheck(False, ["nonempty: the collection is empty"])
    rel = _Relations()
    for a in range(len(theta)):
        for b in range(a + 1, len(theta)):
            t1, t2 = theta[a], theta[b]
            if not rel.overlap(t1, t2):
                failures.append(f"pairwise overlap: {_describe(t1)} and {_describe(t2)} "
                                "have disjoint relative interiors")
            elif t1.contains_cone(t2) or t2.contains_cone(t1):
                failures.append(f"no strict containment: {_describe(t1)} and {_describe(t2)} "
                                "are nested")
    for t0 in table:
        if t0 in theta:
            continue
        if all(rel.condition(t0, t) for t in theta):
            failures.append(f"maximality: projected face {_describe(t0)} satisfies the "
                            "membership condition but is missing")
    return BunchCheck(not failures, failures)


class Bunch:
    """A verified bunch.

    Args:
      pc: the projected cone.
      witness_faces: faces of gamma (index collections) whose images form
        the bunch; duplicate images are merged.
      verify: run ``verify_bunch`` and raise ConditionViolated on failure.
    """

    def __init__(self, pc, witness_faces, verify=True, limits=None):
        self.pc = pc
        elems = {}
        for face in witness_faces:
            face = frozenset(face)
            elems.setdefault(pc.projected_face(face), face)
        order = sorted(elems, key=cone_sort_key)
        self.cones = tuple(order)
        self.witnesses = tuple(elems[c] for c in order)
        if verify:
            check = verify_bunch(pc, self.cones, limits)
            if not check:
                raise ConditionViolated("; ".join(check.failures),
                                        condition=check.failures[0].split(":")[0])

    @classmethod
    def from_cones(cls, pc, cones, verify=True, limits=None):
        """Build from cones in K_Q, locating a witness face for each."""
        table = projected_face_table(pc, limits)
        faces = []
        for i, c in enumerate(cones):
            if c not in table:
                raise NotAProjectedFace(i)
            faces.append(table[c])
        return cls(pc, faces, verify=verify, limits=limits)

    @property
    def k_rank(self):
        return self.pc.k_rank

    @property
    def weights(self):
        return self.pc.images

    def __eq__(self, other):
        return isinstance(other, Bunch) and self.pc == other.pc and set(self.cones) == set(other.cones)

    def __hash__(self):
        return hash((self.pc, frozenset(self.cones)))

    def __repr__(self):
        return f"Bunch(weights={list(self.weights)}, cones={[list(c.rays) for c in self.cones]})"


@dataclass(frozen=True)
class WeightSystem:
    """Weight vectors w_1..w_n in K = Z^k (repetitions allowed)."""

    k_rank: int
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", la.as_matrix(self.weights))
        if any(len(w) != self.k_rank for w in self.weights):
            raise ValueError("weight of wrong length")

    def generates(self):
        return la.lattice(self.weights, self.k_rank).basis == la.identity(self.k_rank)

    def projected_cone(self):
        """E = Z^n, gamma the positive orthant, Q(e_i) = w_i."""
        if not self.generates():
            raise ConditionViolated("the weights do not generate K as a lattice",
                                    condition="weights generate K")
        q = la.transpose(self.weights, self.k_rank)
        return ProjectedCone(q, e_rank=len(self.weights))


def bunch_from_weights(weights, cones, k_rank=None, limits=None):
    """The free bunch given by weight vectors and weight cones.

    Args:
      weights: the w_i (or a WeightSystem).
      cones: Cone objects, or lists of weight vectors spanning each cone.

    Raises:
      ConditionViolated: the weights do not generate K or the cones do not
        form a bunch (the message names the offending condition).
    """
    ws = weights if isinstance(weights, WeightSystem) else WeightSystem(
        k_rank if k_rank is not None else len(weights[0]), weights)
    pc = ws.projected_cone()
    cones = [c if isinstance(c, Cone) else Cone(c, ws.k_rank) for c in cones]
    try:
        return Bunch.from_cones(pc, cones, limits=limits)
    except NotAProjectedFace as exc:
        raise ConditionViolated(str(exc), condition="weight cone") from exc


def covering_collection(b):
    """Inclusion-minimal faces of gamma whose image contains some member."""
    pc = b.pc
    covers = {}
    out = []
    for face in pc.all_faces():
        img = pc.projected_face(face)
        ok = any(img.contains_cone(t) for t in b.cones)
        covers[face] = ok
        if ok and not any(covers[face - {i}] for i in face):
            out.append(face)
    return sorted(out, key=lambda f: (len(f), sorted(f)))


def minimal_cones(cones):
    """Inclusion-minimal members of a collection of cones (deduplicated)."""
    uniq = list(dict.fromkeys(cones))
    return sorted((c for c in uniq
                   if not any(d != c and c.contains_cone(d) for d in uniq)), key=cone_sort_key)


def is_standard(b):
    pc = b.pc
    full = la.identity(pc.k_rank)
    for i in range(pc.e_rank):
        facet = pc.complement({i})
        if pc.face_lattice_image(facet).basis != full:
            return False
        img = pc.projected_face(facet)
        if not any(relint_inside(t, img) for t in b.cones):
            return False
    return True


def is_free(b):
    return b.pc.is_regular()


def is_geometric(b):
    return all(t.dim == b.k_rank for t in b.cones)


def is_simple(b):
    if not is_standard(b):
        return False
    pc = b.pc
    full = la.identity(pc.k_rank)
    for face in covering_collection(b):
        img = pc.face_lattice_image(face)
        if img.rank != len(face) or img.basis != full:
            return False
    return True


@dataclass(frozen=True)
class DictionaryReport:
    """Geometric properties of X read off from the bunch."""

    q_factorial: bool
    smooth: bool
    only_constant_functions: bool
    full: bool
    complete: bool


def is_complete(b, cov=None):
    """Completeness read off the bunch.

    Requires a simplicial member, and that each face gamma_0 whose image
    contains some member in its relative interior and which lies over just
    one covering face belongs to the covering collection.
    """
    if not any(t.is_simplicial() for t in b.cones):
        return False
    pc = b.pc
    cov = covering_collection(b) if cov is None else cov
    covset = set(cov)
    for face in pc.all_faces():
        img = pc.projected_face(face)
        if not any(relint_inside(t, img) for t in b.cones):
            continue
        below = sum(1 for c in cov if c <= face)
        if below == 1 and face not in covset:
            return False
    return True


def dictionary(b):
    """Dictionary flags of a standard bunch, computed bunch-side only.

    Raises:
      NotStandard: b is not standard.
    """
    if not is_standard(b):
        raise NotStandard("the dictionary needs a standard bunch", condition="standard")
    pc = b.pc
    cov = covering_collection(b)
    full_lattice = la.identity(pc.k_rank)
    q_factorial = all(t.dim == pc.k_rank for t in b.cones)
    smooth = all(pc.face_star(f).is_regular() and pc.face_lattice_image(f).basis == full_lattice
                 for f in cov)
    whole = Cone(pc.images, pc.k_rank)
    only_constants = all(any(w) for w in pc.images) and whole.is_strictly_convex()
    full = all(pc.projected_face(f).is_simplicial() for f in cov)
    complete = is_complete(b, cov)
    return DictionaryReport(q_factorial, smooth, only_constants, full, complete)


def enumerate_bunches(pc, limits=None):
    """All bunches in pc, in a deterministic order.

    Bunches are exactly the maximal sets of pairwise compatible projected
    faces (overlapping, not nested) that also pass the maximality clause, so
    we list maximal cliques of the compatibility graph and filter.

    Raises:
      EnumerationTooLarge: more distinct projected faces than allowed.
    """
    limits = resolve(limits)
    table = projected_face_table(pc, limits)
    verts = sorted(table, key=cone_sort_key)
    if len(verts) > limits.max_enum:
        raise EnumerationTooLarge(
            f"{len(verts)} distinct projected faces exceed the cap {limits.max_enum}")
    rel = _Relations()
    graph = nx.Graph()
    graph.add_nodes_from(range(len(verts)))
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            a, c = verts[i], verts[j]
            if rel.overlap(a, c) and not a.contains_cone(c) and not c.contains_cone(a):
                graph.add_edge(i, j)
    out = []
    for clique in nx.find_cliques(graph):
        members = [verts[i] for i in clique]
        ok = True
        for i, t0 in enumerate(verts):
            if i in clique:
                continue
            if all(rel.condition(t0, t) for t in members):
                ok = False
                break
        if ok:
            out.append(Bunch(pc, [table[t] for t in members], verify=False))
    out.sort(key=lambda b: [cone_sort_key(c) for c in b.cones])
    return out


def free_bunch_isomorphic(b1, b2, limits=None):
    """A lattice automorphism of K carrying b1 onto b2, if one exists.

    Both bunches must be free. The search fixes k weights of b1 spanning K_Q
    and tries every assignment of them to weights of b2; each assignment
    determines at most one rational map, which is kept if it is unimodular,
    matches the weight multisets and maps the cones of b1 onto those of b2.

    Returns:
      The matrix of the automorphism, or None.

    Raises:
      NotFree: a bunch is not free.
      SearchTooLarge: too many assignments to try.
    """
    limits = resolve(limits)
    if not (is_free(b1) and is_free(b2)):
        raise NotFree("isomorphism search needs free bunches", condition="free")
    k = b1.k_rank
    if k != b2.k_rank or b1.pc.e_rank != b2.pc.e_rank or len(b1.cones) != len(b2.cones):
        return None
    w1, w2 = Counter(b1.weights), Counter(b2.weights)
    if sorted(w1.values()) != sorted(w2.values()):
        return None
    if k == 0:
        return ()
    basis = []
    for w in sorted(w1):
        if la.rank(basis + [w], k) > len(basis):
            basis.append(w)
        if len(basis) == k:
            break
    targets = sorted(w2)
    if len(targets) ** k > limits.max_iso_candidates:
        raise SearchTooLarge(f"{len(targets)}^{k} candidate assignments")
    inv_basis = la.inverse(la.transpose(basis, k))
    theta2 = set(b2.cones)

    def attempt(images):
        phi = la.matmul(la.transpose(images, k), inv_basis, k)
        if any(x.denominator != 1 for row in phi for x in row):
            return None
        phi = la.as_matrix(phi)
        if abs(la.det(phi)) != 1:
            return None
        if Counter(la.matvec(phi, w) for w in b1.weights) != w2:
            return None
        if {Cone([la.matvec(phi, g) for g in t.generators], k) for t in b1.cones} != theta2:
            return None
        return phi

    found = attempt(basis) if all(w in w2 for w in basis) else None
    if found is not None:
        return found
    for images in product(targets, repeat=k):
        if any(w1[a] != w2[t] for a, t in zip(basis, images)):
            continue
        found = attempt(list(images))
        if found is not None:
            return found
    return None
