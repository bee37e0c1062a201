"""Projected cones and their Gale duals.

A projected cone is a surjection Q: E -> K of lattices (E = Z^n, K = Z^k)
together with a simplicial full-dimensional cone gamma in E_Q. Faces of
gamma are addressed by frozensets of generator indices.

Dualizing gives P: F -> N with F = E* and N = M* for M = ker Q. We take the
HNF basis of M as the rows of P, so N = Z^(n-k). The dual cone delta is
generated by the "opposite" vectors: generator j of delta vanishes on every
generator of gamma except the j-th. Hence the face star of the face I of
gamma is the face of delta spanned by the indices outside I, and the dual
of a projected cone is again a projected cone of the same kind.
"""

from functools import cached_property
from itertools import combinations

from . import linalg as la
from .cones import Cone
from .errors import InvalidProjectedCone
from .lp import feasible_point


class ProjectedCone:
    """Pair (Q, gamma).

    Args:
      q: the k x n matrix of Q (rows may be empty when k = 0).
      gamma_generators: n rational generators of gamma; defaults to the
        standard basis (gamma the positive orthant).
      e_rank: n, required when q has no rows and no generators are given.
      validate: check surjectivity of Q and simpliciality of gamma.
    """

    def __init__(self, q, gamma_generators=None, e_rank=None, validate=True):
        q = la.as_matrix(q)
        if e_rank is None:
            if q:
                e_rank = len(q[0])
            elif gamma_generators is not None:
                e_rank = len(gamma_generators)
            else:
                raise ValueError("e_rank needed")
        if gamma_generators is None:
            gamma_generators = la.identity(e_rank)
        self.q = q
        self.e_rank = e_rank
        self.k_rank = len(q)
        self.generators = la.integral_rows(gamma_generators)
        self._dual = None
        if validate:
            self._validate()

    def _validate(self):
        n = self.e_rank
        if any(len(r) != n for r in self.q):
            raise InvalidProjectedCone("Q has rows of the wrong length", condition="shape")
        if len(self.generators) != n or any(len(g) != n for g in self.generators):
            raise InvalidProjectedCone("gamma needs exactly rank(E) generators",
                                       condition="gamma simplicial full-dimensional")
        if la.det(self.generators) == 0:
            raise InvalidProjectedCone("gamma is not simplicial of full dimension",
                                       condition="gamma simplicial full-dimensional")
        if not la.is_surjective(self.q, n):
            raise InvalidProjectedCone("Q is not surjective", condition="Q surjective")

    def __eq__(self, other):
        return (isinstance(other, ProjectedCone) and self.e_rank == other.e_rank
                and self.q == other.q and self.generators == other.generators)

    def __hash__(self):
        return hash((self.e_rank, self.q, self.generators))

    def __repr__(self):
        return f"ProjectedCone(q={self.q}, gamma={self.generators})"

    # -- basic data -------------------------------------------------------

    @property
    def indices(self):
        return frozenset(range(self.e_rank))

    def complement(self, face):
        return self.indices - frozenset(face)

    def all_faces(self):
        """All faces of gamma, by increasing size."""
        n = self.e_rank
        return [frozenset(c) for r in range(n + 1) for c in combinations(range(n), r)]

    @cached_property
    def images(self):
        """Q applied to each generator of gamma (the weights)."""
        return tuple(la.matvec(self.q, g) for g in self.generators)

    def is_orthant(self):
        return self.generators == la.identity(self.e_rank)

    def is_regular(self):
        return abs(la.det(self.generators)) == 1

    @cached_property
    def opposite_generators(self):
        """Generators of delta = dual(gamma), the j-th opposite to the j-th of gamma."""
        inv = la.inverse(self.generators)  # rows are generators; columns of inv pair up
        return tuple(la.primitive([inv[i][j] for i in range(self.e_rank)])
                     for j in range(self.e_rank))

    @property
    def dual(self):
        """The dual projected cone (P, delta); dualizing twice returns self."""
        if self._dual is None:
            p = la.kernel_basis(self.q, self.e_rank).basis
            dual = ProjectedCone(p, self.opposite_generators, e_rank=self.e_rank, validate=False)
            dual._dual = self
            self._dual = dual
        return self._dual

    @cached_property
    def _face_images(self):
        return {}

    @cached_property
    def _separations(self):
        return {}

    def face(self, face):
        """The face of gamma spanned by the given generators."""
        return Cone([self.generators[i] for i in sorted(face)], self.e_rank)

    def projected_face(self, face):
        """Q(gamma_0) as a cone in K_Q (cached per face)."""
        face = frozenset(face)
        cache = self._face_images
        if face not in cache:
            cache[face] = Cone([self.images[i] for i in sorted(face)], self.k_rank)
        return cache[face]

    def face_star(self, face):
        """gamma_0* = gamma_0-perp meet delta, a face of the dual cone."""
        d = self.dual
        return Cone([d.generators[j] for j in sorted(self.complement(face))], self.e_rank)

    def face_lattice_image(self, face):
        """Q(lin(gamma_0) meet E) as a sublattice of K."""
        sat = la.span([self.generators[i] for i in sorted(face)], self.e_rank)
        return la.image(sat, self.q, self.k_rank)


def dualize(pc):
    return pc.dual


def face_star(pc, face):
    return pc.face_star(face)


def projected_face(pc, face):
    return pc.projected_face(face)


def invariant_separation(pc, face1, face2):
    """An L-invariant separating form for the face stars of face1 and face2.

    The form u lives in M_Q = ker(Q) (written in coordinates of E) and is
    sought with u >= 0 on delta_1, u <= 0 on delta_2 and u-perp meeting
    each delta_i exactly in their intersection. Because delta is simplicial
    that last condition is about which opposite generators u kills.

    Returns:
      u as a tuple of Fractions, or None.
    """
    key = (frozenset(face1), frozenset(face2))
    cache = pc._separations
    if key not in cache:
        cache[key] = _separation_lp(pc, *key)
    return cache[key]


def _separation_lp(pc, face1, face2):
    dual = pc.dual
    j1, j2 = pc.complement(face1), pc.complement(face2)
    p_images = dual.images
    eqs, ineqs = [], []
    for j in sorted(j1 | j2):
        row = p_images[j]
        if j in j1 and j in j2:
            eqs.append((row, 0))
        elif j in j1:
            ineqs.append((row, 1))
        else:
            ineqs.append(([-x for x in row], 1))
    y = feasible_point(dual.k_rank, eqs, ineqs)
    if y is None:
        return None
    return tuple(sum(c * b[i] for c, b in zip(y, dual.q)) for i in range(pc.e_rank))


def q_injective_on_face(pc, face):
    """Whether Q is injective on lin(gamma_0)."""
    vecs = [pc.images[i] for i in face]
    return la.rank(vecs, pc.k_rank) == len(vecs)


def p_surjective_on_star(pc, face):
    """Whether P maps lin(gamma_0*) onto N_Q."""
    dual = pc.dual
    vecs = [dual.images[j] for j in pc.complement(face)]
    return la.rank(vecs, dual.k_rank) == dual.k_rank


def q_maps_face_lattice_primitively(pc, face):
    """Whether Q maps lin(gamma_0) meet E isomorphically onto a primitive sublattice."""
    img = pc.face_lattice_image(face)
    return img.rank == len(face) and la.is_primitive(img)


def p_maps_star_lattice_onto(pc, face):
    """Whether P maps lin(gamma_0*) meet F onto N."""
    dual = pc.dual
    sat = la.span([dual.generators[j] for j in sorted(pc.complement(face))], dual.e_rank)
    img = la.image(sat, dual.q, dual.k_rank)
    return img.basis == la.identity(dual.k_rank)
