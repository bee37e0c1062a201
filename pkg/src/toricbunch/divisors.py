"""Divisor classes of X read off a standard bunch.

With tau running through the bunch, the rational Picard space is the
intersection of the spans lin(tau), the semiample cone is the intersection
of the tau and the ample cone the intersection of their relative
interiors. The Mori cone is the sum of the dual cones.
"""

from dataclasses import dataclass

from . import linalg as la
from .bunches import covering_collection, dictionary, is_free, is_geometric, is_standard
from .cones import Cone, dual_cone, intersect_all, minkowski_sum
from .errors import HypothesisViolated, NotFree, NotStandard
from .fans import bunch_to_fan
from .lp import feasible_point


def _require_standard(b):
    if not is_standard(b):
        raise NotStandard("this computation needs a standard bunch", condition="standard")


def _require_free(b):
    _require_standard(b)
    if not is_free(b):
        raise NotFree("this computation needs a free bunch", condition="free")


def class_group(b):
    """Rank and torsion of Cl(X).

    Returns:
      (rank, torsion) where torsion lists the elementary divisors > 1 of the
      ray map of the fan of b.
    """
    _require_standard(b)
    fan = bunch_to_fan(b)
    return class_group_of_fan(fan)


def class_group_of_fan(fan):
    """Cl of a nondegenerate fan: cokernel of M -> Z^R, m -> (<m, v_rho>)."""
    divs = la.elementary_divisors(fan.rays, fan.n_rank)
    return len(fan.rays) - len(divs), [d for d in divs if d > 1]


def pic_q(b):
    """Basis (saturated, HNF) of the intersection of the spans of the members."""
    _require_standard(b)
    return la.subspace_intersection([t.generators for t in b.cones], b.k_rank)


def semiample_cone(b):
    _require_standard(b)
    return intersect_all(b.cones)


def is_ample(b, w):
    """Whether the class w lies in the relative interior of every member."""
    return all(t.relint_contains(w) for t in b.cones)


def ample_point(b):
    """A class in the intersection of all relative interiors, or None.

    Feasibility of w = sum_i lambda_i^tau g_i^tau for every tau with all
    lambda >= 1.
    """
    _require_standard(b)
    k = b.k_rank
    blocks = [t.generators for t in b.cones]
    nvars = k + sum(len(g) for g in blocks)
    eqs, ineqs = [], []
    offset = k
    for gens in blocks:
        for j in range(k):
            row = [0] * nvars
            row[j] = 1
            for i, g in enumerate(gens):
                row[offset + i] = -g[j]
            eqs.append((row, 0))
        for i in range(len(gens)):
            row = [0] * nvars
            row[offset + i] = 1
            ineqs.append((row, 1))
        offset += len(gens)
    x = feasible_point(nvars, eqs, ineqs)
    return None if x is None else x[:k]


def ample_nonempty(b):
    return ample_point(b) is not None


def pic_lattice_free(b):
    """Pic(X) inside K = Cl(X) for a free bunch: the (unsaturated)
    intersection of the lattices Q(lin(gamma_0) meet E) over covering faces."""
    _require_free(b)
    pc = b.pc
    return la.lattice_intersection([pc.face_lattice_image(f) for f in covering_collection(b)])


def anticanonical_class(b):
    """Sum of the weights, counted with multiplicity."""
    return tuple(sum(w[j] for w in b.weights) for j in range(b.k_rank))


def canonical_class(b):
    _require_free(b)
    return tuple(-x for x in anticanonical_class(b))


def is_q_gorenstein(b):
    _require_free(b)
    w = anticanonical_class(b)
    return all(la.dot(e, w) == 0 for e in la.orthogonal_complement(pic_q(b)).basis)


def is_fano(b):
    """Anticanonical class Cartier and ample.

    For smooth bunches the Cartier condition is automatic and the test is
    ample membership of the sum of the weights; the general route checks
    membership in the Picard lattice as well.
    """
    _require_free(b)
    w = anticanonical_class(b)
    if dictionary(b).smooth:
        return is_ample(b, w)
    return pic_lattice_free(b).contains(w) and is_ample(b, w)


def is_fano_via_covering_faces(b):
    """Experimental Fano test over covering faces.

    Checks that the anticanonical class lies, for every covering face
    gamma_0, in the relative interior of the cone Q(gamma_0) and in the
    lattice Q(lin(gamma_0) meet E).
    """
    _require_free(b)
    w = anticanonical_class(b)
    pc = b.pc
    return all(pc.projected_face(f).relint_contains(w) and pc.face_lattice_image(f).contains(w)
               for f in covering_collection(b))


def mori_cone(b):
    """The sum of the dual cones of the members (a cone in the dual of K_Q).

    Raises:
      HypothesisViolated: b is not complete or not geometric.
    """
    _require_standard(b)
    if not is_geometric(b) or not dictionary(b).complete:
        raise HypothesisViolated("the Mori cone formula needs a complete geometric bunch",
                                 condition="complete and geometric")
    return minkowski_sum([dual_cone(t) for t in b.cones], b.k_rank)


def is_projective_simplicial(b):
    return mori_cone(b).is_strictly_convex()


def b2(b):
    return pic_q(b).rank


@dataclass(frozen=True)
class DivisorClassReport:
    cl_rank: int
    cl_torsion: tuple
    pic_q_basis: tuple
    semiample_cone: Cone
    ample_nonempty: bool
    mori_cone: Cone  # None unless the bunch is complete and geometric
    canonical_class: tuple  # None unless free
    b2: int
    fano: bool  # None unless free
    q_gorenstein: bool  # None unless free


def divisor_report(b):
    """Everything above in one record; inapplicable entries are None."""
    _require_standard(b)
    rank, torsion = class_group(b)
    pq = pic_q(b)
    try:
        mori = mori_cone(b)
    except HypothesisViolated:
        mori = None
    free = is_free(b)
    return DivisorClassReport(
        cl_rank=rank,
        cl_torsion=tuple(torsion),
        pic_q_basis=pq.basis,
        semiample_cone=semiample_cone(b),
        ample_nonempty=ample_nonempty(b),
        mori_cone=mori,
        canonical_class=canonical_class(b) if free else None,
        b2=pq.rank,
        fano=is_fano(b) if free else None,
        q_gorenstein=is_q_gorenstein(b) if free else None,
    )
