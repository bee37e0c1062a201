import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricbunch import linalg as la
from toricbunch.cones import Cone, relint_overlap
from toricbunch.errors import InvalidProjectedCone
from toricbunch.projected import (ProjectedCone, dualize, invariant_separation,
                                  p_maps_star_lattice_onto, p_surjective_on_star,
                                  q_injective_on_face, q_maps_face_lattice_primitively)
from oracles import random_projected_cone, raw_separable, raw_star, seeded

P123 = ProjectedCone([[1, 2, 3]])


def test_validation():
    with pytest.raises(InvalidProjectedCone):
        ProjectedCone([[2, 4]])
    with pytest.raises(InvalidProjectedCone):
        ProjectedCone([[0, 0, 1]], [(1, 0, 1), (0, 1, 2), (1, 0, -2), (0, 1, -1)], e_rank=3)
    with pytest.raises(InvalidProjectedCone):
        ProjectedCone([[1, 1]], [(1, 0), (2, 0)])


def test_dual_of_weighted_plane():
    d = P123.dual
    assert la.lattice(d.q, 3) == la.lattice([(-2, 1, 0), (-3, 0, 1)], 3)
    assert Cone(d.generators) == Cone(la.identity(3))
    assert dualize(d) is P123


def test_dual_rank_zero():
    d = ProjectedCone([[1]]).dual
    assert d.k_rank == 0 and d.q == ()


def test_dual_of_three_equal_weights():
    dpc = ProjectedCone([[1, 0, -1], [0, 1, -1]])
    pc = dpc.dual
    # every dual base vector goes to the same generator of K = Z
    assert len(set(pc.images)) == 1 and abs(pc.images[0][0]) == 1


def test_face_stars_of_weighted_plane():
    for i in range(3):
        others = [j for j in range(3) if j != i]
        assert P123.face_star({i}) == Cone([la.identity(3)[j] for j in others])
    assert P123.face_star(P123.indices) == Cone.zero(3)
    assert P123.face_star(set()) == Cone(la.identity(3))


def test_projected_faces():
    assert P123.projected_face(set()) == Cone.zero(1)
    for i in range(3):
        assert P123.projected_face({i}) == Cone([(1,)])
    assert ProjectedCone([[1, 1, 1]]).projected_face({0, 1}) == Cone([(1,)])


def test_separation_goldens():
    assert invariant_separation(P123, {0}, {0}) is not None
    for i, j in itertools.combinations(range(3), 2):
        assert invariant_separation(P123, {i}, {j}) is not None


def test_injectivity_and_surjectivity():
    assert q_injective_on_face(P123, set()) and p_surjective_on_star(P123, set())
    assert q_injective_on_face(P123, {0})
    pc = ProjectedCone([[1, 0]])
    assert not q_injective_on_face(pc, {1})
    assert not q_maps_face_lattice_primitively(P123, {1})
    assert q_maps_face_lattice_primitively(P123, {0})
    full = P123.indices
    assert q_maps_face_lattice_primitively(P123, full) == (P123.k_rank == P123.e_rank)


def _check_face_dualities(pc):
    for face in pc.all_faces():
        assert q_injective_on_face(pc, face) == p_surjective_on_star(pc, face)
        assert q_maps_face_lattice_primitively(pc, face) == p_maps_star_lattice_onto(pc, face)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_face_lattice_dualities(seed):
    _check_face_dualities(random_projected_cone(seeded(seed), max_e=5))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_separation_agrees_with_overlap_and_raw_route(seed):
    pc = random_projected_cone(seeded(seed), max_e=4)
    faces = pc.all_faces()
    for f1, f2 in itertools.combinations_with_replacement(faces, 2):
        u = invariant_separation(pc, f1, f2)
        overlap = relint_overlap(pc.projected_face(f1), pc.projected_face(f2))
        assert (u is not None) == overlap
        assert raw_separable(pc, f1, f2) == overlap
        if u is not None:
            assert not any(la.matvec(pc.q, u))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_face_star_matches_raw_star(seed):
    pc = random_projected_cone(seeded(seed), max_e=4)
    for face in pc.all_faces():
        assert pc.face_star(face) == raw_star(pc, face)
