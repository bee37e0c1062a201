"""Acceptance criteria 1-10, one PASS/FAIL line each.

Every comparison is exact (rational arithmetic throughout); the only
numeric tolerances are the wall-clock budgets below. Run with pytest or
directly as a script.
"""

import functools
import itertools
import sys
import time

import pytest

from toricbunch import catalog
from toricbunch import linalg as la
from toricbunch.bunches import (bunch_from_weights, dictionary, enumerate_bunches,
                                free_bunch_isomorphic, is_geometric, is_standard)
from toricbunch.classification import (canonical_extension, enumerate_kleinschmidt,
                                       kleinschmidt_is_fano, kleinschmidt_to_bunch,
                                       printed_fano_inequality, KleinschmidtData)
from toricbunch.config import Limits
from toricbunch.cones import Cone, is_separating_form, relint_overlap, separating_form
from toricbunch.divisors import (ample_nonempty, ample_point, anticanonical_class, b2, is_ample,
                                 mori_cone, pic_lattice_free, semiample_cone)
from toricbunch.errors import NotMaximal
from toricbunch.fans import (Fan, ProjectableFan, bunch_to_fan, bunch_to_projectable_fan,
                             fan_isomorphism, fan_oracles, fan_to_bunch, is_complete_fan,
                             is_two_complete_fan, projectable_fan_to_bunch, quotient_fan)
from toricbunch.projected import ProjectedCone, invariant_separation
from oracles import maximal_projectable_fans, random_projected_cone, seeded

EXACT = 0  # tolerance on every value comparison: none, all arithmetic is rational
CRITERION_1_SECONDS = 1.0
CRITERION_2_INSTANCES = 100
CRITERION_2_SEED = 1
CRITERION_4_MIN_PAIRS = 1000
CRITERION_4_SEED = 4
KLEINSCHMIDT_DIMS = (2, 3, 4)
KLEINSCHMIDT_MAX_B = 3
ENUM_LIMITS = Limits(max_enum=64)

QPOS = Cone([(1,)])
P123_REFERENCE = Fan(2, [(1, 0), (0, 1), (-2, -3)], [[0, 1], [1, 2], [0, 2]])
EX34_GENERATORS = [(1, 0, 1), (0, 1, 2), (1, 0, -2), (0, 1, -1)]
EX34_Q = [[0, 0, 1]]
THREE_EQUAL = ProjectedCone([[1, 0, -1], [0, 1, -1]])


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    capture = getattr(report, "capture", None)
    if capture is not None:
        with capture.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


@pytest.fixture(autouse=True)
def _show_lines(capsys):
    report.capture = capsys
    yield
    report.capture = None


def p123():
    return bunch_from_weights([(1,), (2,), (3,)], [QPOS])


@functools.cache
def criterion_2_instances():
    rng = seeded(CRITERION_2_SEED)
    out = []
    for _ in range(CRITERION_2_INSTANCES):
        pc = random_projected_cone(rng)
        out.append((pc, enumerate_bunches(pc, ENUM_LIMITS)))
    return out


def test_criterion_1_p123_round_trip():
    start = time.perf_counter()
    fan = bunch_to_fan(p123())
    phi = fan_isomorphism(fan, P123_REFERENCE)
    back = fan_to_bunch(fan)
    elapsed = time.perf_counter() - start
    checks = [
        fan.n_rank == 2 and len(fan.max_cones) == 3,
        all(len(c) == 2 and fan.cone(c).dim == 2 for c in fan.max_cones),
        phi is not None and abs(la.det(phi)) == 1,
        # the three pairings: every pair of the three rays spans a maximal cone
        set(fan.max_cones) == set(itertools.combinations(range(3), 2)),
        free_bunch_isomorphic(back, p123()) is not None,
        elapsed < CRITERION_1_SECONDS,
    ]
    report(1, all(checks), f"rays {list(fan.rays)}, transform {phi}, {elapsed:.3f}s "
                           f"(budget {CRITERION_1_SECONDS}s)")


def test_criterion_2_functor_duality():
    failures, bunch_count, fan_count = [], 0, 0
    for pc, bunches in criterion_2_instances():
        assert pc.e_rank <= 6 and pc.k_rank <= 3
        for b in bunches:
            bunch_count += 1
            if projectable_fan_to_bunch(bunch_to_projectable_fan(b)) != b:
                failures.append(("B(F(theta))", pc, b))
        fans = maximal_projectable_fans(pc.dual)
        for faces in fans:
            fan_count += 1
            pf = ProjectableFan(pc.dual, tuple(faces))
            if frozenset(bunch_to_projectable_fan(projectable_fan_to_bunch(pf)).max_faces) != faces:
                failures.append(("F(B(sigma))", pc, faces))
        if {frozenset(bunch_to_projectable_fan(b).max_faces) for b in bunches} != set(fans):
            failures.append(("bijection", pc, None))
    report(2, not failures, f"{CRITERION_2_INSTANCES} projected cones, {bunch_count} bunches, "
                            f"{fan_count} maximal projectable fans, {len(failures)} failures")


def test_criterion_3_example_three_equal_weights():
    faces = (frozenset({0, 1}), frozenset({0, 2}))
    try:
        projectable_fan_to_bunch(ProjectableFan(THREE_EQUAL, faces))
        rejected = False
    except NotMaximal:
        rejected = True
    enlarged = ProjectableFan(THREE_EQUAL, faces + (frozenset({1, 2}),))
    theta = projectable_fan_to_bunch(enlarged)
    fan, _ = quotient_fan(enlarged)
    ok = rejected and theta.cones == (QPOS,) and len(fan.max_cones) == 3
    report(3, ok, f"two-face fan rejected: {rejected}; enlarged fan gives "
                  f"{[_rays(c) for c in theta.cones]}, quotient fan with {len(fan.max_cones)} cones")


def test_criterion_4_invariant_separation():
    rng = seeded(CRITERION_4_SEED)
    pairs = mismatches = 0
    while pairs < CRITERION_4_MIN_PAIRS:
        pc = random_projected_cone(rng, max_e=5)
        faces = pc.all_faces()
        for f1, f2 in itertools.combinations_with_replacement(faces, 2):
            pairs += 1
            u = invariant_separation(pc, f1, f2)
            if (u is not None) != relint_overlap(pc.projected_face(f1), pc.projected_face(f2)):
                mismatches += 1
    # the nonsimplicial counterexample, at the level of raw cones
    star3 = Cone.from_inequalities(3, EX34_GENERATORS, [EX34_GENERATORS[3]])
    star0 = Cone.from_inequalities(3, EX34_GENERATORS, [EX34_GENERATORS[0]])
    kernel = la.kernel_basis(EX34_Q, 3).basis
    witness = (1, -1, 0)
    image3 = Cone([la.matvec(EX34_Q, EX34_GENERATORS[3])], 1)
    image0 = Cone([la.matvec(EX34_Q, EX34_GENERATORS[0])], 1)
    counterexample = (not Cone(EX34_GENERATORS).is_simplicial()
                      and not any(la.matvec(EX34_Q, witness))
                      and is_separating_form(witness, star3, star0)
                      and separating_form(star3, star0, subspace=kernel) is not None
                      and not relint_overlap(image3, image0))
    report(4, mismatches == 0 and counterexample,
           f"{pairs} face pairs, {mismatches} mismatches; witness e1 - e2 separates the stars "
           f"while the projected faces {_rays(image3)} and {_rays(image0)} have disjoint "
           "relative interiors")


def _dictionary_mismatches(b):
    """Bunch-side flags against the fan-side oracles they correspond to."""
    d = dictionary(b)
    fan = bunch_to_fan(b)
    n = fan.n_rank
    cones = fan.max_cone_objects
    complete = is_complete_fan(fan)
    pure = all(c.dim == n for c in cones)
    full = pure and (complete or is_two_complete_fan(fan))
    constants = (Cone(fan.rays, n) if fan.rays else Cone.zero(n)) == Cone.full(n)
    pairs = [("q_factorial", d.q_factorial, all(c.is_simplicial() for c in cones)),
             ("smooth", d.smooth, all(c.is_regular() for c in cones)),
             ("complete", d.complete, complete), ("full", d.full, full),
             ("only_constant_functions", d.only_constant_functions, constants)]
    return [name for name, a, c in pairs if a != c]


def test_criterion_5_dictionary_cross_validation():
    instances = [p123(), projectable_fan_to_bunch(ProjectableFan(
        THREE_EQUAL, (frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2}))))]
    instances += [b for _, bunches in criterion_2_instances() for b in bunches if is_standard(b)]
    klein = [kleinschmidt_to_bunch(d) for dim in KLEINSCHMIDT_DIMS
             for d in enumerate_kleinschmidt(dim, KLEINSCHMIDT_MAX_B)]
    mismatches = [(b, m) for b in instances + klein for m in _dictionary_mismatches(b)]
    report(5, not mismatches, f"{len(instances)} instances from criteria 1-3 and {len(klein)} "
                              f"Kleinschmidt bunches, {len(mismatches)} mismatches")


def test_criterion_6_oda():
    b = catalog.example("oda")
    d = dictionary(b)
    semi = semiample_cone(b)
    mori = mori_cone(b)
    # independent intersection: all member inequalities stacked in one system
    members_meet = Cone.from_inequalities(3, [f for t in b.cones for f in t.facets],
                                          [e for t in b.cones for e in t.equations])
    ok = (d.q_factorial and d.complete and not ample_nonempty(b)
          and not mori.is_strictly_convex()
          and semi.rays == ((1, 1, 1),) and not semi.lineality
          and members_meet == semi
          and semi.contains(anticanonical_class(b)))
    report(6, ok, f"semiample cone {_rays(semi)}, anticanonical class {anticanonical_class(b)}, "
                  f"Mori cone lineality {list(mori.lineality)}")


def _rays(c):
    return [tuple(r) for r in c.rays]


def test_criterion_7_eikelberg():
    expected = {"eikelberg-delta": 1, "eikelberg-delta-prime": 0}
    values = {name: b2(fan_to_bunch(catalog.example(name))) for name in expected}
    ok = all(abs(values[name] - expected[name]) <= EXACT for name in expected)
    report(7, ok, f"dim Pic_Q: {values} (tolerance {EXACT})")


def test_criterion_8_kleinschmidt():
    data = [d for dim in KLEINSCHMIDT_DIMS for d in enumerate_kleinschmidt(dim, KLEINSCHMIDT_MAX_B)]
    bad, agree = [], 0
    for d in data:
        b = kleinschmidt_to_bunch(d)
        flags = dictionary(b)
        routes = (ample_nonempty(b), mori_cone(b).is_strictly_convex(),
                  fan_oracles(bunch_to_fan(b)).quasiprojective)
        if not (flags.smooth and flags.complete and all(routes)):
            bad.append(d)
        agree += printed_fano_inequality(d) == kleinschmidt_is_fano(d)
    f1 = KleinschmidtData((1, 0), (2, 1, 1))
    f2 = KleinschmidtData((2, 0), (2, 1, 1))
    f1_fano = is_ample(kleinschmidt_to_bunch(f1), anticanonical_class(kleinschmidt_to_bunch(f1)))
    f2_fano = is_ample(kleinschmidt_to_bunch(f2), anticanonical_class(kleinschmidt_to_bunch(f2)))
    ok = (not bad and kleinschmidt_is_fano(f1) and f1_fano
          and not kleinschmidt_is_fano(f2) and not f2_fano)
    report(8, ok, f"{len(data)} data smooth, complete and projective by three routes "
                  f"({len(bad)} failures); F1 Fano {f1_fano}, F2 Fano {f2_fano}; printed "
                  f"inequality agrees on {agree}/{len(data)} (diagnostic)")


def test_criterion_9_p123_picard_lattice():
    b = p123()
    pic = pic_lattice_free(b)
    window = range(-30, 31)
    oracle = [x for x in window if x % 1 == 0 and x % 2 == 0 and x % 3 == 0]
    ample = ample_point(b)
    ok = (pic.basis == ((6,),)
          and [x for x in window if pic.contains((x,))] == oracle
          and semiample_cone(b) == QPOS
          and ample is not None and ample[0] > 0
          and [x for x in oracle if is_ample(b, (x,))] == [x for x in oracle if x > 0])
    report(9, ok, f"Pic = {pic.basis[0][0]}Z inside Cl = Z; ample Cartier classes are the "
                  "positive multiples")


def test_criterion_10_canonical_extension():
    oda = catalog.example("oda")
    ext = canonical_extension(oda, [2] * 6)
    d = dictionary(ext)
    rise = (ext.pc.e_rank - ext.k_rank) - (oda.pc.e_rank - oda.k_rank)
    ok = (d.complete and d.q_factorial and is_geometric(ext)
          and not ample_nonempty(ext) and not mori_cone(ext).is_strictly_convex()
          and rise == 6)
    report(10, ok, f"complete {d.complete}, Q-factorial {d.q_factorial}, "
                   f"projective {ample_nonempty(ext)}, dimension +{rise}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
