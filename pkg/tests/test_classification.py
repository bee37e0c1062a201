import pytest

from toricbunch import catalog
from toricbunch.bunches import (bunch_from_weights, dictionary, free_bunch_isomorphic,
                                is_standard)
from toricbunch.classification import (KleinschmidtData, aligned_fano_inequality,
                                       canonical_extension, enumerate_kleinschmidt,
                                       kleinschmidt_is_fano, kleinschmidt_to_bunch,
                                       printed_fano_inequality)
from toricbunch.cones import Cone
from toricbunch.divisors import ample_nonempty, is_projective_simplicial
from toricbunch.errors import InvalidParameters, MultiplicityDecrease, NotFree
from toricbunch.fans import Fan, bunch_to_fan, fan_oracles, fan_to_bunch

P1XP1 = bunch_from_weights([(1, 0), (1, 0), (0, 1), (0, 1)], [[(1, 0), (0, 1)]])


def dimension(b):
    return b.pc.e_rank - b.k_rank


def test_validation():
    good = KleinschmidtData((1, 0), (2, 1, 1))
    assert good.problems() == [] and good.dim == 2
    assert good.weights() == [(1, 0), (1, 0), (1, 1), (0, 1)]
    for b, mu, fragment in [((1, 0), (1, 2, 1), "mu_1 > 1"),
                            ((0,), (2, 1), "mu_2 + ... + mu_n > 1"),
                            ((1, 1), (2, 1, 1), "b_n = 0"),
                            ((1, 2, 0), (2, 1, 1, 1), "b_2 > ... > b_n"),
                            ((0,), (2, 1, 1), "n - 1 values")]:
        d = KleinschmidtData(b, mu)
        assert any(fragment in p for p in d.problems())
        with pytest.raises(InvalidParameters):
            kleinschmidt_to_bunch(d)
    with pytest.raises(InvalidParameters):
        enumerate_kleinschmidt(1, 2)


def test_surfaces_are_hirzebruch():
    # smooth projective toric surfaces of Picard rank 2 are F_0, F_1, F_2, ...
    rows = enumerate_kleinschmidt(2, 3)
    assert [(d.b, d.mu) for d in rows] == [((0,), (2, 2)), ((1, 0), (2, 1, 1)),
                                          ((2, 0), (2, 1, 1)), ((3, 0), (2, 1, 1))]
    hirzebruch = {a: Fan(2, [(1, 0), (0, 1), (-1, a), (0, -1)], [[0, 1], [1, 2], [2, 3], [3, 0]])
                  for a in range(4)}
    for a, d in enumerate(rows):
        assert free_bunch_isomorphic(kleinschmidt_to_bunch(d), fan_to_bunch(hirzebruch[a]))
    assert [kleinschmidt_is_fano(d) for d in rows] == [True, True, False, False]


def test_enumeration_is_smooth_complete_projective():
    for dim in (2, 3, 4):
        for d in enumerate_kleinschmidt(dim, 3):
            b = kleinschmidt_to_bunch(d)
            assert dimension(b) == dim
            flags = dictionary(b)
            assert flags.smooth and flags.complete
            fan = fan_oracles(bunch_to_fan(b))
            assert fan.smooth and fan.complete and fan.quasiprojective
            assert ample_nonempty(b) and is_projective_simplicial(b)


def test_aligned_inequality_matches_ample_test():
    for dim in (2, 3, 4):
        for d in enumerate_kleinschmidt(dim, 3):
            assert aligned_fano_inequality(d) == kleinschmidt_is_fano(d)


def test_printed_inequality_is_a_diagnostic():
    f2 = KleinschmidtData((2, 0), (2, 1, 1))
    assert printed_fano_inequality(f2) and not kleinschmidt_is_fano(f2)


def test_enumeration_has_no_isomorphic_pairs():
    rows = [kleinschmidt_to_bunch(d) for d in enumerate_kleinschmidt(3, 3)]
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            assert free_bunch_isomorphic(rows[i], rows[j]) is None


def test_canonical_extension():
    assert canonical_extension(P1XP1, [2, 2]) == P1XP1
    bigger = canonical_extension(P1XP1, [3, 3])
    assert dimension(bigger) == 4 and dictionary(bigger).complete
    oda = catalog.example("oda")
    ext = canonical_extension(oda, [2] * 6)
    assert dimension(ext) == dimension(oda) + 6
    assert is_standard(ext)
    d = dictionary(ext)
    assert d.complete and d.q_factorial and not ample_nonempty(ext)
    with pytest.raises(MultiplicityDecrease):
        canonical_extension(P1XP1, [1, 2])
    with pytest.raises(InvalidParameters):
        canonical_extension(P1XP1, [2])
    torsion = fan_to_bunch(Fan(2, [(1, 0), (1, 2), (-1, 0), (-1, -2)],
                               [[0, 1], [1, 2], [2, 3], [3, 0]]))
    with pytest.raises(NotFree):
        canonical_extension(torsion, [1, 1, 1, 1])


def test_extension_keeps_bunch_cones():
    ext = canonical_extension(bunch_from_weights([(1,), (2,), (3,)], [[(1,)]]), [2, 1, 1])
    assert ext.cones == (Cone([(1,)]),) and ext.weights == ((1,), (1,), (2,), (3,))
