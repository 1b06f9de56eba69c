import pytest

from fan_suite import P2
from torusfan.constructions import make_calabi_eckmann, make_hopf, p1_times_elliptic
from torusfan.errors import Condition1Failed, InvalidStratum, ObstructionFails
from torusfan.exact import GaussianRational, I
from torusfan.polyhedral import Fan
from torusfan.triple import (Triple, hert, kaehler_obstruction, orbit_limit, product_decomposition,
                             quotient_fan, validate_c2)


def test_gallery_triples_are_valid(triples):
    for name, T in triples.items():
        rep = validate_c2(T)
        assert rep.valid, (name, rep.failures())


def test_dimensions():
    ce = make_calabi_eckmann(2, 4)
    assert ce.complex_dim == 3 and ce.quotient_dim == 2
    assert len(ce.minimal_orbits()) == 4


def test_real_alpha_breaks_condition_one():
    fan = Fan.from_maximal(2, [(1, 0), (0, 1)], [[0], [1]])
    T = Triple(2, fan, ((1, 2),))
    rep = validate_c2(T)
    assert not rep.checks["condition_1"].ok
    assert rep.checks["quotient_complete"].witness.startswith("not evaluated")
    with pytest.raises(Condition1Failed):
        quotient_fan(T)


def test_dependent_h_reported():
    T = Triple(2, Fan.origin(2), ((1, I), (2, 2 * I)))
    assert not validate_c2(T).checks["h_independent"].ok


def test_negative_quotient_dimension():
    T = Triple(2, Fan.origin(2), ((1, 0), (0, 1)))
    assert not validate_c2(T).checks["dimension"].ok


def test_incomplete_quotient_detected():
    # Hopf data with one ray dropped: the image fan misses a half-line
    fan = Fan.from_maximal(3, [(1, 0, 0), (0, 1, 0)], [[0, 1]])
    T = Triple(3, fan, ((1, 1, I),))
    rep = validate_c2(T)
    assert rep.checks["condition_1"].ok
    assert not rep.valid


def test_quotient_of_hopf_is_p1():
    Q = quotient_fan(make_hopf(2))
    assert Q.quotient_dim == 1
    assert sorted(Q.fan.rays) == [(-1,), (1,)]


def test_orbit_limit():
    ce = make_calabi_eckmann(2, 4)
    assert orbit_limit(ce, (1, 0, 1, 0)) == frozenset({0, 2})
    assert orbit_limit(ce, (0, 0, 0, 0)) == frozenset()
    assert orbit_limit(ce, (-1, 0, 0, 0)) is None


def test_hert_values():
    ce = make_calabi_eckmann(2, 4)
    assert hert(ce, {0, 2}) == (0, 2, 0, 2)
    assert hert(ce, set()) == (0, 0, 2, 4)
    with pytest.raises(InvalidStratum):
        hert(ce, {0, 1})


def test_kaehler_values():
    assert kaehler_obstruction(make_calabi_eckmann(2, 4)) == (False, 4, 2)
    assert kaehler_obstruction(make_hopf(2)) == (False, 2, 1)
    assert kaehler_obstruction(Triple(2, P2, ())).passes


def test_decomposition_refuses_non_kaehler():
    with pytest.raises(ObstructionFails):
        product_decomposition(make_hopf(2))


def test_decomposition_of_p1_times_elliptic():
    T = p1_times_elliptic()
    D = product_decomposition(T)
    assert D.base_rank == 2
    assert sorted(D.fiber_fan.rays) == [(-1,), (1,)]
    assert D.base_h_basis == ((GaussianRational(1), I),)
    assert D.recombine() == T.fan


def test_decomposition_of_toric_has_trivial_base():
    D = product_decomposition(Triple(2, P2, ()))
    assert D.base_rank == 0 and D.base_h_basis == ()
    assert D.recombine() == P2


def test_decomposition_with_tilted_fiber():
    # fiber lattice spanned by (1, 1, 0): the split must still recombine exactly
    fan = Fan.from_maximal(3, [(1, 1, 0), (-1, -1, 0)], [[0], [1]])
    T = Triple(3, fan, ((0, 1, I),))
    assert validate_c2(T).valid
    D = product_decomposition(T)
    assert D.recombine() == fan
