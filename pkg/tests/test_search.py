"""Shift-prime searches and the two-orbit predicate."""

import itertools

from twistparity.frobenius import prime_scan, sigma_set
from twistparity.papercases import (
    curve_1440d1,
    curve_h,
    curve_s5_quintic,
    curve_x3_minus_2,
)
from twistparity.search import find_shift_primes, odd_p_orbit_predicate


def take(stream, k):
    return list(itertools.islice(stream, k))


def test_odd_p_orbit_predicate_examples():
    assert odd_p_orbit_predicate((1, 2), 3)
    assert not odd_p_orbit_predicate((3, 4), 3)
    assert not odd_p_orbit_predicate((1, 1, 1), 3)
    assert odd_p_orbit_predicate((2, 5), 3)
    assert not odd_p_orbit_predicate((2, 3), 3)


def test_x3_minus_2_raise_stream_golden():
    got = take(find_shift_primes(curve_x3_minus_2(), "raise2", 700), 3)
    assert [r.l for r in got] == [433, 457, 601]
    for r in got:
        assert r.cycle_type == (1, 1, 1)
        assert r.d.d == r.l
        assert r.verify(curve_x3_minus_2())


def test_s5_quintic_streams_golden():
    s5 = curve_s5_quintic()
    up = take(find_shift_primes(s5, "raise2", 1800), 3)
    assert [r.l for r in up] == [17, 457, 1697]
    assert all(r.cycle_type == (1, 1, 3) for r in up)
    down = take(find_shift_primes(s5, "lower2", 500), 3)
    assert [r.l for r in down] == [17, 313, 457]
    assert down[1].cycle_type == (1, 2, 2)
    for r in up + down:
        assert r.verify(s5)


def test_recipe_conditions_are_listed():
    r = take(find_shift_primes(curve_x3_minus_2(), "raise2", 500), 1)[0]
    names = dict(r.checked_conditions)
    assert names["class_index_2"] is True
    assert names["three_odd_orbits"] is True
    assert names["l_is_1_mod_8"] is True
    assert names["loc_image_zero"] == "unverified"
    r2 = take(find_shift_primes(curve_s5_quintic(), "lower2", 500), 1)[0]
    names2 = dict(r2.checked_conditions)
    assert "three_odd_orbits" not in names2
    assert names2["loc_image_dim_2"] == "unverified"


def test_h_quintic_stream_is_empty():
    """Class index 2 for this curve forces (2|l) = -1, so l = 1 mod 8 never happens.

    The splitting field is biquadratic with Q(sqrt(2)) inside: i = 2 means
    both quadratic factors stay inert, which pins l to 3 or 5 mod 8.
    """
    ch = curve_h()
    assert take(find_shift_primes(ch, "lower2", 20000), 1) == []
    assert take(find_shift_primes(ch, "raise2", 20000), 1) == []
    for pc in prime_scan(ch, 2, 3000, predicate=lambda pc: pc.i == 2):
        assert pc.l % 8 in (3, 5)


def test_an_side_curve_emits_only_even_classes():
    c = curve_1440d1()
    recipes = take(find_shift_primes(c, "raise2", 2000), 3)
    assert recipes, "fully split curve is P_2 at every good prime"
    for r in recipes:
        assert r.cycle_type == (1, 1, 1)
        assert r.verify(c)


def test_stream_density_sanity():
    """Emitted density within a factor 3 of the naive independent product.

    For the S_5 quintic: P(type (1,1,3)) = 1/6, P(l = 1 mod 8) = 1/4 and
    the two Legendre conditions are tied together by the square class of
    the discriminant, contributing 1/2 rather than 1/4 -- all swallowed
    by the deliberately coarse factor-3 bound.
    """
    s5 = curve_s5_quintic()
    limit = 30000
    hits = len(list(find_shift_primes(s5, "raise2", limit)))
    total = len(list(prime_scan(s5, 2, limit + 1)))
    naive = (1 / 6) * (1 / 4) * (1 / 4)
    assert naive / 3 < hits / total < naive * 3


def test_limit_zero_yields_empty_stream():
    assert list(find_shift_primes(curve_x3_minus_2(), "raise2", 0)) == []
