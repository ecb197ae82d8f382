"""Core monomial ideal arithmetic against brute-force oracles."""

import random
from itertools import product as iproduct

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyshift.errors import IdealParseError
from polyshift.monomials import (
    MonomialIdeal,
    divides,
    format_ideal,
    maximal_ideal,
    minimalize,
    mono_mul,
    monomials_of_degree,
    parse_ideal,
    principal,
)


def random_monomials(rng, count, n, emax=3):
    return [tuple(rng.randint(0, emax) for _ in range(n)) for _ in range(count)]


def all_monomials_upto(n, degmax):
    for d in range(degmax + 1):
        yield from monomials_of_degree(n, d)


def naive_member(gens, m):
    return any(divides(g, m) for g in gens)


# ---------------------------------------------------------------------------
# minimalize


def test_minimalize_drops_multiples():
    assert str(parse_ideal("x1, x1*x2", n=2)) == "x1"


def test_minimalize_keeps_antichain():
    ideal = parse_ideal("x1*x2, x1*x3, x2*x3")
    assert len(ideal.gens) == 3


def test_minimalize_random_matches_divisibility_filter():
    rng = random.Random(42)
    gens = random_monomials(rng, 100, 4)
    ideal = minimalize(gens, 4)
    gen_set = set(gens)
    expected = {
        m
        for m in gen_set
        if not any(g != m and divides(g, m) for g in gen_set)
    }
    assert set(ideal.gens) == expected


def test_minimalize_idempotent():
    rng = random.Random(7)
    gens = random_monomials(rng, 40, 3)
    once = minimalize(gens, 3)
    again = minimalize(once.gens, 3)
    assert once == again


def test_membership_invariant_under_reminimalization():
    rng = random.Random(3)
    gens = random_monomials(rng, 30, 3)
    ideal = minimalize(gens, 3)
    fat = list(gens) + [mono_mul(g, (1, 0, 2)) for g in gens]
    refat = minimalize(fat, 3)
    assert refat == ideal
    for m in all_monomials_upto(3, 4):
        assert ideal.contains(m) == naive_member(gens, m)


def test_mismatched_lengths_rejected():
    with pytest.raises(ValueError):
        MonomialIdeal(3, [(1, 0)])
    with pytest.raises(ValueError):
        MonomialIdeal(2, [(1, -1)])


# ---------------------------------------------------------------------------
# contains


def test_contains_basics():
    ideal = parse_ideal("x1*x2")
    assert ideal.contains((2, 1))
    assert not ideal.contains((2, 0))


def test_contains_veronese_type_example():
    from polyshift.polymatroids import veronese

    big = veronese((10, 10, 10, 10), 17)
    assert big.contains((10, 7, 0, 0))


# ---------------------------------------------------------------------------
# product / power


def test_product_square_of_maximal():
    assert str(maximal_ideal(2) ** 2) == "x1^2, x1*x2, x2^2"


def test_power_one_is_identity():
    ideal = parse_ideal("x1*x2, x2^2*x3")
    assert ideal ** 1 == ideal


def test_power_zero_is_ring():
    ideal = parse_ideal("x1*x2")
    assert (ideal ** 0).is_ring


def test_power_membership_matches_pairwise_products():
    sec6 = parse_ideal("x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5, x3*x4, x3*x5")
    sq = sec6 ** 2
    assert all(sum(g) == 4 for g in sq.gens)
    brute = {mono_mul(a, b) for a in sec6.gens for b in sec6.gens}
    assert set(sq.gens) == {
        m for m in brute if not any(g != m and divides(g, m) for g in brute)
    }


def test_product_commutes_associates():
    rng = random.Random(5)
    ideals = [minimalize(random_monomials(rng, 5, 3, 2), 3) for _ in range(3)]
    a, b, c = ideals
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2))
def test_power_additivity(a, b):
    ideal = parse_ideal("x1*x2, x2*x3, x1^2")
    assert ideal.power(a) * ideal.power(b) == ideal.power(a + b)


# ---------------------------------------------------------------------------
# colon


def test_colon_monomial_example():
    sec6 = parse_ideal("x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5, x3*x4, x3*x5")
    assert str(sec6.colon_monomial((1, 0, 0, 0, 0))) == "x3, x4, x5"


def test_colon_by_unit():
    ideal = parse_ideal("x1^2, x2*x3")
    assert ideal.colon_monomial((0, 0, 0)) == ideal
    assert ideal.colon(MonomialIdeal.ring(3)) == ideal


def test_colon_m2_by_m_is_m():
    for n in (1, 2, 3):
        mm = maximal_ideal(n)
        got = (mm ** 2).colon(mm)
        assert got == mm
        # brute force on low degrees
        for m in all_monomials_upto(n, 2):
            in_colon = all((mm ** 2).contains(mono_mul(m, b)) for b in mm.gens)
            assert got.contains(m) == in_colon


def test_colon_by_zero_rejected():
    ideal = parse_ideal("x1")
    with pytest.raises(ValueError):
        ideal.colon(MonomialIdeal.zero(1))


def test_colon_identities():
    rng = random.Random(11)
    ideal = minimalize(random_monomials(rng, 8, 3, 2), 3)
    f = (1, 0, 2)
    g = (0, 1, 1)
    assert ideal.colon_monomial(f).colon_monomial(g) == ideal.colon_monomial(mono_mul(f, g))
    scaled = ideal.colon_monomial(f).scale(f)
    for m in scaled.gens:
        assert ideal.contains(m)


# ---------------------------------------------------------------------------
# intersect


def test_intersect_principal():
    assert str(parse_ideal("x1", n=2) & parse_ideal("x2", n=2)) == "x1*x2"


def test_intersect_idempotent():
    ideal = parse_ideal("x1*x2, x2^2*x3")
    assert (ideal & ideal) == ideal


def test_intersect_membership_bruteforce():
    a = parse_ideal("x1, x2", n=3) ** 2
    b = parse_ideal("x1, x3", n=3) ** 2
    both = a & b
    for m in all_monomials_upto(3, 5):
        assert both.contains(m) == (a.contains(m) and b.contains(m))


# ---------------------------------------------------------------------------
# socle / saturation


def test_socle_of_m_squared():
    assert (maximal_ideal(2) ** 2).socle() == maximal_ideal(2)


def test_socle_principal_univariate():
    # ((x1) : (x1)) is the whole ring, whose generator 1 lies outside (x1)
    assert principal(1, (1,)).socle().is_ring


def test_saturation_of_m_powers():
    for k in (1, 2, 3):
        sat, steps = (maximal_ideal(3) ** k).saturation()
        assert sat.is_ring
        assert steps == k


def test_saturation_of_saturated_ideal():
    ideal = parse_ideal("x1*x2, x1*x3")
    sat, steps = ideal.saturation()
    assert sat == ideal and steps == 0
    fix = sat.colon(maximal_ideal(3))
    assert fix == sat


def test_saturation_matches_iterated_colon():
    rng = random.Random(13)
    ideal = minimalize(random_monomials(rng, 6, 3, 2), 3)
    if ideal.is_zero or ideal.is_ring:
        ideal = parse_ideal("x1^2*x2, x3^2")
    sat, steps = ideal.saturation()
    cur = ideal
    for _ in range(steps):
        cur = cur.colon(maximal_ideal(3))
    assert cur == sat
    assert cur.colon(maximal_ideal(3)) == cur


# ---------------------------------------------------------------------------
# graded components / restriction / bounding data


def test_graded_component_fills_degree():
    ideal = parse_ideal("x1, x2^2")
    assert ideal.graded_component(2) == maximal_ideal(2) ** 2


def test_graded_component_matches_enumeration():
    ideal = parse_ideal("x1*x2, x3^3")
    for j in range(5):
        comp = ideal.graded_component(j)
        expected = [m for m in monomials_of_degree(3, j) if ideal.contains(m)]
        assert set(comp.gens) == set(minimalize(expected, 3).gens)


def test_graded_component_ladder():
    # m * I_<j> sits inside I_<j+1> for every j
    ideal = parse_ideal("x1^2, x2*x3")
    mm = maximal_ideal(3)
    for j in range(6):
        step = mm * ideal.graded_component(j)
        nxt = ideal.graded_component(j + 1)
        assert all(nxt.contains(m) for m in step.gens)


def test_restriction_examples():
    ideal = parse_ideal("x1^2, x1*x2, x2^2")
    assert str(ideal.restriction((1, 2))) == "x1*x2, x2^2"
    assert ideal.restriction(ideal.bounding_multidegree()) == ideal
    assert ideal.restriction((0, 0)).is_zero
    sub = ideal.restriction((1, 1))
    assert sub.restriction((1, 1)) == sub
    for g in sub.gens:
        assert ideal.contains(g)


def test_bounding_multidegree_and_alpha():
    sec6 = parse_ideal("x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5, x3*x4, x3*x5")
    assert sec6.bounding_multidegree() == (1, 1, 1, 1, 1)
    assert (maximal_ideal(2) ** 3).alpha() == 3
    for k in (1, 2, 3):
        assert (sec6 ** k).bounding_multidegree() == tuple(k for _ in range(5))
    with pytest.raises(ValueError):
        MonomialIdeal.zero(2).alpha()
    with pytest.raises(ValueError):
        MonomialIdeal.zero(2).bounding_multidegree()


# ---------------------------------------------------------------------------
# text and JSON round trips


def test_text_round_trip():
    ideal = parse_ideal("x1^2*x3, x2*x4", n=5)
    assert parse_ideal(format_ideal(ideal), n=5) == ideal


def test_json_round_trip():
    ideal = parse_ideal("x1^2*x3, x2*x4", n=5)
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal


def test_parser_rejects_bad_input():
    with pytest.raises(IdealParseError):
        parse_ideal("x0")
    with pytest.raises(IdealParseError):
        parse_ideal("x3", n=2)
    with pytest.raises(IdealParseError):
        parse_ideal("x1^")
    with pytest.raises(IdealParseError):
        parse_ideal("x1,,x2")
    err = None
    try:
        parse_ideal("x1 + x2")
    except IdealParseError as exc:
        err = exc
    assert err is not None and err.pos == 3


def test_json_rejects_negative_exponents():
    with pytest.raises(IdealParseError):
        MonomialIdeal.from_json({"n": 2, "gens": [[1, -1]]})
    with pytest.raises(IdealParseError):
        MonomialIdeal.from_json({"n": 2, "gens": [[1, 0, 0]]})


def test_zero_and_ring_are_representable():
    z = parse_ideal("0", n=3)
    assert z.is_zero and format_ideal(z) == "0"
    r = parse_ideal("1", n=3)
    assert r.is_ring and format_ideal(r) == "1"


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
        min_size=1,
        max_size=8,
    )
)
def test_round_trip_any_ideal(gens):
    ideal = MonomialIdeal(3, gens)
    assert parse_ideal(format_ideal(ideal), n=3) == ideal
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal
