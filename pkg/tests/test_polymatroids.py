"""Exchange properties, constructions, duals and the Möbius function."""

import random
from itertools import combinations

import pytest

from polyshift.monomials import MonomialIdeal, divides, maximal_ideal, parse_ideal
from polyshift.polymatroids import (
    DiscretePolymatroid,
    Graph,
    box_polymatroid,
    check_strong_exchange,
    check_symmetric_exchange,
    complement_clique_partition,
    complete_multipartite,
    edge_ideal,
    exchange_violation,
    is_complete_multipartite,
    is_complete_multipartite_support,
    is_componentwise_polymatroidal,
    is_matroidal,
    is_polymatroidal,
    mobius_hs_membership,
    principal_borel,
    veronese,
)

SEC6 = parse_ideal("x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5, x3*x4, x3*x5")


# ---------------------------------------------------------------------------
# exchange checks


def test_sec6_is_polymatroidal():
    assert is_polymatroidal(SEC6)


def test_pure_powers_fail_with_witness():
    ideal = parse_ideal("x1^2, x2^2")
    assert not is_polymatroidal(ideal)
    assert exchange_violation(ideal) == ((2, 0), (0, 2), 0)


def test_zero_ideal_is_not_polymatroidal():
    assert not is_polymatroidal(MonomialIdeal.zero(3))


def test_non_equigenerated_is_not_polymatroidal():
    assert not is_polymatroidal(parse_ideal("x1, x2^2"))


def test_veronese_always_polymatroidal():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(2, 4)
        a = tuple(rng.randint(0, 3) for _ in range(n))
        if not any(a):
            continue
        d = rng.randint(1, sum(a))
        assert is_polymatroidal(veronese(a, d))


def test_polymatroidal_implies_symmetric_exchange():
    rng = random.Random(9)
    for _ in range(15):
        n = rng.randint(2, 5)
        a = tuple(rng.randint(0, 2) for _ in range(n))
        if sum(a) < 2:
            continue
        ideal = veronese(a, rng.randint(1, min(4, sum(a))))
        assert check_symmetric_exchange(ideal)
    assert check_symmetric_exchange(SEC6)


def test_strong_exchange_for_scaled_veronese():
    core = veronese((2, 1, 2), 2)
    assert check_strong_exchange(core)
    assert check_strong_exchange(core.scale((1, 0, 3)))


def test_strong_exchange_can_fail_for_polymatroidal():
    # complete multipartite edge ideal with parts of size 2 is polymatroidal
    # yet not strong exchange: x2*x4 vs x1*x3 cannot swap freely
    ideal = edge_ideal(complete_multipartite([2, 2]))
    assert is_polymatroidal(ideal)
    assert not check_strong_exchange(ideal)


def test_exchange_needs_equigenerated():
    with pytest.raises(ValueError):
        exchange_violation(parse_ideal("x1, x2^2"))
    with pytest.raises(ValueError):
        check_symmetric_exchange(parse_ideal("x1, x2^2"))
    with pytest.raises(ValueError):
        check_strong_exchange(parse_ideal("x1, x2^2"))


def test_product_of_polymatroidal_is_polymatroidal():
    rng = random.Random(21)
    for _ in range(10):
        n = rng.randint(2, 4)
        a = tuple(rng.randint(1, 2) for _ in range(n))
        i1 = veronese(a, rng.randint(1, sum(a)))
        i2 = veronese(a, rng.randint(1, sum(a)))
        assert is_polymatroidal(i1 * i2)


def test_restriction_of_polymatroidal_is_polymatroidal():
    rng = random.Random(22)
    for _ in range(10):
        ideal = veronese((2, 2, 2), rng.randint(1, 4))
        deg = ideal.bounding_multidegree()
        keep = rng.choice(ideal.gens)
        a = tuple(rng.randint(keep[i], deg[i]) for i in range(3))
        sub = ideal.restriction(a)
        assert is_polymatroidal(sub)


# ---------------------------------------------------------------------------
# veronese / borel


def test_veronese_squarefree():
    assert str(veronese((1, 1, 1), 2)) == "x1*x2, x1*x3, x2*x3"


def test_veronese_capped():
    assert str(veronese((2, 1), 2)) == "x1^2, x1*x2"


def test_veronese_errors():
    with pytest.raises(ValueError):
        veronese((1, 1), 3)
    with pytest.raises(ValueError):
        veronese((1, 1), 0)


def test_veronese_large_count_matches_enumeration():
    a = (10, 10, 10, 10)
    ideal = veronese(a, 14)
    assert ideal.contains((10, 4, 0, 0))
    brute = 0
    for b1 in range(11):
        for b2 in range(11):
            for b3 in range(11):
                b4 = 14 - b1 - b2 - b3
                if 0 <= b4 <= 10:
                    brute += 1
    assert len(ideal.gens) == brute


def test_borel_of_pure_power_is_principal():
    assert str(principal_borel((3, 0))) == "x1^3"


def test_borel_example():
    assert str(principal_borel((0, 1, 1))) == "x1^2, x1*x2, x1*x3, x2^2, x2*x3"


def test_borel_matches_componentwise_enumeration():
    # B(x2*x3) via p1 <= 2, p2 <= 3, p1 <= p2 directly
    expected = set()
    for p1 in (1, 2):
        for p2 in range(p1, 4):
            v = [0, 0, 0]
            v[p1 - 1] += 1
            v[p2 - 1] += 1
            expected.add(tuple(v))
    assert set(principal_borel((0, 1, 1)).gens) == expected


def test_borel_power_identity():
    rng = random.Random(17)
    for _ in range(8):
        n = rng.randint(2, 4)
        u = [0] * n
        for _ in range(rng.randint(1, 3)):
            u[rng.randrange(n)] += 1
        b = principal_borel(u)
        for s in (2, 3):
            us = tuple(x * s for x in u)
            assert b ** s == principal_borel(us)


def test_borel_unit_rejected():
    with pytest.raises(ValueError):
        principal_borel((0, 0))


# ---------------------------------------------------------------------------
# graphs


def test_single_edge_is_matroidal():
    g = Graph.from_edges(2, [(1, 2)])
    assert is_matroidal(edge_ideal(g))


def test_star_path_is_matroidal():
    # the two-edge path is the star K_{1,2}, hence complete multipartite
    g = Graph.from_edges(3, [(1, 2), (2, 3)])
    assert is_matroidal(edge_ideal(g))
    assert is_complete_multipartite(g)


def test_three_edge_path_not_matroidal():
    g = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
    assert not is_matroidal(edge_ideal(g))
    assert not is_complete_multipartite(g)
    assert exchange_violation(edge_ideal(g)) is not None


def test_complete_multipartite_construction():
    g = complete_multipartite([2, 3])
    ideal = edge_ideal(g)
    assert str(ideal) == "x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5"
    assert is_complete_multipartite(g)
    # the ideal of parts {1,2},{3},{4,5} is exactly the running example
    assert edge_ideal(complete_multipartite([2, 1, 2])) == SEC6


def test_complement_partition_recovers_parts():
    g = complete_multipartite([2, 1, 2])
    assert complement_clique_partition(g) == [[0, 1], [2], [3, 4]]


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_multipartite_iff_matroidal_exhaustive_small():
    # every labeled simple graph on up to 5 vertices; matroidality of the
    # edge ideal only sees the support, hence the support-based recognition
    for n in (2, 3, 4, 5):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[t] for t in range(len(pairs)) if mask >> t & 1]
            g = Graph.from_edges(n, edges)
            ideal = edge_ideal(g)
            matro = (not ideal.is_zero) and is_matroidal(ideal)
            assert matro == is_complete_multipartite_support(g), (n, edges)


def test_isolated_vertices_do_not_affect_matroidality():
    g = Graph.from_edges(4, [(1, 2)])
    assert is_matroidal(edge_ideal(g))
    assert not is_complete_multipartite(g)
    assert is_complete_multipartite_support(g)


# ---------------------------------------------------------------------------
# polymatroid structure


def test_from_ideal_round_trip():
    poly = DiscretePolymatroid.from_ideal(SEC6)
    assert poly.ideal() == SEC6
    assert poly.cage == (1, 1, 1, 1, 1)
    assert poly.rank == 2


def test_from_ideal_rejects_non_polymatroidal():
    with pytest.raises(ValueError):
        DiscretePolymatroid.from_ideal(parse_ideal("x1^2, x2^2"))


def test_cage_must_dominate():
    with pytest.raises(ValueError):
        DiscretePolymatroid.from_ideal(SEC6, cage=(1, 1, 1, 1, 0))
    bigger = DiscretePolymatroid.from_ideal(SEC6, cage=(2, 2, 2, 2, 2))
    assert bigger.cage == (2, 2, 2, 2, 2)


def test_lattice_points_box():
    poly = DiscretePolymatroid.from_bases_unchecked(2, [(1, 1)])
    assert set(poly.lattice_points()) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_lattice_points_count_for_box_polymatroid():
    c = (2, 3)
    for i in (1, 2, 3):
        poly = box_polymatroid(c, i)
        expected = sum(
            1
            for y1 in range(c[0] + 1)
            for y2 in range(c[1] + 1)
            if y1 + y2 <= i
        )
        assert len(poly.lattice_points()) == expected


def test_bases_are_maximal_lattice_points():
    poly = DiscretePolymatroid.from_ideal(veronese((2, 1, 1), 2))
    points = set(poly.lattice_points())
    for b in poly.bases:
        assert not any(p != b and divides(b, p) for p in points)


def test_dual_involution_and_rank():
    cage = (2, 2, 2)
    poly = DiscretePolymatroid.from_ideal(veronese((2, 2, 2), 3), cage=cage)
    dual = poly.dual()
    assert dual.rank == sum(cage) - poly.rank
    assert dual.dual().bases == poly.bases


def test_dual_rank_function_identity():
    cage = (2, 1, 2)
    poly = DiscretePolymatroid.from_ideal(veronese(cage, 3), cage=cage)
    dual = poly.dual()
    n = 3
    full = set(range(n))
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            a = set(subset)
            lhs = dual.rank_of(a) if a else 0
            rho_comp = poly.rank_of(full - a) if a != full else 0
            rhs = rho_comp - poly.rank + sum(cage[i] for i in a)
            assert lhs == rhs


def test_dual_of_veronese_is_veronese():
    a = (2, 1, 2)
    for d in (1, 2, 3, 4):
        poly = DiscretePolymatroid.from_ideal(veronese(a, d), cage=a)
        assert poly.dual().ideal() == veronese(a, sum(a) - d)


# ---------------------------------------------------------------------------
# Möbius function


def test_mobius_maximal_points_are_one():
    poly = DiscretePolymatroid.from_ideal(veronese((2, 2), 2))
    table = poly.mobius()
    for b in poly.bases:
        assert table[b] == 1


def test_mobius_interval_recursion_sums_to_delta():
    # sum of mu1(z, top) over z in [u, top] vanishes for every u below top
    poly = box_polymatroid((2, 2), 2)
    poly.mobius()
    mu1 = poly._mu1
    points = poly.lattice_points()
    for u in points:
        total = 1  # the adjoined top
        for z in points:
            if divides(u, z):
                total += mu1[z]
        assert total == 0


def test_box_mobius_zero_iff_small_ground():
    for n in range(1, 5):
        for i in range(1, 5):
            for entry in (1, 2, 3):
                poly = box_polymatroid((entry,) * n, i)
                assert (poly.mobius_at((0,) * n) == 0) == (n <= i)


def test_box_examples():
    assert box_polymatroid((5,), 3).bases == ((3,),)
    poly = box_polymatroid((3, 2, 1), 4)
    points = poly.lattice_points()
    assert set(poly.bases) == {p for p in points if sum(p) == 4}


def test_mobius_at_agrees_with_full_table():
    poly = box_polymatroid((2, 2, 1), 3)
    table = poly.mobius()
    fresh = box_polymatroid((2, 2, 1), 3)
    for p in table.points:
        assert fresh.mobius_at(p) == table[p]


def test_mobius_outside_poset_is_zero():
    poly = box_polymatroid((1, 1), 1)
    assert poly.mobius_at((2, 0)) == 0


# ---------------------------------------------------------------------------
# homological shift membership through the dual Möbius function


def test_membership_i0_is_ideal_membership():
    poly = DiscretePolymatroid.from_ideal(SEC6)
    for u in poly.bases:
        assert mobius_hs_membership(poly, u, ())


def test_membership_rejects_bad_arguments():
    poly = DiscretePolymatroid.from_ideal(SEC6)
    with pytest.raises(ValueError):
        mobius_hs_membership(poly, (9, 9, 9, 9, 9), (0,))
    with pytest.raises(ValueError):
        mobius_hs_membership(poly, poly.bases[0], (0, 0))


def test_membership_negative_entries_false():
    poly = DiscretePolymatroid.from_ideal(SEC6)  # cage is all-ones
    u = poly.bases[0]
    js = tuple(sorted(i for i in range(5) if u[i]))[:2]
    # subtracting e_j twice under an all-ones cage goes negative
    assert mobius_hs_membership(poly, u, js) is False


def test_membership_matches_quotient_sets_small():
    from polyshift.resolution import hs

    for ideal in (veronese((1, 1, 1), 2), veronese((2, 1, 1), 2), SEC6):
        poly = DiscretePolymatroid.from_ideal(ideal)
        n = ideal.n
        for i in range(n):
            expected = hs(ideal, i)
            got = set()
            for u in poly.bases:
                for js in combinations(range(n), i):
                    if mobius_hs_membership(poly, u, js):
                        w = list(u)
                        for j in js:
                            w[j] += 1
                        got.add(tuple(w))
            assert MonomialIdeal(n, got) == expected


# ---------------------------------------------------------------------------
# componentwise polymatroidality


def test_polymatroidal_is_componentwise():
    assert is_componentwise_polymatroidal(SEC6)
    assert is_componentwise_polymatroidal(maximal_ideal(3) ** 2)


def test_componentwise_example_mixed_degrees():
    # colon of a polymatroidal ideal by the maximal ideal mixes degrees
    colon = (SEC6 ** 2).colon(maximal_ideal(5))
    assert is_componentwise_polymatroidal(colon)


def test_not_componentwise():
    assert not is_componentwise_polymatroidal(parse_ideal("x1^2, x2^2"))
    assert not is_componentwise_polymatroidal(MonomialIdeal.zero(2))


def test_whole_ring_is_componentwise():
    assert is_componentwise_polymatroidal(MonomialIdeal.ring(2))


def test_polymatroid_json_round_trip():
    poly = DiscretePolymatroid.from_ideal(SEC6)
    again = DiscretePolymatroid.from_json(poly.to_json())
    assert again.bases == poly.bases and again.cage == poly.cage


def test_graph_json_round_trip():
    g = complete_multipartite([2, 2])
    assert Graph.from_json(g.to_json()) == g
