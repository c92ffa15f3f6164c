import random
from fractions import Fraction

import pytest

from sphereprod.errors import NotClosed, NotUnital, WrongRank
from sphereprod.lattices import column_degree
from sphereprod.matrices import IntMatrix
from sphereprod.normal_forms import snf
from sphereprod.orders import (
    ClassificationResult,
    OrderInput,
    classify_order,
    decompose,
    monomial_order_input,
    not_weighted_search,
    verify_order,
)
from sphereprod.rings import (
    CoefficientSequence,
    build_weighted_ring,
    check_ring_map,
)

from util import (
    bad3_order,
    embedded_weighted_order,
    random_admissible_degrees,
    random_coefficients,
    square_obstructed_order,
)


def test_verify_monomial_order():
    inp = monomial_order_input((3, 3, 3))
    ring = verify_order(inp)
    # exterior multiplication: g1 * g2 = g4 (the a12 slot) up to order
    idx = {label: i for i, label in enumerate(ring.labels)}
    assert ring.degrees[idx["g0"]] == 0
    products = [x for x in ring.table[1][2]]
    assert sum(1 for x in products if x != 0) == 1


def test_verify_weighted_embedding():
    rng = random.Random(8000)
    for _ in range(10):
        c = random_coefficients(rng, entry_bound=12)
        d = random_admissible_degrees(rng, max_degree=6)
        inp = embedded_weighted_order(c, d)
        ring = verify_order(inp)
        for row in ring.table:
            for cell in row:
                assert all(x.denominator == 1 for x in cell)


def test_verify_not_closed():
    # half of a12 with unit full weight: (1/2 x1)(x2) stays, but
    # x1 * (1/2 x12)-style products break closure
    F = Fraction
    gens = [
        (0, (1, 0, 0, 0, 0, 0, 0, 0)),
        (3, (0, 1, 0, 0, 0, 0, 0, 0)),
        (3, (0, 0, 1, 0, 0, 0, 0, 0)),
        (3, (0, 0, 0, 0, 1, 0, 0, 0)),
        (6, (0, 0, 0, F(1, 2), 0, 0, 0, 0)),
        (6, (0, 0, 0, 0, 0, 1, 0, 0)),
        (6, (0, 0, 0, 0, 0, 0, 1, 0)),
        (9, (0, 0, 0, 0, 0, 0, 0, 1)),
    ]
    with pytest.raises(NotClosed):
        verify_order(OrderInput((3, 3, 3), gens))


def test_verify_not_unital():
    F = Fraction
    gens = [(0, (F(2), 0, 0, 0, 0, 0, 0, 0))] + [
        (d, tuple(F(1) if m == mask else F(0) for m in range(8)))
        for d, mask in ((3, 1), (3, 2), (3, 4), (6, 3), (6, 5), (6, 6),
                        (9, 7))]
    with pytest.raises(NotUnital):
        verify_order(OrderInput((3, 3, 3), gens))


def test_verify_wrong_rank():
    F = Fraction
    gens = [(0, (F(1), 0, 0, 0, 0, 0, 0, 0))] + [
        (3, tuple(F(1) if m == 1 else F(0) for m in range(8)))] * 7
    with pytest.raises(WrongRank):
        verify_order(OrderInput((3, 3, 3), gens))


def test_decompose_monomial():
    inp = monomial_order_input((3, 3, 3))
    dec = decompose(inp)
    assert (dec.l1.rank, dec.l2.rank, dec.l3.rank) == (3, 3, 1)
    assert sorted(dec.part_degrees(1)) == [3, 3, 3]
    assert sorted(dec.part_degrees(2)) == [6, 6, 6]
    assert dec.part_degrees(3) == [9]


def test_decompose_bad3_degrees():
    dec = decompose(bad3_order())
    assert sorted(dec.part_degrees(1)) == [2, 2, 3]
    assert sorted(dec.part_degrees(2)) == [4, 5, 5]
    assert dec.part_degrees(3) == [7]


def test_decompose_weighted_embeddings():
    rng = random.Random(8001)
    for _ in range(8):
        c = random_coefficients(rng, entry_bound=10)
        d = random_admissible_degrees(rng, max_degree=6)
        dec = decompose(embedded_weighted_order(c, d, rng=rng))
        assert (dec.l1.rank, dec.l2.rank, dec.l3.rank) == (3, 3, 1)
        assert sorted(dec.part_degrees(1)) == sorted(d)


def test_classify_monomial_lattice():
    for d in ((3, 3, 3), (3, 3, 5), (2, 3, 4), (1, 2, 3), (2, 2, 3)):
        result = classify_order(monomial_order_input(d))
        assert result.is_weighted, (d, result.report)
        assert result.coefficients == CoefficientSequence.ones()


def test_classify_all_distinct_returns_exact_coefficients():
    rng = random.Random(8002)
    count = 0
    while count < 12:
        d = tuple(sorted(rng.randint(2, 7) for _ in range(3)))
        if len(set(d)) != 3:
            continue
        count += 1
        c = random_coefficients(rng, entry_bound=12)
        result = classify_order(embedded_weighted_order(c, d, rng=rng))
        assert result.is_weighted
        assert result.coefficients == c


def test_classify_all_equal_divisors():
    rng = random.Random(8003)
    for _ in range(10):
        d = rng.choice(((3, 3, 3), (5, 5, 5), (7, 7, 7)))
        c = random_coefficients(rng, entry_bound=12)
        result = classify_order(embedded_weighted_order(c, d, rng=rng))
        assert result.is_weighted
        got = sorted((result.coefficients.c12, result.coefficients.c13,
                      result.coefficients.c23))
        diag = IntMatrix([[c.c12, 0, 0], [0, c.c13, 0], [0, 0, c.c23]])
        assert got == sorted(snf(diag).diagonal)


def test_classify_round_trip_witness():
    rng = random.Random(8004)
    for _ in range(25):
        d = random_admissible_degrees(rng)
        c = random_coefficients(rng)
        inp = embedded_weighted_order(c, d, rng=rng)
        ring = verify_order(inp)
        result = classify_order(inp)
        assert result.is_weighted, (d, c, result.report)
        model = build_weighted_ring(result.coefficients, d)
        assert check_ring_map(result.witness, model, ring)


def test_classify_coincidence_degrees():
    # degree patterns where one degree is the sum of the other two
    rng = random.Random(8005)
    for d in ((2, 4, 6), (3, 3, 6), (1, 3, 4), (2, 3, 5), (1, 1, 2)):
        for _ in range(4):
            c = random_coefficients(rng, entry_bound=8)
            inp = embedded_weighted_order(c, d, rng=rng)
            ring = verify_order(inp)
            result = classify_order(inp)
            assert result.is_weighted, (d, c, result.report)
            model = build_weighted_ring(result.coefficients, d)
            assert check_ring_map(result.witness, model, ring)


def test_classify_square_obstructed_order():
    result = classify_order(square_obstructed_order())
    assert result.outcome == "not_weighted_certified"
    assert result.report["reason"] == "square-zero obstruction"


def test_classify_bad3_certified():
    result = classify_order(bad3_order())
    assert result.outcome == "not_weighted_certified"
    cands = result.report["candidates_by_degree"]["2"]
    vectors = {tuple(Fraction(x) for x in vec) for vec in cands}
    e1 = tuple(Fraction(1 if m == 1 else 0) for m in range(8))
    e2 = tuple(Fraction(1 if m == 2 else 0) for m in range(8))
    minus = lambda v: tuple(-x for x in v)
    assert vectors == {e1, minus(e1), e2, minus(e2)}
    assert result.report["failures"]
    for failure in result.report["failures"]:
        assert failure["failure"]["degree"] == 5


def test_search_finds_weighted_basis():
    c = CoefficientSequence(2, 1, 3, 6)
    inp = embedded_weighted_order(c, (2, 4, 3))
    result = not_weighted_search(inp)
    assert result.is_weighted
    assert result.coefficients == c

    result = not_weighted_search(monomial_order_input((3, 3, 3)))
    assert result.is_weighted
    assert result.coefficients == CoefficientSequence.ones()


def test_search_routed_for_repeated_even():
    # repeated even degrees are dispatched to the search automatically
    inp = monomial_order_input((2, 2, 4))
    result = classify_order(inp)
    assert result.case == "search"
    assert result.is_weighted
