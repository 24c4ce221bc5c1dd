import random
import pytest

from so3tqft.cyclo import CycNumber
from so3tqft.sl2_char import (
    borel_check,
    borel_group,
    borel_table,
    chi_beta_report,
    enumerate_group,
    regular_congruence_check,
    screen_induction_triples,
    sl2_group,
    sl2_table,
    tensor_decompose,
)

PRIMES = (5, 7, 11, 13)


def test_group_orders_and_classes():
    g = sl2_group(7)
    assert g.order() == 336
    assert g.num_classes() == 11  # r + 4
    assert sum(g.class_sizes) == 336
    for size in g.class_sizes:
        assert 336 % size == 0
    singletons = [i for i, s in enumerate(g.class_sizes) if s == 1]
    assert len(singletons) == 2  # the center {I, -I}
    for r in PRIMES:
        g = sl2_group(r)
        assert g.order() == r ** 3 - r
        assert g.num_classes() == r + 4


def test_enumerate_group_range():
    with pytest.raises(ValueError):
        enumerate_group(17)
    with pytest.raises(ValueError):
        enumerate_group(4)
    tbl = enumerate_group(7)
    assert tbl.char_table is None and tbl.group.num_classes() == 11


def test_degrees():
    for r in PRIMES:
        tbl = sl2_table(r)
        half = (r - 1) // 2
        assert sum(d * d for d in tbl.degrees) == r ** 3 - r
        assert len(tbl.degrees) == r + 4
        nontrivial_small = [d for d in tbl.degrees if 1 < d <= half]
        assert nontrivial_small == [half, half]
        assert tbl.degrees.count(1) == 1
    # 1 + 2 ((r-1)/2)^2 = (r^2 - 2r + 3)/2 instantiated at r = 11
    assert 1 + 2 * ((11 - 1) // 2) ** 2 == (11 * 11 - 2 * 11 + 3) // 2 == 51


def test_orthogonality_spot():
    # the constructor verifies exact row/column orthogonality; re-derive one
    tbl = sl2_table(5)
    g = tbl.group
    f = tbl.value_field
    acc = f.zero
    for i in range(tbl.num_classes()):
        acc = acc + tbl.char_table[2][i] * tbl.char_table[2][g.inverse_class[i]] * g.class_sizes[i]
    assert acc == f.from_int(g.order())


def test_char_values_are_algebraic_integers():
    rng = random.Random(17)
    tbl = sl2_table(7)
    f = tbl.value_field
    k = tbl.num_classes()
    picks = [(rng.randrange(k), rng.randrange(k)) for _ in range(10)]
    for a, i in picks:
        v = tbl.char_table[a][i]
        # Z[zeta_n] is the full ring of integers, so denominator 1 in the
        # power basis is integrality; the Galois trace must land in Z
        assert v.den == 1
        trace = f.zero
        for s in range(f.n):
            if _coprime(s, f.n):
                trace = trace + _galois(v, s)
        assert trace.is_rational()
        assert trace.as_fraction().denominator == 1


def _coprime(a, n):
    from math import gcd

    return gcd(a, n) == 1


def _galois(v, s):
    f = v.field
    acc = f.zero
    for j, c in enumerate(v.num):
        if c:
            acc = acc + f.zeta_power(j * s) * c
    return CycNumber(f, acc.num, acc.den * v.den)


def test_chi_beta_values_minus_one():
    for r in PRIMES:
        rep = chi_beta_report(r)
        assert rep["degree"] == (r - 1) // 2
        assert len(rep["irrep_indices"]) == 2
        assert rep["square_torus_classes"], "no regular square torus classes"
        assert rep["all_values_minus_one"]


def test_tensor_with_trivial():
    tbl = sl2_table(7)
    triv = tbl.trivial_index()
    for b in range(tbl.num_classes()):
        mults = tensor_decompose(tbl, triv, b)
        assert mults == [1 if c == b else 0 for c in range(tbl.num_classes())]


def test_tensor_with_conjugate_contains_trivial_once():
    tbl = sl2_table(7)
    g = tbl.group
    triv = tbl.trivial_index()
    k = tbl.num_classes()
    for a in range(k):
        # the conjugate character is the row evaluated at inverse classes
        conj_row = [tbl.char_table[a][g.inverse_class[i]] for i in range(k)]
        b = next(
            i for i in range(k) if tbl.char_table[i] == conj_row
        )
        mults = tensor_decompose(tbl, a, b)
        assert mults[triv] == 1
        for c in range(k):
            if c != a:
                other = [tbl.char_table[c][g.inverse_class[i]] for i in range(k)]
                bc = next(i for i in range(k) if tbl.char_table[i] == other)
                if bc != b:
                    assert tensor_decompose(tbl, a, bc)[triv] == 0


def test_ltwo_exhaustive_small():
    for r in (5, 7, 11):
        tbl = sl2_table(r)
        half = (r - 1) // 2
        triv = tbl.trivial_index()
        k = tbl.num_classes()
        for a in range(k):
            if a == triv:
                continue
            for b in range(a, k):
                if b == triv:
                    continue
                mults = tensor_decompose(tbl, a, b)
                assert any(
                    m > 0 and tbl.degrees[c] > half for c, m in enumerate(mults)
                ), (r, a, b)


def test_borel_group_structure():
    b = borel_group(7)
    assert b.order() == 42
    assert sum(b.class_sizes) == 42
    for r in PRIMES:
        assert borel_group(r).order() == r * (r - 1)


def test_borel_degrees_observed():
    # exact computation: degrees are 1 (r-1 times) and (r-1)/2 (4 times)
    for r in (5, 7, 11):
        bt = borel_table(r)
        assert sorted(set(bt.degrees)) == [1, (r - 1) // 2]
        assert bt.degrees.count(1) == r - 1
        assert bt.degrees.count((r - 1) // 2) == 4
        assert sum(d * d for d in bt.degrees) == r * (r - 1)
        assert bt.group.num_classes() == r + 3


def test_borel_check_report():
    bc = borel_check(7)
    assert bc["borel_order"] == 42
    assert bc["index"] == 8
    assert bc["index_is_r_plus_1"]
    assert bc["observed_degree_set"] == [1, 3]
    assert bc["degrees_match_stated_set"] is False
    assert bc["linear_character_count"] == 6
    # every induced character has degree (r+1) * dim and integral multiplicities
    for row in bc["inductions"]:
        assert row["induced_degree"] == 8 * row["borel_degree"]
    # trivial character of B induces 1 + Steinberg
    gt = sl2_table(7)
    triv_g = gt.trivial_index()
    bt = borel_table(7)
    triv_b = bt.trivial_index()
    mults = bc["inductions"][_index_of_borel_row(bc, triv_b)]["multiplicities"]
    assert mults[triv_g] == 1
    steinberg = next(i for i, d in enumerate(gt.degrees) if d == 7)
    assert mults[steinberg] == 1
    assert sum(m * d for m, d in zip(mults, gt.degrees)) == 8
    # both degree families are screened out by congruence or inequality
    assert bc["all_screened_out"]


def _index_of_borel_row(bc, borel_irrep_index):
    # inductions are listed in borel irrep order
    return borel_irrep_index


def test_regular_and_screening():
    rc7 = regular_congruence_check(7)
    assert rc7["regular_multiplicities_equal_degrees"]
    assert rc7["inequality_lhs"] == [19, 1]
    assert rc7["inequality_rhs"] == [21, 1]
    assert rc7["inequality_holds"]
    assert rc7["surviving_triples"] == [(7, 1, 48)]
    # Borel-induced candidates all die by congruence or inequality
    assert rc7["borel_all_screened_out"]
    assert {row["dim"] for row in rc7["borel_screening"]} == {1, 3}

    rc11 = regular_congruence_check(11)
    assert rc11["surviving_triples"] == [(11, 1, 120)]
    assert rc11["inequality_lhs"] == [51, 1]
    assert rc11["inequality_rhs"] == [55, 1]

    # for r > 11 everything is screened out; the screen presumes r >= 7
    # (at r = 5 the congruence is only mod 2 and cuts nothing)
    assert screen_induction_triples(13)["survivors"] == []


def test_dual_route_guard():
    # tensor_decompose raises if the exact and mod-p answers could diverge;
    # a full pass over one table exercises both routes
    tbl = sl2_table(5)
    k = tbl.num_classes()
    for a in range(k):
        for b in range(k):
            mults = tensor_decompose(tbl, a, b)
            assert all(m >= 0 for m in mults)
            total = sum(m * d for m, d in zip(mults, tbl.degrees))
            assert total == tbl.degrees[a] * tbl.degrees[b]
