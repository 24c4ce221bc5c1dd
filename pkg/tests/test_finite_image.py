import random

import pytest

from so3tqft.cycmatrix import CycMatrix
from so3tqft.finite_image import (
    canonicalize,
    closure,
    identify_group,
    mod_r_graph_report,
    linear_lift_report,
    proj_inverse,
    projective_order,
    so3_closure,
    so3_generators,
    weil_closure,
    weil_image_equality,
)
from so3tqft.modular_data import build_modular_data, rho_genus1


def test_canonicalize_scalar_collapse():
    md = build_modular_data(5)
    f = md.field
    ident = CycMatrix.identity(f, 2)
    three_i = ident.scalar_mul(f.from_int(3))
    assert canonicalize(three_i).mat == ident
    rho_s, _ = rho_genus1(5)
    zeta_s = rho_s.scalar_mul(f.zeta_power(3))
    assert canonicalize(zeta_s) == canonicalize(rho_s)
    with pytest.raises(ValueError):
        canonicalize(CycMatrix(f, 1, 1, [f.zero]))


def test_canonicalize_idempotent_on_random_words():
    rng = random.Random(99)
    rho_s, rho_t = rho_genus1(5)
    for _ in range(100):
        m = CycMatrix.identity(rho_s.field, rho_s.rows)
        for _ in range(rng.randint(1, 6)):
            m = m @ (rho_s if rng.random() < 0.5 else rho_t)
        c1 = canonicalize(m)
        c2 = canonicalize(c1.mat)
        assert c1 == c2
        first = next(e for e in c1.mat.entries if not e.is_zero())
        assert first == c1.mat.field.one


def test_identity_closure():
    md = build_modular_data(5)
    gc = closure([CycMatrix.identity(md.field, 2)], max_order=10)
    assert gc.order == 1 and gc.complete


def test_closure_orders():
    for r, expected in ((5, 60), (7, 168)):
        gc = so3_closure(r)
        full = r * (r * r - 1)
        assert gc.complete
        assert gc.order in (full, full // 2)
        assert gc.order == expected  # BFS oracle, frozen
        assert full % gc.order == 0  # Lagrange consistency


def test_max_order_bound_is_a_result():
    rho_s, rho_t = rho_genus1(5)
    gc = closure([rho_s, rho_t], max_order=10)
    assert not gc.complete
    assert gc.order == 10


def test_bfs_deterministic():
    names, gens = so3_generators(5)
    a = closure(gens, names=names)
    b = closure(gens, names=names)
    assert set(a.elements.keys()) == set(b.elements.keys())
    assert a.generator_words == b.generator_words
    lengths_a = sorted(len(w) for w in a.generator_words.values())
    lengths_b = sorted(len(w) for w in b.generator_words.values())
    assert lengths_a == lengths_b


def test_closure_invariant_under_scalar_twist():
    md = build_modular_data(5)
    f = md.field
    rho_s, rho_t = rho_genus1(5)
    base = closure([rho_s, rho_t])
    twisted = closure(
        [rho_s.scalar_mul(f.zeta_power(7)), rho_t.scalar_mul(f.from_int(2))]
    )
    assert twisted.order == base.order
    assert set(twisted.elements.keys()) == set(base.elements.keys())


def test_projective_generator_orders():
    for r in (5, 7, 11):
        rho_s, rho_t = rho_genus1(r)
        assert projective_order(rho_s) == 2
        assert projective_order(rho_t) == r
        assert projective_order(rho_s @ rho_t) == 3


def test_proj_inverse():
    rho_s, rho_t = rho_genus1(7)
    for m in (rho_s, rho_t, rho_s @ rho_t):
        prod = m @ proj_inverse(m)
        assert prod.is_scalar()


def test_identify_group_small():
    for r in (5, 7):
        gc = so3_closure(r)
        rep = identify_group(gc, r)
        assert rep["matches"] == "PSL2"
        assert rep["generator_orders"] == {"s": 2, "t": r, "st": 3}
        assert all(rep["relations"].values())
        assert rep["mod_r_graph"]["is_homomorphism"]
        assert rep["mod_r_graph"]["kernel_is_center"]
        assert rep["linear_lift"]["is_linear_representation"]


def test_linear_lift_tracks_r_mod_4():
    # the unique scalar-normalized lift is faithful exactly when r = 1 mod 4
    assert linear_lift_report(5)["linear_image"] == "SL2"
    assert linear_lift_report(7)["linear_image"] == "PSL2"
    assert linear_lift_report(11)["linear_image"] == "PSL2"
    assert linear_lift_report(13)["linear_image"] == "SL2"


def test_mod_r_graph_small():
    rep = mod_r_graph_report(5)
    assert rep["is_homomorphism"]
    assert rep["pair_closure_order"] == 120
    assert rep["kernel_size"] == 2
    rep11 = mod_r_graph_report(11)
    assert rep11["is_homomorphism"]
    assert rep11["pair_closure_order"] == 1320
    assert rep11["kernel_is_center"]


def test_weil_image_equality():
    assert weil_image_equality(5)
    assert weil_image_equality(7)


def test_weil_closure_order_r11():
    assert weil_closure(11).order == so3_closure(11).order == 660
