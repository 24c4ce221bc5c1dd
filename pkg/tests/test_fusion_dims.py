import math

import pytest

from so3tqft.fusion_dims import (
    SurfaceSpec,
    FusionTensor,
    dim_space,
    fusion_coeff,
    goslow_margin,
    labels,
    twist_multiplicities,
    verlinde_dim,
)

SMALL_PRIMES = (5, 7, 11, 13)
ALL_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31)


def test_fusion_coeff_examples():
    assert fusion_coeff(7, 0, 0, 0) == 1
    assert fusion_coeff(7, 2, 2, 4) == 1   # 4 <= 4 and sum 8 <= 10
    assert fusion_coeff(7, 4, 4, 4) == 0   # sum 12 > 10
    with pytest.raises(ValueError):
        fusion_coeff(7, 1, 2, 2)
    with pytest.raises(ValueError):
        fusion_coeff(7, 0, 2, 6)


def test_fusion_tensor_symmetry_and_vacuum():
    for r in SMALL_PRIMES:
        t = FusionTensor(r)
        ls = labels(r)
        for a in ls:
            for b in ls:
                assert t.n(a, b, 0) == (1 if a == b else 0)
                for c in ls:
                    v = t.n(a, b, c)
                    assert v == t.n(b, a, c) == t.n(c, b, a) == t.n(a, c, b)


def test_sphere_base_cases():
    for r in SMALL_PRIMES:
        assert dim_space(SurfaceSpec(r, 0)) == 1
        for h in labels(r):
            assert dim_space(SurfaceSpec(r, 0, (h,))) == (1 if h == 0 else 0)
            for h2 in labels(r):
                want = 1 if h == h2 else 0
                assert dim_space(SurfaceSpec(r, 0, (h, h2))) == want


def test_torus_one_boundary():
    for r in SMALL_PRIMES:
        for h in labels(r):
            assert dim_space(SurfaceSpec(r, 1, (h,))) == (r - 1 - h) // 2


def test_pinned_dimensions():
    assert dim_space(SurfaceSpec(7, 1, (0,))) == 3
    assert dim_space(SurfaceSpec(7, 2)) == 14
    assert dim_space(SurfaceSpec(7, 3)) == 98
    assert dim_space(SurfaceSpec(11, 2)) == 55
    assert dim_space(SurfaceSpec(13, 2)) == 91
    for r in ALL_PRIMES:
        assert dim_space(SurfaceSpec(r, 2)) == (r ** 3 - r) // 24


def test_trailing_zero_label():
    for r in (7, 11):
        for g in (0, 1, 2):
            for h in labels(r):
                a = dim_space(SurfaceSpec(r, g, (h,)))
                b = dim_space(SurfaceSpec(r, g, (h, 0)))
                assert a == b


def test_cut_independence():
    # separating versus non-separating pants decompositions
    for r in (5, 7, 11, 13, 17, 19):
        ls = labels(r)
        sep = sum(dim_space(SurfaceSpec(r, 1, (x,))) ** 2 for x in ls)
        assert sep == dim_space(SurfaceSpec(r, 2))
        sep3 = sum(
            dim_space(SurfaceSpec(r, 1, (x,))) * dim_space(SurfaceSpec(r, 2, (x,)))
            for x in ls
        )
        assert sep3 == dim_space(SurfaceSpec(r, 3))


def test_verlinde_values():
    vfloat, vnear = verlinde_dim(7, 1)
    assert vnear == 3
    assert abs(vfloat - 3) < 1e-9
    assert verlinde_dim(7, 2)[1] == 14
    assert verlinde_dim(11, 2)[1] == 55


def test_verlinde_matches_gluing():
    for r in ALL_PRIMES:
        for g in range(1, 7):
            vfloat, vnear = verlinde_dim(r, g)
            exact = dim_space(SurfaceSpec(r, g))
            assert math.isclose(vfloat, exact, rel_tol=1e-6)
            if exact < 10 ** 13:  # beyond this the float sum cannot pin the integer
                assert vnear == exact


def test_twist_multiplicities():
    assert twist_multiplicities(13) == [6, 15, 20, 21, 18, 11]
    assert twist_multiplicities(7) == [3, 6, 5]
    assert twist_multiplicities(5) == [2, 3]
    for r in ALL_PRIMES:
        mults = twist_multiplicities(r)
        assert len(set(mults)) == len(mults)
        assert sum(mults) == dim_space(SurfaceSpec(r, 2))


def test_twist_multiplicities_match_gluing():
    for r in SMALL_PRIMES:
        mults = twist_multiplicities(r)
        for l, m in enumerate(mults):
            assert m == dim_space(SurfaceSpec(r, 1, (2 * l, 2 * l)))


def test_goslow_margin():
    assert goslow_margin(7, 2) == -7
    closed = (7 + 5) * (7 + 3) * (7 + 1) * 7 * (7 - 1) * (7 - 8) // 5760
    assert closed == -7
    assert goslow_margin(11, 2) > 0
    assert goslow_margin(13, 2) > 0
    assert goslow_margin(7, 3) > 0
    assert goslow_margin(7, 4) > 0
    with pytest.raises(ValueError):
        goslow_margin(5, 2)
    with pytest.raises(ValueError):
        goslow_margin(7, 1)


def test_surface_spec_validation():
    with pytest.raises(ValueError):
        SurfaceSpec(7, -1)
    with pytest.raises(ValueError):
        SurfaceSpec(7, 1, (5,))
    with pytest.raises(ValueError):
        SurfaceSpec(6, 1)
