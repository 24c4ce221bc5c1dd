"""Dimension engine: fusion coefficients, pants-decomposition dimensions for
surfaces with boundary, the closed Verlinde formula, twist-eigenvalue
multiplicities, and the genus-growth margin.

Labels at level r are the even integers {0, 2, ..., r-3}.  A triple admits an
invariant vector iff it satisfies the triangle inequality and a + b + c <=
2(r-2); dimensions of arbitrary (genus, boundary) surfaces are assembled from
these 0/1 coefficients by cutting the surface into pants along a canonical
linear chain of handles.  Dimensions are exact Python integers throughout;
the Verlinde power sum is the only float here and is gated against the exact
value.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, isclose, pi, sin

from .cyclo import is_odd_prime

__all__ = [
    "SurfaceSpec",
    "FusionTensor",
    "labels",
    "fusion_coeff",
    "fusion_matrix",
    "handle_matrix",
    "dim_space",
    "verlinde_dim",
    "twist_multiplicities",
    "goslow_margin",
]


def _require_level(r):
    if not (is_odd_prime(r) and r >= 5):
        raise ValueError("r must be an odd prime >= 5")


def labels(r: int):
    _require_level(r)
    return list(range(0, r - 2, 2))


def _check_label(r, h):
    if h % 2 != 0 or not (0 <= h <= r - 3):
        raise ValueError(f"label {h} outside {{0, 2, ..., {r - 3}}}")


def fusion_coeff(r: int, a: int, b: int, c: int) -> int:
    """1 iff |a-b| <= c <= a+b and a+b+c <= 2(r-2), else 0."""
    _require_level(r)
    for h in (a, b, c):
        _check_label(r, h)
    if abs(a - b) <= c <= a + b and a + b + c <= 2 * (r - 2):
        return 1
    return 0


@dataclass(frozen=True)
class SurfaceSpec:
    r: int
    genus: int
    boundary: tuple = ()

    def __post_init__(self):
        _require_level(self.r)
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        for h in self.boundary:
            _check_label(self.r, h)


class FusionTensor:
    """The symmetric 0/1 tensor N(a, b, c) at a fixed level."""

    def __init__(self, r: int):
        _require_level(r)
        self.r = r

    def n(self, a, b, c) -> int:
        return fusion_coeff(self.r, a, b, c)


@lru_cache(maxsize=None)
def fusion_matrix(r: int, h: int):
    """(N_h)_{ab} = N(a, h, b) as a tuple-of-tuples integer matrix."""
    ls = labels(r)
    return tuple(
        tuple(fusion_coeff(r, a, h, b) for b in ls) for a in ls
    )


def _matmul_int(a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


@lru_cache(maxsize=None)
def handle_matrix(r: int):
    """H = sum_x N_x^2; one application glues a handle onto the surface."""
    ls = labels(r)
    n = len(ls)
    acc = [[0] * n for _ in range(n)]
    for x in ls:
        nx = fusion_matrix(r, x)
        sq = _matmul_int(nx, nx)
        for i in range(n):
            for j in range(n):
                acc[i][j] += sq[i][j]
    return tuple(tuple(row) for row in acc)


@lru_cache(maxsize=None)
def _handle_power(r: int, g: int):
    if g == 0:
        n = len(labels(r))
        return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return _matmul_int(_handle_power(r, g - 1), handle_matrix(r))


def dim_space(spec: SurfaceSpec) -> int:
    """Exact dimension for (genus, boundary labels) from the gluing rules.

    Base cases: a sphere with <= 2 boundary components gives Kronecker
    deltas, three components give the fusion coefficient.  Genus is removed
    one handle at a time through H = sum_x N_x^2 and the boundary chain is
    contracted through products of fusion matrices; trailing 0-labels are
    free to add, which settles the closed and one-holed cases."""
    r, g = spec.r, spec.genus
    hs = list(spec.boundary)
    ls = labels(r)
    index = {h: i for i, h in enumerate(ls)}

    if g == 0:
        if len(hs) == 0:
            return 1
        if len(hs) == 1:
            return 1 if hs[0] == 0 else 0
        if len(hs) == 2:
            return 1 if hs[0] == hs[1] else 0
    while len(hs) < 2:
        hs.append(0)  # capping with the trivial label leaves the space unchanged

    chain = _handle_power(r, g)
    for h in hs[1:-1]:
        chain = _matmul_int(chain, fusion_matrix(r, h))
    return chain[index[hs[0]]][index[hs[-1]]]


def verlinde_dim(r: int, g: int):
    """Closed-surface dimension as the power sum over alpha_j =
    r csc^2(2 pi j / r) / 4.  Returns (float value, rounded integer) and
    insists the float sits within 1e-6 relative of its nearest integer."""
    _require_level(r)
    if g < 1:
        raise ValueError("the power-sum formula needs genus >= 1")
    total = 0.0
    for j in range(1, (r - 1) // 2 + 1):
        alpha = r / (4.0 * sin(2.0 * pi * j / r) ** 2)
        total += alpha ** (g - 1)
    nearest = int(total + 0.5) if total >= 0 else -int(-total + 0.5)
    if not isclose(total, nearest, rel_tol=1e-6, abs_tol=1e-6):
        raise ArithmeticError(
            f"Verlinde float {total} drifted from integer {nearest}"
        )
    return total, nearest


def twist_multiplicities(r: int):
    """[(2l+1)(r-2l-1)/2 for l = 0..(r-3)/2]: genus-2 twist-eigenvalue
    multiplicities.  Checked to be pairwise distinct and to sum to the
    genus-2 dimension."""
    _require_level(r)
    out = [(2 * l + 1) * (r - 2 * l - 1) // 2 for l in range(0, (r - 1) // 2)]
    if len(set(out)) != len(out):
        raise ArithmeticError("twist multiplicities are not pairwise distinct")
    if sum(out) != dim_space(SurfaceSpec(r, 2)):
        raise ArithmeticError("twist multiplicities do not sum to dim V_2")
    return out


def goslow_margin(r: int, g: int) -> int:
    """C(dim V_g, 2) - dim V_{g+1}, exact.

    At g = 2 the margin has the closed form
    (r+5)(r+3)(r+1) r (r-1)(r-8) / 5760, which is asserted."""
    _require_level(r)
    if r < 7 or g < 2:
        raise ValueError("margin is defined for r >= 7, g >= 2")
    dg = dim_space(SurfaceSpec(r, g))
    dg1 = dim_space(SurfaceSpec(r, g + 1))
    margin = comb(dg, 2) - dg1
    if g == 2:
        closed = (r + 5) * (r + 3) * (r + 1) * r * (r - 1) * (r - 8)
        if closed % 5760 != 0 or margin != closed // 5760:
            raise ArithmeticError("genus-2 margin disagrees with closed form")
    return margin
