"""The Weil representation of SL2(F_r) built from the Heisenberg group,
its odd (r-1)/2-dimensional block, and the exact matrix identities that
identify the odd block with the genus-1 representation.

The Heisenberg group of order r^3 is generated by x, y with central z,
z^2 = y x y^-1 x^-1, all of order r.  Words are kept in the normal form
z^e x^a y^c with exponents mod r; SL2(F_r) acts by

    f_M(x) = z^{ac} x^a y^c,   f_M(y) = z^{bd} x^b y^d,   M = [[a, b], [c, d]].

The Stone-von-Neumann representation on C^r sends x to diag(e(2k)), y to the
cyclic shift e_k -> e_{k-1} and z to e(1) * Id, where e(k) = e^{2 pi i k / r}.
Intertwiners R_s = (e(2ij)) and R_t = diag(e(-i^2)) realize the action of the
generators s, t of SL2(F_r); the span of f_i = e_{(r-1-i)/2} - e_{(r+1+i)/2}
for even i is invariant and carries the odd block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclo import get_field, is_odd_prime
from .cycmatrix import CycMatrix
from .modular_data import build_modular_data, rho_genus1

__all__ = [
    "HeisenbergWord",
    "HeisenbergPresentation",
    "WeilMatrices",
    "heisenberg_presentation",
    "heisenberg_action",
    "build_weil",
    "odd_restriction",
    "verify_odd_block_identification",
    "OddBlockMismatch",
]


@dataclass(frozen=True)
class HeisenbergWord:
    """Group element z^z_exp x^x_exp y^y_exp of the Heisenberg group,
    exponents reduced mod r.  Multiplication uses y^c x^a = z^{2ca} x^a y^c."""

    r: int
    z_exp: int
    x_exp: int
    y_exp: int

    @staticmethod
    def of(r, z_exp=0, x_exp=0, y_exp=0):
        return HeisenbergWord(r, z_exp % r, x_exp % r, y_exp % r)

    def __mul__(self, other: "HeisenbergWord") -> "HeisenbergWord":
        assert self.r == other.r
        r = self.r
        # (z^e x^a y^c)(z^e' x^a' y^c') = z^{e+e'+2ca'} x^{a+a'} y^{c+c'}
        return HeisenbergWord.of(
            r,
            self.z_exp + other.z_exp + 2 * self.y_exp * other.x_exp,
            self.x_exp + other.x_exp,
            self.y_exp + other.y_exp,
        )

    def __pow__(self, k: int) -> "HeisenbergWord":
        r = self.r
        k = k % r  # every element has order dividing r
        # (z^e x^a y^c)^k = z^{ke + ac k(k-1)} x^{ka} y^{kc}
        return HeisenbergWord.of(
            r,
            k * self.z_exp + self.x_exp * self.y_exp * k * (k - 1),
            k * self.x_exp,
            k * self.y_exp,
        )

    def inv(self) -> "HeisenbergWord":
        return self ** (self.r - 1)

    def is_identity(self):
        return self.z_exp == 0 and self.x_exp == 0 and self.y_exp == 0


@dataclass(frozen=True)
class HeisenbergPresentation:
    r: int
    rho_x: CycMatrix
    rho_y: CycMatrix
    rho_z: CycMatrix

    def rho_word(self, w: HeisenbergWord) -> CycMatrix:
        """Image of z^e x^a y^c: entries e(e + 2ia) at positions (i, i+c)."""
        f = self.rho_x.field
        r = self.r
        rows = []
        for i in range(r):
            row = [f.zero] * r
            row[(i + w.y_exp) % r] = f.zeta_power(4 * (w.z_exp + 2 * i * w.x_exp))
            rows.append(row)
        return CycMatrix.from_rows(f, rows)


@lru_cache(maxsize=None)
def heisenberg_presentation(r: int) -> HeisenbergPresentation:
    if not (is_odd_prime(r) and r >= 5):
        raise ValueError("r must be an odd prime >= 5")
    f = get_field(4 * r)

    def e(k):
        return f.zeta_power(4 * k)  # e(k) = zeta_r^k inside Q(zeta_4r)

    rho_x = CycMatrix.diagonal(f, [e(2 * k) for k in range(r)])
    rows = []
    for i in range(r):
        row = [f.zero] * r
        row[(i + 1) % r] = f.one
        rows.append(row)
    rho_y = CycMatrix.from_rows(f, rows)
    rho_z = CycMatrix.diagonal(f, [e(1)] * r)

    pres = HeisenbergPresentation(r=r, rho_x=rho_x, rho_y=rho_y, rho_z=rho_z)
    # central extension relation: y x y^-1 x^-1 = z^2
    lhs = pres.rho_word(HeisenbergWord.of(r, 0, 0, 1)) @ rho_x
    rhs = (rho_z @ rho_z) @ (rho_x @ pres.rho_word(HeisenbergWord.of(r, 0, 0, 1)))
    if lhs != rhs:
        raise ArithmeticError("Heisenberg commutation relation failed")
    return pres


def heisenberg_action(m, r: int):
    """Automorphism images (f_M(x), f_M(y)) for M = [[a, b], [c, d]],
    det M = 1 mod r."""
    (a, b), (c, d) = m
    if (a * d - b * c) % r != 1:
        raise ValueError("matrix must have determinant 1 mod r")
    fx = HeisenbergWord.of(r, a * c, a, c)
    fy = HeisenbergWord.of(r, b * d, b, d)
    return fx, fy


def apply_action(m, r: int, w: HeisenbergWord) -> HeisenbergWord:
    """Image of an arbitrary normal-form word under the automorphism of M."""
    fx, fy = heisenberg_action(m, r)
    out = HeisenbergWord.of(r, w.z_exp, 0, 0)
    return out * (fx ** w.x_exp) * (fy ** w.y_exp)


S_GEN = ((0, -1), (1, 0))
T_GEN = ((1, 1), (0, 1))


@dataclass(frozen=True)
class WeilMatrices:
    r: int
    r_s: CycMatrix
    r_t: CycMatrix
    r_s_odd: CycMatrix
    r_t_odd: CycMatrix


@lru_cache(maxsize=None)
def build_weil(r: int) -> WeilMatrices:
    """Intertwiners R_s = (e(2ij)), R_t = diag(e(-i^2)) together with their
    odd-block restrictions.  The defining relation

        R_alpha rho(h) R_alpha^{-1} = rho(alpha(h))

    is verified exactly for alpha in {s, t} and h in {x, y} (as products,
    avoiding explicit inverses)."""
    pres = heisenberg_presentation(r)
    f = pres.rho_x.field

    def e(k):
        return f.zeta_power(4 * k)

    r_s = CycMatrix.from_rows(f, [[e(2 * i * j) for j in range(r)] for i in range(r)])
    r_t = CycMatrix.diagonal(f, [e(-i * i) for i in range(r)])

    x_word = HeisenbergWord.of(r, 0, 1, 0)
    y_word = HeisenbergWord.of(r, 0, 0, 1)
    for mat, name in ((r_s, S_GEN), (r_t, T_GEN)):
        for w in (x_word, y_word):
            lhs = mat @ pres.rho_word(w)
            rhs = pres.rho_word(apply_action(name, r, w)) @ mat
            if lhs != rhs:
                raise ArithmeticError("intertwiner relation failed for a generator")

    r_s_odd, r_t_odd = _restrict_to_odd(r, r_s, r_t)
    return WeilMatrices(r=r, r_s=r_s, r_t=r_t, r_s_odd=r_s_odd, r_t_odd=r_t_odd)


def _odd_coordinates(r: int, image_col):
    """Coordinates of a vector in the span of the f_i, checking membership
    exactly: component 0 vanishes and v[k] = -v[r-k]."""
    if not image_col[0].is_zero():
        raise ArithmeticError("odd subspace is not invariant (e_0 component)")
    for k in range(1, r):
        if image_col[k] != -image_col[(r - k) % r]:
            raise ArithmeticError("odd subspace is not invariant (symmetry)")
    # f_i has +1 at position (r-1-i)/2, so that coordinate reads off directly
    return [image_col[(r - 1 - i) // 2] for i in range(0, r - 2, 2)]


def odd_restriction(w: WeilMatrices):
    """Matrices of R_s, R_t on the basis f_i = e_{(r-1-i)/2} - e_{(r+1+i)/2},
    i in {0, 2, ..., r-3}, recomputed with the exact invariance check."""
    return _restrict_to_odd(w.r, w.r_s, w.r_t)


def _restrict_to_odd(r: int, r_s: CycMatrix, r_t: CycMatrix):
    f = r_s.field
    labels = list(range(0, r - 2, 2))
    out = []
    for mat in (r_s, r_t):
        cols = []
        for j in labels:
            hi = (r - 1 - j) // 2
            lo = (r + 1 + j) // 2
            image = [mat[(i, hi)] - mat[(i, lo)] for i in range(r)]
            cols.append(_odd_coordinates(r, image))
        rows = [[cols[j][i] for j in range(len(labels))] for i in range(len(labels))]
        out.append(CycMatrix.from_rows(f, rows))
    return out[0], out[1]


class OddBlockMismatch(ArithmeticError):
    """Raised when an identity check fails; carries the first bad entry."""

    def __init__(self, which, i, j, got, want):
        super().__init__(f"{which} mismatch at entry ({i},{j}): {got} != {want}")
        self.which = which
        self.position = (i, j)
        self.got = got
        self.want = want


def verify_odd_block_identification(r: int) -> dict:
    """Exact identification of the odd Weil block with the genus-1 pair:

        R_s_odd = (A^2 - A^-2) * S~        (entrywise)
        R_t_odd = zeta_{4r}^{-(r-1)^2} * rho(t)   (entrywise)

    Returns the two proportionality constants and check flags."""
    md = build_modular_data(r)
    w = build_weil(r)
    f = md.field
    rho_s, rho_t = rho_genus1(r)

    a2 = f.zeta_power(2 * (r + 1))
    c_s = a2 - a2.conj()  # A^2 - A^-2
    k = len(md.labels)
    for i in range(k):
        for j in range(k):
            got = w.r_s_odd[(i, j)]
            want = c_s * md.s_tilde[(i, j)]
            if got != want:
                raise OddBlockMismatch("S-block", i, j, got, want)

    c_t = f.zeta_power(-((r - 1) ** 2))
    for i in range(k):
        for j in range(k):
            got = w.r_t_odd[(i, j)]
            want = c_t * rho_t[(i, j)]
            if got != want:
                raise OddBlockMismatch("T-block", i, j, got, want)

    return {
        "r": r,
        "s_block_identity": True,
        "t_block_identity": True,
        "s_constant": c_s,
        "t_constant": c_t,
        "s_constant_json": c_s.to_json(),
        "t_constant_json": c_t.to_json(),
    }
