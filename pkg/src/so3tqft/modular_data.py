"""SO(3)-type modular data at an odd prime level r and the genus-1
representation of SL2(Z) it generates.

All scalars live in Q(zeta_{4r}).  The deformation parameter is the root of
unity A = zeta_{4r}^(r+1) (equivalently i * e^{2 pi i / 4r}), the label set is
the even integers {0, 2, ..., r-3}, quantum dimensions are quantum integers
d_i = [i+1], twists are theta_i = A^{i(i+2)}, and the S-matrix entries are
[(i+1)(j+1)] up to the global normalization 1/D with D = sqrt(r)/(2 sin(pi/r)).
Everything here is exact; floats appear only through explicit embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclo import CycField, CycNumber, get_field, is_odd_prime, sqrt_r
from .cycmatrix import CycMatrix

__all__ = [
    "ModularData",
    "SpectrumReport",
    "a_root",
    "quantum_integer",
    "build_modular_data",
    "rho_genus1",
    "dehn_twist_spectrum",
    "central_charge_order",
    "so3_labels",
]


def _require_level(r: int):
    if not (is_odd_prime(r) and r >= 5):
        raise ValueError("r must be an odd prime >= 5")


def so3_labels(r: int):
    return list(range(0, r - 2, 2))


def a_root(r: int) -> CycNumber:
    """The root of unity A = zeta_{4r}^{r+1}."""
    _require_level(r)
    return get_field(4 * r).zeta_power(r + 1)


def a_power(field: CycField, r: int, e: int) -> CycNumber:
    return field.zeta_power((r + 1) * e)


def quantum_integer(k: int, r: int) -> CycNumber:
    """[k] = (A^2k - A^-2k)/(A^2 - A^-2), evaluated division-free as the
    geometric sum A^{2(k-1)} + A^{2(k-3)} + ... + A^{-2(k-1)}."""
    _require_level(r)
    f = get_field(4 * r)
    if k < 0:
        return -quantum_integer(-k, r)
    acc = f.zero
    for m in range(k):
        acc = acc + a_power(f, r, 2 * (k - 1 - 2 * m))
    return acc


@dataclass(frozen=True)
class ModularData:
    """All matrices here (and everything derived from them downstream) are
    indexed by the label order 0, 2, ..., r-3."""

    r: int
    field: CycField
    labels: tuple
    qdim: dict
    twist: dict
    s_tilde: CycMatrix
    s_unitary: CycMatrix
    t_mat: CycMatrix
    global_dim: CycNumber
    p_plus: CycNumber
    p_minus: CycNumber

    def a(self) -> CycNumber:
        return a_root(self.r)

    def theta_power(self, label: int, n: int) -> CycNumber:
        """theta_label^n as a single root-of-unity lookup (n may be negative)."""
        return self.field.zeta_power((self.r + 1) * label * (label + 2) * n)

    def label_index(self, label: int) -> int:
        return self.labels.index(label)


@lru_cache(maxsize=None)
def build_modular_data(r: int) -> ModularData:
    _require_level(r)
    f = get_field(4 * r)
    labels = tuple(so3_labels(r))
    k = len(labels)
    assert k == (r - 1) // 2

    qdim = {l: quantum_integer(l + 1, r) for l in labels}
    twist = {l: a_power(f, r, l * (l + 2)) for l in labels}

    s_tilde = CycMatrix.from_rows(
        f,
        [[quantum_integer((li + 1) * (lj + 1), r) for lj in labels] for li in labels],
    )

    # D = sqrt(r) / (2 sin(pi/r)); 2 sin(pi/r) = -i (zeta_2r - zeta_2r^-1)
    two_sin = (f.zeta_power(2) - f.zeta_power(-2)) * f.zeta_power(-r)
    global_dim = sqrt_r(r) / two_sin
    sum_d_sq = f.zero
    for l in labels:
        sum_d_sq = sum_d_sq + qdim[l] * qdim[l]
    if global_dim * global_dim != sum_d_sq:
        raise ArithmeticError("global dimension identity D^2 = sum d_i^2 failed")

    s_unitary = s_tilde.scalar_mul(global_dim.inv())
    t_mat = CycMatrix.diagonal(f, [twist[l] for l in labels])

    p_plus = f.zero
    p_minus = f.zero
    for l in labels:
        dsq = qdim[l] * qdim[l]
        p_plus = p_plus + twist[l] * dsq
        p_minus = p_minus + twist[l].conj() * dsq

    return ModularData(
        r=r,
        field=f,
        labels=labels,
        qdim=qdim,
        twist=twist,
        s_tilde=s_tilde,
        s_unitary=s_unitary,
        t_mat=t_mat,
        global_dim=global_dim,
        p_plus=p_plus,
        p_minus=p_minus,
    )


def rho_genus1(r: int):
    """The genus-1 pair (rho(s), rho(t)) = ((1/D) S~, T^-1).

    rho(t) is the inverse twist diagonal diag(A^{-j(j+2)}): Dehn-twist
    eigenvalues are the inverse twists in this convention."""
    md = build_modular_data(r)
    t_inv = CycMatrix.diagonal(
        md.field, [md.theta_power(l, -1) for l in md.labels]
    )
    return md.s_unitary, t_inv


@dataclass(frozen=True)
class SpectrumReport:
    r: int
    values: tuple            # eigenvalue ratios theta_i^-1 * theta_0, exact
    scalar: CycNumber        # common scalar c with values == c * reference set
    conjugated: bool         # True when the match is against the conjugate set
    distinct_count: int


def _quadratic_exponent_set(r: int):
    """Exponents {n^2 mod r : 0 < n < r/2}; each nonzero square mod r once."""
    return {(n * n) % r for n in range(1, (r + 1) // 2)}


def dehn_twist_spectrum(r: int) -> SpectrumReport:
    """Eigenvalue ratios of rho(t), matched as a set against
    {e^{2 pi i n^2 / r} : 0 < n < r/2} after one common scalar.

    The ratios are r-th roots of unity.  For r = 1 (mod 4) the match is on
    the nose; for r = 3 (mod 4) the ratio set is a common scalar times the
    *conjugate* of the reference set (and the two sets differ), which the
    report flags via `conjugated`."""
    md = build_modular_data(r)
    f = md.field
    ratios = [md.theta_power(l, -1) for l in md.labels]  # theta_0 = 1
    if len(set(ratios)) != (r - 1) // 2:
        raise ArithmeticError("Dehn twist eigenvalue ratios are not distinct")

    # exact exponents: each ratio is zeta_r^e
    exps = set()
    for v in ratios:
        e = f.root_of_unity_exponent(v)
        if e is None or e % 4 != 0:
            raise ArithmeticError("twist ratio is not an r-th root of unity")
        exps.add((e // 4) % r)
    squares = _quadratic_exponent_set(r)
    for reference, conjugated in ((squares, False), ({(-q) % r for q in squares}, True)):
        for q0 in reference:
            shift = (min(exps) - q0) % r
            if {(q + shift) % r for q in reference} == exps:
                scalar = f.zeta_power(4 * shift)
                return SpectrumReport(
                    r=r,
                    values=tuple(ratios),
                    scalar=scalar,
                    conjugated=conjugated,
                    distinct_count=len(exps),
                )
    raise ArithmeticError("twist spectrum matches neither orientation of the "
                          "quadratic-exponent set")


def central_charge_order(md: ModularData) -> int:
    """Multiplicative order of p_minus / D, verified by exact powering."""
    kappa = md.p_minus / md.global_dim
    acc = kappa
    order = 1
    while acc != md.field.one:
        acc = acc * kappa
        order += 1
        if order > 8 * md.r:
            raise ArithmeticError("p_minus/D does not look like a root of unity")
    return order
