"""The 3-manifold invariant for chain surgeries and genus-1 Heegaard words.

A chain surgery is a linear chain of framed unknots in which consecutive
components form Hopf links: framings (n_1, ..., n_k), linking matrix with
the n_j on the diagonal and 1 on the first off-diagonals.  The invariant is

    tau(M) = (1/D) * <chain evaluated with every component carrying the
             Kirby color sum_i (d_i / D) * i> * (p_minus / D)^sigma,

where sigma is the signature of the linking matrix, computed exactly by
rational congruence diagonalization.  The chain evaluation contracts twist
weights through S~ along the Hopf edges, dividing by d at internal nodes.
Anchors tau(S^3) = 1/D and tau(S^1 x S^2) = 1 hold exactly, as does
invariance under adding a split +-1-framed unknot (a blow-up), because
p_plus p_minus = D^2 exactly.

The same lens spaces arise from genus-1 Heegaard words s t^p s; the two
routes agree in absolute value (the Heegaard normalization is only fixed up
to a power of kappa = p_minus / D).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycNumber
from .cycmatrix import CycMatrix
from .modular_data import ModularData, rho_genus1

__all__ = [
    "ChainSurgery",
    "InvariantValue",
    "signature",
    "omega_chain_bracket",
    "tau",
    "tau_union",
    "connected_sum",
    "kappa",
    "heegaard_word_matrix",
    "heegaard_tau",
    "lens_word",
    "calibrate_lens_word_sign",
    "norm_survey",
    "LENS_WORD_SIGN",
]


@dataclass(frozen=True)
class ChainSurgery:
    """Framings of a linear unknot chain; the empty chain is S^3."""

    framings: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "framings", tuple(int(n) for n in self.framings))

    def linking_matrix(self):
        k = len(self.framings)
        m = [[0] * k for _ in range(k)]
        for i, n in enumerate(self.framings):
            m[i][i] = n
            if i + 1 < k:
                m[i][i + 1] = m[i + 1][i] = 1
        return m


@dataclass(frozen=True)
class InvariantValue:
    value: CycNumber
    complex_value: complex
    norm: float

    @staticmethod
    def of(value: CycNumber) -> "InvariantValue":
        z = value.embed()
        return InvariantValue(value=value, complex_value=z, norm=abs(z))


def signature(matrix) -> int:
    """Signature of a symmetric integer (or rational) matrix by exact
    congruence diagonalization: no floats, no eigenvalues."""
    n = len(matrix)
    m = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    for i in range(n):
        if m[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if swap is not None:
                m[i], m[swap] = m[swap], m[i]
                for row in m:
                    row[i], row[swap] = row[swap], row[i]
            else:
                off = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if off is None:
                    continue  # zero row/column: a zero eigenvalue
                # add row/col `off` into i: new diagonal is 2 m[i][off] != 0
                for j in range(n):
                    m[i][j] += m[off][j]
                for row in m:
                    row[i] += row[off]
        piv = m[i][i]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            if m[j][i] != 0:
                f = m[j][i] / piv
                for t in range(n):
                    m[j][t] -= f * m[i][t]
                for row in m:
                    row[j] -= f * row[i]
    return pos - neg


def omega_chain_bracket(md: ModularData, chain: ChainSurgery) -> CycNumber:
    """Chain evaluation with every component colored by the Kirby weight
    d_a / D and twisted by theta_a^{n_j}: adjacent components contract
    through S~ and interior components divide by d."""
    framings = chain.framings
    f = md.field
    if not framings:
        return f.one
    d_inv = md.global_dim.inv()

    def weight(j, a):
        return md.qdim[a] * d_inv * md.theta_power(a, framings[j])

    k = len(framings)
    if k == 1:
        acc = f.zero
        for a in md.labels:
            acc = acc + weight(0, a) * md.qdim[a]
        return acc

    idx = {a: i for i, a in enumerate(md.labels)}
    cur = {b: f.zero for b in md.labels}
    for a in md.labels:
        wa = weight(0, a)
        for b in md.labels:
            cur[b] = cur[b] + wa * md.s_tilde[(idx[a], idx[b])]
    for j in range(1, k - 1):
        nxt = {b: f.zero for b in md.labels}
        for a in md.labels:
            fac = cur[a] * weight(j, a) * md.qdim[a].inv()
            for b in md.labels:
                nxt[b] = nxt[b] + fac * md.s_tilde[(idx[a], idx[b])]
        cur = nxt
    acc = f.zero
    for b in md.labels:
        acc = acc + cur[b] * weight(k - 1, b)
    return acc


def kappa(md: ModularData) -> CycNumber:
    """The framing-anomaly root of unity p_minus / D."""
    return md.p_minus * md.global_dim.inv()


def tau(md: ModularData, chain: ChainSurgery) -> InvariantValue:
    """(1/D) <chain> (p_minus/D)^sigma, all factors exact."""
    bracket = omega_chain_bracket(md, chain)
    sigma = signature(chain.linking_matrix())
    value = md.global_dim.inv() * bracket * kappa(md) ** sigma
    return InvariantValue.of(value)


def tau_union(md: ModularData, chains) -> InvariantValue:
    """tau of the split union of chains inside one S^3 (the connected sum of
    the pieces): brackets multiply and signatures add under one global 1/D."""
    bracket = md.field.one
    sigma = 0
    for c in chains:
        bracket = bracket * omega_chain_bracket(md, c)
        sigma += signature(c.linking_matrix())
    value = md.global_dim.inv() * bracket * kappa(md) ** sigma
    return InvariantValue.of(value)


def connected_sum(t1: InvariantValue, t2: InvariantValue, md: ModularData) -> InvariantValue:
    return InvariantValue.of(md.global_dim * t1.value * t2.value)


# ---------------------------------------------------------------------------
# genus-1 Heegaard route

# Pinned by calibration (see calibrate_lens_word_sign): the chain (p) and the
# word s t^(sign*p) s agree in norm for either sign, and p = +1 reproduces
# tau(S^3); the positive convention is the one we keep.
LENS_WORD_SIGN = 1


def heegaard_word_matrix(md: ModularData, word: str) -> CycMatrix:
    """Product of rho-images for a word over {s, t, S, T} (capitals are
    inverses), applied left to right."""
    rho_s, rho_t = rho_genus1(md.r)
    rho_t_inv = CycMatrix.diagonal(md.field, [md.twist[l] for l in md.labels])
    # rho(s) is an exact involution, so it serves as its own inverse
    gens = {"s": rho_s, "S": rho_s, "t": rho_t, "T": rho_t_inv}
    out = CycMatrix.identity(md.field, len(md.labels))
    for ch in word:
        if ch.isspace():
            continue
        if ch not in gens:
            raise ValueError(f"word letter {ch!r} not in {{s, t, S, T}}")
        out = out @ gens[ch]
    return out


def heegaard_tau(md: ModularData, word: str) -> float:
    """|<e_0, rho(word) e_0>|: the genus-1 Heegaard invariant up to the
    kappa-power ambiguity of the handlebody vector."""
    m = heegaard_word_matrix(md, word)
    return abs(m[(0, 0)].embed())


def lens_word(p: int, sign: int = LENS_WORD_SIGN) -> str:
    e = sign * p
    return "s" + ("t" if e >= 0 else "T") * abs(e) + "s"


def calibrate_lens_word_sign(md: ModularData, max_p: int = 6, tol: float = 1e-9):
    """Try both exponent signs for the lens word against the surgery route;
    return the list of signs that match all |p| <= max_p."""
    good = []
    for sign in (1, -1):
        ok = True
        for p in range(-max_p, max_p + 1):
            lhs = tau(md, ChainSurgery((p,))).norm
            rhs = heegaard_tau(md, lens_word(p, sign))
            if abs(lhs - rhs) > tol * max(1.0, abs(lhs)):
                ok = False
                break
        if ok:
            good.append(sign)
    return good


def norm_survey(md: ModularData, max_word_len: int) -> dict:
    """All |<e_0, rho(w) e_0>| over words w in {s, t} of length at most
    max_word_len.  Words reaching the same projective class give the same
    norm, so the search runs on canonical classes while keeping one linear
    representative per class; it stops early once no new classes appear.

    The distinct-value count is finite and bounded by the closure order,
    in contrast with the higher-genus situation."""
    from .finite_image import canonicalize, so3_closure

    if max_word_len > 20:
        raise ValueError("survey capped at word length 20")
    rho_s, rho_t = rho_genus1(md.r)
    ident = CycMatrix.identity(md.field, len(md.labels))

    seen = {canonicalize(ident).key()}
    frontier = [ident]
    class_norms = [_rounded_norm(ident)]
    saturation_length = max_word_len
    for length in range(1, max_word_len + 1):
        nxt = []
        for m in frontier:
            for g in (rho_s, rho_t):
                prod = g @ m
                key = canonicalize(prod).key()
                if key not in seen:
                    seen.add(key)
                    nxt.append(prod)
                    class_norms.append(_rounded_norm(prod))
        frontier = nxt
        if not frontier:
            saturation_length = length - 1
            break

    closure_order = so3_closure(md.r).order
    histogram = {}
    for v in class_norms:
        histogram[v] = histogram.get(v, 0) + 1
    values = sorted(histogram)
    return {
        "r": md.r,
        "max_word_len": max_word_len,
        "classes_reached": len(seen),
        "distinct_value_count": len(values),
        "closure_order": closure_order,
        "bounded_by_closure": len(values) <= closure_order,
        "saturation_length": saturation_length,
        "values": values,
        "histogram": {str(v): c for v, c in sorted(histogram.items())},
    }


def _rounded_norm(m: CycMatrix) -> float:
    return round(abs(m[(0, 0)].embed()), 12)
