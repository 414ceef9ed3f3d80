"""Coupled runner recursion for r-chains *with* corners.

Corners belong to two arcs, so a single count vector no longer suffices.
Cutting a down-free rho-matching just right of corner V_{k-1} splits it into
a prefix on the first k-1 arcs and a suffix on the last arc (without its
left corner).  States are classified by the rightmost corner: C-states carry
a runner on it, F-states do not:

    C[k][i] = matchings with a runner on V_k plus i further runners,
    F[k][i] = matchings with no runner on V_k and i runners,

with C[0] = F[0] = [1] and the chain's down-free count equal to F[k][0].

One step attaches a fresh arc.  Four coefficient families describe what the
arc contributes, indexed by the number alpha of runners chosen among its
r - 1 interior points (binomial factor C(r-1, alpha) throughout; the second
factor counts down-free matchings of the points that participate):

    no_corner[alpha]   neither corner of the arc takes part,
    left_in[alpha]     the left corner takes part and must be matched
                       (it absorbs a runner arriving from the left),
    right_in[alpha]    the right corner takes part as an ordinary point,
    both_in[alpha]     both corners take part, the left one matched.

The six contribution sums below (three per state class) encode which side
each runner group must match to; window sums over alpha carry the same
|i-j| <= alpha <= i+j parity constraint as the corner-free recursion.

For analysis the recursion is condensed: away from small indices each family
acts as a band matrix with coefficients band[XY][beta] (response of X-states
at offset beta to a unit Y-state), and the 2x2 matrix of band column sums
together with the matrix of total jump sizes sum_beta beta * band[XY][beta]
feeds the spectral machinery.  The per-point growth rate of the chain is the
r-th root of the condensed matrix's dominant eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .quadfield import QuadNumber


@dataclass(frozen=True)
class CornerCoefficients:
    """The four per-arc coefficient families for parameter r."""

    r: int
    no_corner: tuple[int, ...]
    left_in: tuple[int, ...]
    right_in: tuple[int, ...]
    both_in: tuple[int, ...]


def corner_coefficients(r: int) -> CornerCoefficients:
    if r < 1:
        raise ValueError("r must be positive")
    no_corner, left_in, right_in, both_in = [], [], [], []
    for a in range(r):
        pick = comb(r - 1, a)
        rest = r - 1 - a
        no_corner.append(pick * comb(rest, rest // 2))
        left_in.append(pick * (comb(rest + 1, (rest + 1) // 2) - comb(rest, rest // 2)))
        right_in.append(pick * comb(rest + 1, (rest + 1) // 2))
        both_in.append(pick * (comb(rest + 2, (rest + 2) // 2) - comb(rest + 1, (rest + 1) // 2)))
    return CornerCoefficients(
        r, tuple(no_corner), tuple(left_in), tuple(right_in), tuple(both_in)
    )


def coefficient_product_forms_agree(r: int) -> bool:
    """The bracketed differences above equal their closed product forms."""

    def comb0(n: int, k: int) -> int:
        return comb(n, k) if 0 <= k <= n else 0

    cc = corner_coefficients(r)
    for a in range(r):
        pick = comb(r - 1, a)
        rest = r - 1 - a
        if cc.left_in[a] != pick * comb0(rest, (rest - 1) // 2):
            return False
        if cc.both_in[a] != pick * comb0(rest + 1, rest // 2):
            return False
    return True


def _parity_prefix(row: Sequence[int]) -> list[list[int]]:
    out = [[0] * (len(row) + 1) for _ in range(2)]
    for p in range(2):
        acc = 0
        for t in range(len(row)):
            if t % 2 == p:
                acc += row[t]
            out[p][t + 1] = acc
    return out


def coupled_step(
    c_prev: Sequence[int], f_prev: Sequence[int], coeffs: CornerCoefficients
) -> tuple[list[int], list[int]]:
    """One arc-attachment step of the coupled recursion, exactly.

    Implemented directly from the six contribution sums with their index
    bounds; the small-index irregularities are nothing but those bounds, so
    no separately tabulated corner cases exist.
    """
    r = coeffs.r
    Z, I, W, U = coeffs.no_corner, coeffs.left_in, coeffs.right_in, coeffs.both_in
    pz, pi, pw, pu = map(_parity_prefix, (Z, I, W, U))
    n = max(len(c_prev), len(f_prev))
    c_prev = list(c_prev) + [0] * (n - len(c_prev))
    f_prev = list(f_prev) + [0] * (n - len(f_prev))
    size = n + r
    c_new = [0] * size
    f_new = [0] * size

    def window(prefix, i, j):
        lo = abs(i - j)
        if lo > r - 1:
            return 0
        hi = min(r - 1, i + j)
        p = lo & 1
        return prefix[p][hi + 1] - prefix[p][lo]

    for i in range(size):
        acc_c = 0
        acc_f = 0
        # a runner from the previous corner leaves the arc to the right:
        # alpha = i - 1 - j new runners join it
        for a in range(min(r - 1, i - 1) + 1):
            cp = c_prev[i - 1 - a] if i - 1 - a < n else 0
            if cp:
                acc_c += Z[a] * cp
                acc_f += W[a] * cp
        # the new corner's runner reaches back past the previous corner:
        # all alpha arc runners must match to the left
        for a in range(r):
            j = i + 1 + a
            if j < n:
                if c_prev[j]:
                    acc_f += I[a] * c_prev[j]
                if f_prev[j]:
                    acc_f += Z[a] * f_prev[j]
        # window-coupled terms: arc runners fuse with j existing runners
        for j in range(max(0, i - (r - 1)), min(n, i + r)):
            cp, fp = c_prev[j], f_prev[j]
            if cp:
                acc_c += window(pi, i, j) * cp
                acc_f += window(pu, i, j) * cp
            if fp:
                acc_c += window(pz, i, j) * fp
                acc_f += window(pw, i, j) * fp
        c_new[i] = acc_c
        f_new[i] = acc_f
    while len(c_new) > 1 and c_new[-1] == 0 and f_new[-1] == 0:
        c_new.pop()
        f_new.pop()
    return c_new, f_new


def coupled_series(r: int, kmax: int) -> list[tuple[list[int], list[int]]]:
    """States (C[k], F[k]) for k = 0..kmax, from C[0] = F[0] = [1]."""
    coeffs = corner_coefficients(r)
    states = [([1], [1])]
    for _ in range(kmax):
        states.append(coupled_step(*states[-1], coeffs))
    return states


def chain_counts(r: int, kmax: int) -> list[int]:
    """Down-free matching counts F[k][0] of the k-arc chain, k = 0..kmax."""
    return [f[0] for _, f in coupled_series(r, kmax)]


# ---------------------------------------------------------------------------
# condensed system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoupledSystem:
    """Stabilized band coefficients plus their condensed 2x2 summaries.

    ``band[XY][beta + r]`` is the response of an X-state at offset beta to a
    unit Y-state, for XY in CC, CF, FC, FF; ``condensed`` holds the band
    sums ((CC, CF), (FC, FF)); ``jumps`` the beta-weighted sums.
    """

    r: int
    band_cc: tuple[int, ...]
    band_cf: tuple[int, ...]
    band_fc: tuple[int, ...]
    band_ff: tuple[int, ...]
    condensed: tuple[tuple[int, int], tuple[int, int]]
    jumps: tuple[tuple[int, int], tuple[int, int]]
    positive_core: bool

    def bands(self) -> dict[str, tuple[int, ...]]:
        return {
            "CC": self.band_cc,
            "CF": self.band_cf,
            "FC": self.band_fc,
            "FF": self.band_ff,
        }


def extract_band(r: int, probe: int | None = None) -> CoupledSystem:
    """Read the stabilized band coefficients off the recursion itself.

    A unit state at a probe index deep in the stabilized region (default
    2r + 2) is pushed through one step; the responses at offsets -r..r are
    the band coefficients.  Probing the linear map avoids transcribing
    4(2r+1) closed forms by hand.  The band support |beta| <= r is verified,
    and the positivity of all four families at beta in {-1, 0, 1} (what the
    spectral growth bound assumes) is recorded.
    """
    coeffs = corner_coefficients(r)
    i0 = probe if probe is not None else 2 * r + 2
    if i0 < 2 * r:
        raise ValueError("probe index must sit in the stabilized region")
    unit = [0] * (i0 + 1)
    unit[i0] = 1
    zero = [0] * (i0 + 1)
    c_from_c, f_from_c = coupled_step(unit, zero, coeffs)
    c_from_f, f_from_f = coupled_step(zero, unit, coeffs)

    def band_of(resp: list[int]) -> tuple[int, ...]:
        grab = lambda idx: resp[idx] if 0 <= idx < len(resp) else 0
        for idx, val in enumerate(resp):
            if val and abs(i0 - idx) > r:
                raise AssertionError(f"response outside bandwidth at offset {i0 - idx}")
        return tuple(grab(i0 - beta) for beta in range(-r, r + 1))

    bcc, bcf = band_of(c_from_c), band_of(c_from_f)
    bfc, bff = band_of(f_from_c), band_of(f_from_f)
    condensed = ((sum(bcc), sum(bcf)), (sum(bfc), sum(bff)))
    betas = range(-r, r + 1)
    jump = lambda band: sum(b * v for b, v in zip(betas, band))
    jumps = ((jump(bcc), jump(bcf)), (jump(bfc), jump(bff)))
    core = all(
        band[r + beta] > 0 for band in (bcc, bcf, bfc, bff) for beta in (-1, 0, 1)
    )
    return CoupledSystem(r, bcc, bcf, bfc, bff, condensed, jumps, core)


def dominant_eigenvalue(condensed) -> QuadNumber:
    """Larger root of the characteristic polynomial of a positive 2x2 matrix."""
    (a, b), (c, e) = condensed
    disc = (a - e) * (a - e) + 4 * b * c
    return QuadNumber(a + e, 1, 2, disc)


def condensed_table(rmax: int) -> list[tuple[int, tuple, float]]:
    """(r, condensed matrix, per-point growth rate) for r = 1..rmax."""
    out = []
    for r in range(1, rmax + 1):
        sys = extract_band(r)
        rate = dominant_eigenvalue(sys.condensed).root_float(r)
        out.append((r, sys.condensed, rate))
    return out
