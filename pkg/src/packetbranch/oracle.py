"""Independent checks in the compact limit ``q = 0``.

Two ingredients, neither of which uses the branching engine's formulas:

* the classical SO(p) -> SO(p-1) interlacing rule for one-row highest weights
  ``(l, 0, ..., 0)``;
* a brute-force dimension of the spherical harmonics, obtained as the kernel
  dimension of the Laplacian on homogeneous polynomials, with the rank taken
  over the integers by fraction-free (Bareiss) elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .branching import BranchingReport, finite_type_parameters
from .errors import ScaleError
from .exactnum import HalfInt, half
from .repmodel import harmonic_dim

MAX_BRUTE_N = 6
MAX_BRUTE_B = 6


@dataclass(frozen=True)
class CompactRep:
    """SO(p) representation with highest weight ``(ell, 0, ..., 0)``."""

    p: int
    ell: int

    def __post_init__(self):
        if self.p < 3:
            raise ValueError(f"CompactRep needs p >= 3, got {self.p}")
        if self.ell < 0:
            raise ValueError(f"CompactRep needs ell >= 0, got {self.ell}")

    @property
    def highest_weight(self) -> tuple[int, ...]:
        return (self.ell,) + (0,) * (self.p // 2 - 1)


def classical_branching(r: CompactRep) -> set[int]:
    """First entries ``m`` of the SO(p-1) highest weights in the restriction.

    Interlacing against ``(ell, 0, ..., 0)`` pins every later entry of the
    subgroup weight to 0 and leaves ``ell >= m >= 0``.
    """
    hw = r.highest_weight
    lower = hw[1] if len(hw) > 1 else 0
    return {m for m in range(0, hw[0] + 1) if hw[0] >= m >= lower}


def monomials(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the degree-``d`` monomials in ``n`` variables."""
    if d < 0:
        return []
    out = []
    # stars and bars: choose n-1 bar positions among d+n-1 slots
    for bars in combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 1 - prev - 1)
        out.append(tuple(exps))
    return out


def laplacian_matrix(n: int, b: int) -> list[list[int]]:
    """Integer matrix of the Laplacian from degree ``b`` to degree ``b - 2``."""
    src = monomials(n, b)
    dst = monomials(n, b - 2)
    index = {m: i for i, m in enumerate(dst)}
    mat = [[0] * len(src) for _ in dst]
    for j, alpha in enumerate(src):
        for i, a in enumerate(alpha):
            if a >= 2:
                beta = alpha[:i] + (a - 2,) + alpha[i + 1:]
                mat[index[beta]][j] += a * (a - 1)
    return mat


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        piv = next((i for i in range(rank, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        prow = m[rank]
        for i in range(rank + 1, rows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, cols):
                # exact: Sylvester's identity guarantees divisibility
                row[j] = (pv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
    return rank


def brute_force_harmonic_dim(n: int, b: int) -> int:
    if not (1 <= n <= MAX_BRUTE_N and 0 <= b <= MAX_BRUTE_B):
        raise ScaleError(
            f"brute force limited to 1 <= n <= {MAX_BRUTE_N}, 0 <= b <= {MAX_BRUTE_B}; got ({n},{b})"
        )
    total = len(monomials(n, b))
    if b < 2:
        return total
    return total - bareiss_rank(laplacian_matrix(n, b))


def compact_consistency(p: int, lambda_max) -> BranchingReport:
    """Compare the finite-type branching rule with classical branching at ``q = 0``.

    For each ``lambda = ell + p/2 <= lambda_max`` with ``ell >= 0``, the
    parameters ``mu = lambda - 1/2 - n >= (p-1)/2`` must map onto the classical
    branching set under ``m = mu - (p-1)/2``, and ``dim H^ell(R^p)`` must equal
    the summed dimensions of the pieces.
    """
    if not 3 <= p <= 10:
        raise ValueError(f"compact_consistency needs 3 <= p <= 10, got {p}")
    lambda_max = HalfInt.of(lambda_max)
    report = BranchingReport({"p": p, "q": 0, "lambda_max": str(lambda_max)})
    floor_mu = half(p - 1)
    ell = 0
    while half(p) + ell <= lambda_max:
        lam = half(p) + ell
        params = {"p": p, "ell": ell, "lambda": str(lam)}
        ms = [int(mu - floor_mu) for _, mu in finite_type_parameters(lam) if mu >= floor_mu]
        classical = classical_branching(CompactRep(p, ell))
        report.check(
            len(ms) == len(set(ms)) and set(ms) == classical,
            params,
            {"m": sorted(classical)},
            {"m": sorted(ms)},
        )
        report.check(
            len(ms) == ell + 1,
            params,
            {"count": ell + 1},
            {"count": len(ms)},
        )
        lhs = harmonic_dim(p, ell)
        rhs = sum(harmonic_dim(p - 1, m) for m in classical)
        report.check(lhs == rhs, params, {"dim": lhs}, {"dim_sum": rhs})
        ell += 1
    return report
