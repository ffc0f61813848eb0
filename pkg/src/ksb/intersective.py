"""Sign-counted spectral bounds for subsets of F_p^N whose difference set
avoids {0,1}^N.

The signed Cayley matrix M[u][v] = (-1)^(nonzero coords of u-v), supported on
differences in J union -J with J = {0,1}^N, has eigenvalue

    2 * prod_j 2 sin(pi v_j / p) * cos(pi N / 2 - pi sum_j v_j / p) - 2

at the character indexed by v.  Characters with a zero coordinate give
exactly -2; among all-nonzero characters the sine product is positive, so a
non-positive cosine forces a negative eigenvalue.  Counting only cos > 0
characters therefore over-counts the non-negative eigenvalues, which is all
the inertia bound needs.  The cosine sign is decided by an exact integer
residue test; the counting is a digit-sum DP, never an enumeration of p^N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .bounds import BoundReport
from .errors import DomainError, ResourceLimitError

__all__ = [
    "FpParams",
    "EigSignCount",
    "cos_sign_positive",
    "exact_sign_count",
    "spectral_bound_fp",
    "closed_form_bound",
    "stratified_pair_count",
]

_REFINE_MAX_STRATA = 2_000_000


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


@dataclass(frozen=True)
class FpParams:
    """An odd prime p and a dimension N >= 0."""

    p: int
    N: int

    def __post_init__(self) -> None:
        if self.p < 3 or not _is_prime(self.p):
            raise DomainError(f"p must be an odd prime >= 3, got {self.p}")
        if self.N < 0:
            raise DomainError(f"N must be non-negative, got {self.N}")


@dataclass(frozen=True)
class EigSignCount:
    """Partition of the p^N characters: provably-negative eigenvalues vs the
    rest.  count_negative_certain + count_possibly_nonneg = p^N."""

    count_negative_certain: int
    count_possibly_nonneg: int
    zero_coordinate_count: int


def cos_sign_positive(p: int, N: int, total: int) -> bool:
    """Exact sign test: cos(pi N / 2 - pi total / p) > 0 iff the residue
    (N p - 2 total) mod 4p lies in [0, p) or (3p, 4p).

    The boundary residues p and 3p are the cos = 0 cases and return False
    (the eigenvalue is then exactly -2).
    """
    r = (N * p - 2 * total) % (4 * p)
    return r < p or r > 3 * p


def _count_by_residue(
    p: int,
    n_coords: int,
    lo: int,
    hi: int,
    start: list[int] | None = None,
) -> list[int]:
    """Counts of digit strings in {lo..hi}^n_coords by digit sum mod 2p."""
    mod = 2 * p
    counts = list(start) if start is not None else [1] + [0] * (mod - 1)
    for _ in range(n_coords):
        nxt = [0] * mod
        for r, c in enumerate(counts):
            if c:
                for v in range(lo, hi + 1):
                    nxt[(r + v) % mod] += c
        counts = nxt
    return counts


def _multinomial(n: int, multiset: tuple[int, ...]) -> int:
    out = math.factorial(n)
    run = 1
    prev = None
    for d in multiset:
        if d == prev:
            run += 1
        else:
            out //= math.factorial(run)
            prev, run = d, 1
    out //= math.factorial(run)
    return out


def _refined_negative_count(p: int, N: int) -> int:
    """Characters reclassified as certainly negative by outward-rounded
    interval arithmetic on 2 prod(2 sin(pi d / p)) cos(theta) - 2.

    Strata are multisets of nonzero digit values (the eigenvalue depends only
    on the multiset).  A stratum is reclassified only when the interval upper
    bound of the product times the cosine stays strictly below 1; soundness
    never depends on the float values, only sharpness does.
    """
    n_strata = math.comb(N + p - 2, p - 2)
    if n_strata > _REFINE_MAX_STRATA:
        raise ResourceLimitError(
            f"refinement would enumerate {n_strata} strata (cap {_REFINE_MAX_STRATA})"
        )
    slop = 1e-9
    sin_hi = [0.0] * p
    for d in range(1, p):
        sin_hi[d] = 2.0 * math.sin(math.pi * d / p) * (1.0 + 1e-12) + 1e-15
    extra = 0
    for multiset in combinations_with_replacement(range(1, p), N):
        total = sum(multiset)
        if not cos_sign_positive(p, N, total):
            continue
        prod_hi = 1.0
        for d in multiset:
            prod_hi *= sin_hi[d]
        cos_hi = math.cos(math.pi * N / 2.0 - math.pi * total / p) + slop
        if cos_hi > 0.0 and prod_hi * cos_hi < 1.0:
            extra += _multinomial(N, multiset)
    return extra


def exact_sign_count(params: FpParams, refine: bool = False) -> EigSignCount:
    """Classify every character of F_p^N by certain eigenvalue sign.

    Certainly negative: any zero coordinate (eigenvalue exactly -2), or all
    coordinates nonzero with cos <= 0.  Everything else counts as possibly
    non-negative.  With ``refine`` an optional interval pass additionally
    rules out strata whose eigenvalue provably stays below zero.
    """
    p, N = params.p, params.N
    counts = _count_by_residue(p, N, 1, p - 1)
    possibly = sum(
        c for r, c in enumerate(counts) if c and cos_sign_positive(p, N, r)
    )
    if refine:
        possibly -= _refined_negative_count(p, N)
    total = p ** N
    return EigSignCount(
        count_negative_certain=total - possibly,
        count_possibly_nonneg=possibly,
        zero_coordinate_count=total - (p - 1) ** N,
    )


def spectral_bound_fp(params: FpParams, refine: bool = False) -> BoundReport:
    """Inertia bound: the maximum difference-avoiding set is at most the
    number of possibly-non-negative eigenvalues."""
    sc = exact_sign_count(params, refine=refine)
    witness = {
        "p": params.p,
        "count_negative_certain": str(sc.count_negative_certain),
        "count_possibly_nonneg": str(sc.count_possibly_nonneg),
        "zero_coordinate_count": str(sc.zero_coordinate_count),
        "refined": refine,
    }
    return BoundReport(
        params.N, None, "intersective-spectral", sc.count_possibly_nonneg, witness
    )


def closed_form_bound(params: FpParams) -> BoundReport:
    """Closed-form bound (1 - (1 - 1/(p-1))^p / 2)(p-1)^N, evaluated in exact
    integers as (p-1)^N - floor((p-2)^p (p-1)^(N-p) / 2).

    The flipping argument behind it pairs characters inside the stratum
    [p-2]^p x [p-1]^(N-p) and needs N >= p; below that the trivial (p-1)^N
    count is returned instead, tagged in the witness.
    """
    p, N = params.p, params.N
    trivial = (p - 1) ** N
    if N >= p:
        value = trivial - ((p - 2) ** p * (p - 1) ** (N - p)) // 2
        formula = "pairing"
    else:
        value = trivial
        formula = "alon"
    return BoundReport(
        N, None, "intersective-closed-form", value, {"p": p, "formula": formula}
    )


def stratified_pair_count(params: FpParams) -> tuple[int, int]:
    """(possibly-non-negative count, stratum size) inside the pairing stratum
    [p-2]^p x [p-1]^(N-p); the flipping involution guarantees the first is at
    most half the second."""
    p, N = params.p, params.N
    if N < p:
        raise DomainError(f"the pairing stratum needs N >= p, got N={N}, p={p}")
    counts = _count_by_residue(p, p, 1, p - 2)
    counts = _count_by_residue(p, N - p, 1, p - 1, start=counts)
    possibly = sum(
        c for r, c in enumerate(counts) if c and cos_sign_positive(p, N, r)
    )
    total = (p - 2) ** p * (p - 1) ** (N - p)
    return possibly, total
