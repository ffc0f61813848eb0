"""Exact spectra of hypercube distance matrices and their weighted sums.

The distance-k matrix M_{n,k} (entry 1 iff the Hamming distance is exactly k)
has eigenvalue K_k(i; n) on the level-i Fourier eigenspace, with multiplicity
C(n, i); weighted sums inherit the common eigenbasis, so whole spectra reduce
to integer Krawtchouk sums.  Nothing here touches a numerical eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import kernels
from .errors import DomainError, ResourceLimitError
from .weights import WeightScheme

__all__ = [
    "KrawtchoukTable",
    "krawtchouk_table",
    "SpectrumSummary",
    "weighted_spectrum",
    "verify_fourier_eigenvectors",
    "FOURIER_CHECK_MAX_N",
]

FOURIER_CHECK_MAX_N = 14
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class KrawtchoukTable:
    """values[k][i] = K_k(i; n) = sum_j (-1)^j C(i, j) C(n-i, k-j)."""

    n: int
    values: tuple[tuple[int, ...], ...]

    def eigenvalue(self, k: int, i: int) -> int:
        return self.values[k][i]


@lru_cache(maxsize=128)
def krawtchouk_table(n: int) -> KrawtchoukTable:
    """Exact (n+1) x (n+1) table computed by the defining alternating sum."""
    if n < 1:
        raise DomainError(f"dimension must be at least 1, got {n}")
    rows = []
    for k in range(n + 1):
        row = []
        for i in range(n + 1):
            acc = 0
            for j in range(min(i, k) + 1):
                term = comb(i, j) * comb(n - i, k - j)
                acc += -term if j & 1 else term
            row.append(acc)
        rows.append(tuple(row))
    return KrawtchoukTable(n, tuple(rows))


@dataclass(frozen=True)
class SpectrumSummary:
    """Eigenvalues lambda_0..lambda_n with multiplicities C(n, i) and the
    sign tallies that feed the inertia bound.  Zero eigenvalues count toward
    both non-negative and non-positive tallies."""

    n: int
    eigenvalues: tuple[int, ...]
    multiplicities: tuple[int, ...]
    count_nonneg: int
    count_nonpos: int
    count_zero: int


def weighted_spectrum(n: int, f: WeightScheme) -> SpectrumSummary:
    """Spectrum of sum_k f(k) M_{n,k}: lambda_i = sum_k f(k) K_k(i; n)."""
    if f.n != n:
        raise DomainError(f"dimension mismatch: n={n}, scheme n={f.n}")
    table = krawtchouk_table(n).values
    eigenvalues = []
    for i in range(n + 1):
        acc = 0
        for k in range(1, n + 1):
            w = f.values[k - 1]
            if w:
                acc += w * table[k][i]
        eigenvalues.append(acc)
    multiplicities = [comb(n, i) for i in range(n + 1)]
    nonneg = sum(m for e, m in zip(eigenvalues, multiplicities) if e >= 0)
    nonpos = sum(m for e, m in zip(eigenvalues, multiplicities) if e <= 0)
    zero = sum(m for e, m in zip(eigenvalues, multiplicities) if e == 0)
    return SpectrumSummary(
        n, tuple(eigenvalues), tuple(multiplicities), nonneg, nonpos, zero
    )


def verify_fourier_eigenvectors(n: int, f: WeightScheme) -> bool:
    """Materialize M = sum_k f(k) M_{n,k} row by row and check the exact
    matrix-vector product M v_S = lambda_{|S|} v_S entrywise for every
    S in [n], where (v_S)_T = (-1)^{|S cap T|}.

    A verification oracle only: the dense matrix is capped at n <= 14.
    """
    if f.n != n:
        raise DomainError(f"dimension mismatch: n={n}, scheme n={f.n}")
    if n > FOURIER_CHECK_MAX_N:
        raise ResourceLimitError(
            f"dense eigenvector check capped at n <= {FOURIER_CHECK_MAX_N}"
        )
    summary = weighted_spectrum(n, f)
    wpop = [0] + list(f.values)
    eig = list(summary.eigenvalues)
    impl = kernels.impl
    if kernels.BACKEND == "cython":
        # total absolute row mass bounds every intermediate WHT value
        mass = sum(abs(f.values[k - 1]) * comb(n, k) for k in range(1, n + 1))
        if mass >= _INT64_SAFE:
            impl = kernels.python_impl
    return impl.fourier_diag_check(n, wpop, eig)
