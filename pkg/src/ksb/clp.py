"""GF(2) rank bounds from distance-indicator matrices on the hypercube.

The 2^n x 2^n matrices built here have entry (x, y) depending only on the
Hamming distance d(x, y); reducing mod 2 and bounding the GF(2) rank bounds
any family whose principal submatrix is the identity.  The rank of a matrix
whose entries come from a multilinear polynomial of degree <= d in x + y is
at most 2 sum_{i <= d/2} C(n, i).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import kernels
from .errors import DomainError, ResourceLimitError
from .intmath import binomial

__all__ = [
    "F2Matrix",
    "clp_degree_bound",
    "build_kleitman_matrix",
    "build_divisibility_matrix",
    "f2_rank",
    "divisibility_bound",
    "lucas_binomial_mod",
    "MAX_MATRIX_N",
]

MAX_MATRIX_N = 13


@dataclass(frozen=True)
class F2Matrix:
    """Binary matrix with rows stored as int bitsets (bit y of bits[x] is the
    (x, y) entry)."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.rows:
            raise DomainError("row count does not match the bit rows")

    def entry(self, x: int, y: int) -> int:
        return (self.bits[x] >> y) & 1


def clp_degree_bound(n: int, d: int) -> int:
    """2 sum_{i=0}^{floor(d/2)} C(n, i): the rank bound for degree-d entries."""
    if not 0 <= d <= n:
        raise DomainError(f"need 0 <= d <= n, got d={d}, n={n}")
    return 2 * sum(comb(n, i) for i in range(d // 2 + 1))


def _xor_invariant_rows(n: int, parity_by_distance: list[int]) -> list[int]:
    """Rows of the 2^n x 2^n binary matrix with entry (x, y) =
    parity_by_distance[d(x, y)].

    Row x is row 0 with bit positions permuted by XOR with x; that
    permutation factors into one block swap per set coordinate of x, so each
    row costs O(n) big-int operations instead of O(2^n).
    """
    size = 1 << n
    base = 0
    for z in range(size):
        if parity_by_distance[z.bit_count()] & 1:
            base |= 1 << z
    lomasks = []
    for b in range(n):
        span = 1 << b
        block = (1 << span) - 1
        m = 0
        pos = 0
        while pos < size:
            m |= block << pos
            pos += 2 * span
        lomasks.append(m)
    rows = []
    for x in range(size):
        r = base
        rem = x
        b = 0
        while rem:
            if rem & 1:
                span = 1 << b
                lo = lomasks[b]
                r = ((r >> span) & lo) | ((r & lo) << span)
            rem >>= 1
            b += 1
        rows.append(r)
    return rows


def _check_build_size(n: int) -> None:
    if n < 1:
        raise DomainError(f"dimension must be at least 1, got {n}")
    if n > MAX_MATRIX_N:
        raise ResourceLimitError(
            f"2^n x 2^n matrix build capped at n <= {MAX_MATRIX_N}"
        )


def build_kleitman_matrix(n: int, t: int) -> F2Matrix:
    """Entry (x, y) = C(d(x, y) - 1, 2t) mod 2.

    The generalized binomial gives C(-1, 2t) = 1, so the diagonal is all
    ones, while every distance in {1, ..., 2t} gives a zero entry: a family
    with pairwise distances in that range induces an identity submatrix.
    """
    _check_build_size(n)
    if t < 1:
        raise DomainError(f"t must be at least 1, got {t}")
    parity = [binomial(d - 1, 2 * t) & 1 for d in range(n + 1)]
    rows = _xor_invariant_rows(n, parity)
    return F2Matrix(1 << n, 1 << n, tuple(rows))


def build_divisibility_matrix(n: int, k: int) -> F2Matrix:
    """Entry (x, y) = prod_{j<k} (1 - C(d(x, y), 2^j)) mod 2.

    By Lucas' theorem C(d, 2^j) mod 2 is bit j of d, so the product is 1
    exactly when d(x, y) is divisible by 2^k.
    """
    _check_build_size(n)
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    if n < (1 << k):
        raise DomainError(f"need n >= 2^k, got n={n}, k={k}")
    modulus = 1 << k
    parity = [1 if d % modulus == 0 else 0 for d in range(n + 1)]
    rows = _xor_invariant_rows(n, parity)
    return F2Matrix(1 << n, 1 << n, tuple(rows))


def f2_rank(m: F2Matrix) -> int:
    """Exact rank over GF(2) by bitset Gaussian elimination."""
    return kernels.gf2_rank(list(m.bits), m.cols)


def divisibility_bound(n: int, k: int) -> int:
    """2 sum_{i=0}^{2^{k-1}-1} C(n, i): the rank bound for the divisibility
    matrix, whose defining polynomial has degree 2^k - 1."""
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    if n < (1 << k):
        raise DomainError(f"need n >= 2^k, got n={n}, k={k}")
    return 2 * sum(comb(n, i) for i in range(1 << (k - 1)))


def lucas_binomial_mod(a: int, b: int, p: int) -> int:
    """C(a, b) mod p via the base-p digit product, for a, b >= 0 and prime p."""
    if a < 0 or b < 0:
        raise DomainError("indices must be non-negative")
    if p < 2:
        raise DomainError(f"modulus must be a prime >= 2, got {p}")
    result = 1
    while a or b:
        da, a = a % p, a // p
        db, b = b % p, b // p
        result = (result * comb(da, db)) % p
        if result == 0:
            return 0
    return result
