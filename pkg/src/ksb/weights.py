"""Allowed-distance sets and the integer weight schemes used to build
pseudo-adjacency matrices whose support avoids them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .intmath import binomial

__all__ = [
    "DistanceSet",
    "distance_set",
    "WeightScheme",
    "kleitman_even",
    "kleitman_odd",
    "consecutive_scheme",
    "custom_scheme",
    "scheme_for_diameter",
    "validate_support",
]


@dataclass(frozen=True)
class DistanceSet:
    """A set of allowed pairwise Hamming distances inside {1..n}.

    ``members`` is a strictly increasing tuple; build instances through
    :func:`distance_set`, which normalizes arbitrary iterables.
    """

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"dimension must be at least 1, got {self.n}")
        if any(b <= a for a, b in zip(self.members, self.members[1:])):
            raise DomainError("members must be strictly increasing")
        if self.members and not (1 <= self.members[0] and self.members[-1] <= self.n):
            raise DomainError(f"members must lie in 1..{self.n}, got {self.members}")

    def __contains__(self, d: int) -> bool:
        return d in self.members

    @property
    def count_even(self) -> int:
        return sum(1 for d in self.members if d % 2 == 0)

    @property
    def parity(self) -> str:
        """'odd', 'even', 'mixed', or 'empty'."""
        if not self.members:
            return "empty"
        odd = any(d % 2 for d in self.members)
        even = any(d % 2 == 0 for d in self.members)
        if odd and even:
            return "mixed"
        return "odd" if odd else "even"

    @property
    def is_consecutive_block(self) -> bool:
        m = self.members
        return bool(m) and m[-1] - m[0] + 1 == len(m)

    def compact(self) -> str:
        """Range-compressed text form, e.g. '1-4' or '1,3,5'."""
        if not self.members:
            return ""
        parts = []
        start = prev = self.members[0]
        for d in self.members[1:]:
            if d == prev + 1:
                prev = d
                continue
            parts.append(f"{start}-{prev}" if prev > start else str(start))
            start = prev = d
        parts.append(f"{start}-{prev}" if prev > start else str(start))
        return ",".join(parts)


def distance_set(n: int, members: Iterable[int]) -> DistanceSet:
    return DistanceSet(n, tuple(sorted({int(d) for d in members})))


@dataclass(frozen=True)
class WeightScheme:
    """Integer weights f(1..n); ``values[k-1]`` is f(k)."""

    n: int
    values: tuple[int, ...]
    label: str

    def __post_init__(self) -> None:
        if len(self.values) != self.n:
            raise DomainError(
                f"scheme needs exactly n={self.n} values, got {len(self.values)}"
            )

    def value(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise DomainError(f"k must lie in 1..{self.n}, got {k}")
        return self.values[k - 1]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k in range(1, self.n + 1) if self.values[k - 1])


def kleitman_even(n: int, t: int) -> WeightScheme:
    """f(k) = C(floor((k-1)/2), t): vanishes for k <= 2t, so the weighted
    matrix avoids all distances up to the even diameter 2t."""
    if t < 1:
        raise DomainError(f"t must be at least 1, got {t}")
    if 2 * t >= n:
        raise DomainError(f"need 2t < n, got t={t}, n={n}")
    values = tuple(binomial((k - 1) // 2, t) for k in range(1, n + 1))
    return WeightScheme(n, values, f"kleitman-even(t={t})")


def kleitman_odd(n: int, t: int) -> WeightScheme:
    """f(k) = C(k/2 - 1, t) for even k, 0 for odd k: support is the even
    integers >= 2t+2, avoiding all distances up to the odd diameter 2t+1."""
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    if 2 * t + 1 >= n:
        raise DomainError(f"need 2t+1 < n, got t={t}, n={n}")
    values = tuple(
        binomial(k // 2 - 1, t) if k % 2 == 0 else 0 for k in range(1, n + 1)
    )
    return WeightScheme(n, values, f"kleitman-odd(t={t})")


def consecutive_scheme(n: int, s: int, t: int) -> WeightScheme:
    """f(k) = C(floor((k-1)/2) - s, t-s) with the generalized binomial.

    Nonzero exactly for k >= 2t+1 or 1 <= k <= 2s (negative upper index), so
    the support misses the block {2s+1, ..., 2t}.  s=0 reduces to
    :func:`kleitman_even` elementwise.
    """
    if not 0 <= s < t:
        raise DomainError(f"need 0 <= s < t, got s={s}, t={t}")
    if 2 * t >= n:
        raise DomainError(f"need 2t < n, got t={t}, n={n}")
    values = tuple(binomial((k - 1) // 2 - s, t - s) for k in range(1, n + 1))
    return WeightScheme(n, values, f"consecutive(s={s},t={t})")


def custom_scheme(values: Iterable[int], label: str = "custom") -> WeightScheme:
    vals = tuple(int(v) for v in values)
    return WeightScheme(len(vals), vals, label)


def scheme_for_diameter(n: int, d: int) -> WeightScheme:
    """The scheme whose spectral bound matches the closed-form diameter bound."""
    if not 1 <= d < n:
        raise DomainError(f"need 1 <= d < n, got d={d}, n={n}")
    if d % 2 == 0:
        return kleitman_even(n, d // 2)
    return kleitman_odd(n, (d - 1) // 2)


def validate_support(f: WeightScheme, L: DistanceSet) -> bool:
    """True iff f(k) = 0 for every allowed distance k in L (so the weighted
    matrix is a pseudo-adjacency matrix of the forbidden-distance graph)."""
    if f.n != L.n:
        raise DomainError(f"dimension mismatch: scheme n={f.n}, L n={L.n}")
    return all(f.values[k - 1] == 0 for k in L.members)
