"""Lower-bound families: Hamming balls, prisms, greedy packings, and the
restricted-intersection counting bound they are measured against."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DomainError
from .intmath import binomial
from .oracle import VectorFamily
from .weights import DistanceSet, distance_set

__all__ = [
    "Construction",
    "hamming_ball",
    "prism",
    "packing_family",
    "validate_family",
    "lemma5_bound",
    "pair_chain_bound",
]


@dataclass(frozen=True)
class Construction:
    """A family together with the distance set it is built for."""

    family: VectorFamily
    L_target: DistanceSet
    label: str

    @property
    def size(self) -> int:
        return len(self.family.vectors)


def hamming_ball(n: int, r: int, center: int = 0) -> Construction:
    """All vectors within distance r of the center: sum_{i<=r} C(n, i)
    vectors with pairwise distances in {1, ..., 2r}."""
    if not 0 <= r < n:
        raise DomainError(f"need 0 <= r < n, got r={r}, n={n}")
    if not 0 <= center < (1 << n):
        raise DomainError("center out of range")
    vecs = []
    for w in range(r + 1):
        for pos in combinations(range(n), w):
            delta = 0
            for p in pos:
                delta |= 1 << p
            vecs.append(center ^ delta)
    fam = VectorFamily(n, tuple(sorted(vecs)))
    return Construction(fam, distance_set(n, range(1, 2 * r + 1)),
                        f"hamming-ball(r={r})")


def prism(n: int, r: int) -> Construction:
    """{0,1} x (an (n-1)-dimensional radius-r ball): 2 sum_{i<=r} C(n-1, i)
    vectors with pairwise distances in {1, ..., 2r+1}.  This realizes the
    half-integer-centered ball that is extremal for odd diameters."""
    if not 0 <= r < n - 1:
        raise DomainError(f"need 0 <= r < n-1, got r={r}, n={n}")
    inner = hamming_ball(n - 1, r, 0)
    vecs = []
    for u in inner.family.vectors:
        vecs.append(u << 1)
        vecs.append((u << 1) | 1)
    fam = VectorFamily(n, tuple(sorted(vecs)))
    return Construction(fam, distance_set(n, range(1, 2 * r + 2)),
                        f"prism(r={r})")


def packing_family(n: int, s: int, t: int) -> Construction:
    """Greedy packing of t-subsets of [n-t] with pairwise intersections at
    most t-s-1, each completed by the fixed top block of t coordinates.

    Every two members then share between t and 2t-s-1 coordinates, so all
    pairwise distances are even and fall in {2s+2, ..., 2t}, inside the
    target block {2s+1, ..., 2t}.  Candidates are scanned in lexicographic
    order; a candidate conflicts iff some (t-s)-subset of it is contained in
    an accepted set, which per-element membership masks detect in
    C(t, t-s) big-int operations.  Deterministic; no attempt is made to
    match the asymptotically optimal packing density.
    """
    if not 0 <= s < t:
        raise DomainError(f"need 0 <= s < t, got s={s}, t={t}")
    if n <= 2 * t:
        raise DomainError(f"need n > 2t, got n={n}, t={t}")
    ground = n - t
    elem_masks = [0] * ground
    accepted: list[tuple[int, ...]] = []
    thresh = t - s
    for cand in combinations(range(ground), t):
        conflict = False
        for sub in combinations(cand, thresh):
            inter = elem_masks[sub[0]]
            for e in sub[1:]:
                inter &= elem_masks[e]
                if not inter:
                    break
            if inter:
                conflict = True
                break
        if not conflict:
            idx = len(accepted)
            for e in cand:
                elem_masks[e] |= 1 << idx
            accepted.append(cand)
    top = ((1 << t) - 1) << (n - t)
    vecs = []
    for vset in accepted:
        v = top
        for e in vset:
            v |= 1 << e
        vecs.append(v)
    fam = VectorFamily(n, tuple(sorted(vecs)))
    return Construction(fam, distance_set(n, range(2 * s + 1, 2 * t + 1)),
                        f"packing(s={s},t={t})")


def validate_family(c: Construction) -> bool:
    """True iff every distinct pair's distance lies in the target set."""
    allowed = set(c.L_target.members)
    vecs = c.family.vectors
    for i, a in enumerate(vecs):
        for b in vecs[i + 1:]:
            if (a ^ b).bit_count() not in allowed:
                return False
    return True


def lemma5_bound(n: int, i: int, j: int) -> int:
    """Bound for families of i-subsets of [n] with pairwise intersections
    exactly j: 1 + (C(i,j) - 1)(i - j) + floor((n - i)/(i - j)).

    This is the exact finite-n count: after fixing one member, all but at
    most one trace class holds at most i-j sets, and the remaining class
    consists of disjoint (i-j)-sets.
    """
    if not i > j >= 1:
        raise DomainError(f"need i > j >= 1, got i={i}, j={j}")
    if n < i:
        raise DomainError(f"need n >= i, got n={n}, i={i}")
    return 1 + (binomial(i, j) - 1) * (i - j) + (n - i) // (i - j)


def pair_chain_bound(n: int, s: int) -> int:
    """Bound for L = {2s+1, 2s+2}: members of a family through the origin
    become (2s+2)-sets meeting pairwise in exactly s+1 points (after padding
    the odd-weight ones with one extra coordinate), so the family has at most
    1 + lemma5_bound(n, 2s+2, s+1) vectors."""
    if s < 0:
        raise DomainError(f"s must be non-negative, got {s}")
    if n < 2 * s + 2:
        raise DomainError(f"need n >= 2s+2, got n={n}, s={s}")
    return 1 + lemma5_bound(n, 2 * s + 2, s + 1)
