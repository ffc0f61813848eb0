"""Exact ground truth by exhaustive search: maximum families in {0,1}^n with
pairwise distances in L, and maximum difference-avoiding sets in F_p^N.

Both reduce to maximum clique over bitset adjacency.  The hypercube search
exploits translation invariance: a maximum family can always be translated to
contain the all-zero vector, after which every other member has weight in L,
so only those vertices are searched (value = 1 + clique size among them).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .bounds import BoundReport
from .errors import DomainError, ResourceLimitError
from .weights import DistanceSet

__all__ = [
    "VectorFamily",
    "CompatGraph",
    "build_compat_graph",
    "max_clique",
    "oracle_exact",
    "oracle_fp_exact",
    "DEFAULT_MAX_N",
    "DEFAULT_MAX_FP_POINTS",
    "MAX_N_ENV",
]

DEFAULT_MAX_N = 12
DEFAULT_MAX_FP_POINTS = 2000
MAX_N_ENV = "KSB_MAX_ORACLE_N"
_MAX_VERTICES = 4096


@dataclass(frozen=True)
class VectorFamily:
    """A set of distinct n-bit vectors encoded as integers; bit j of the
    encoding is coordinate j+1, and line format writes coordinate 1 first."""

    n: int
    vectors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= 64:
            raise DomainError(f"n must lie in 1..64 for the bit encoding, got {self.n}")
        if list(self.vectors) != sorted(set(self.vectors)):
            raise DomainError("vectors must be distinct and sorted")
        if self.vectors and not 0 <= self.vectors[-1] < (1 << self.n):
            raise DomainError("vector out of range for the dimension")

    def __len__(self) -> int:
        return len(self.vectors)

    def to_lines(self) -> list[str]:
        return [
            "".join("1" if (v >> j) & 1 else "0" for j in range(self.n))
            for v in self.vectors
        ]

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> "VectorFamily":
        vecs = []
        n = None
        for line in lines:
            line = line.strip()
            if not line:
                continue
            if n is None:
                n = len(line)
            elif len(line) != n:
                raise DomainError("inconsistent vector lengths in family file")
            v = 0
            for j, ch in enumerate(line):
                if ch == "1":
                    v |= 1 << j
                elif ch != "0":
                    raise DomainError(f"invalid character {ch!r} in family file")
            vecs.append(v)
        if n is None:
            raise DomainError("empty family file")
        return cls(n, tuple(sorted(set(vecs))))

    def pairwise_distances(self) -> set[int]:
        out = set()
        for i, a in enumerate(self.vectors):
            for b in self.vectors[i + 1:]:
                out.add((a ^ b).bit_count())
        return out


@dataclass(frozen=True)
class CompatGraph:
    """Bitset adjacency over an explicit vertex list.

    semantics 'allowed-distance-clique': edges join vertices at allowed
    distances, so families are cliques.  (The complement view, independence
    in the forbidden-distance graph, is equivalent; the allowed graph is much
    sparser for small L.)
    """

    vertices: tuple[int, ...]
    rows: tuple[int, ...]
    semantics: str = "allowed-distance-clique"


def build_compat_graph(vertices: Sequence[int], L: DistanceSet) -> CompatGraph:
    rows = kernels.distance_adjacency(list(vertices), set(L.members))
    return CompatGraph(tuple(vertices), tuple(rows))


def max_clique(g: CompatGraph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique; returns (size, witness vertex indices).

    Deterministic: the single-threaded search explores vertices in a fixed
    order, so the witness is reproducible run to run.
    """
    count = len(g.vertices)
    if count > _MAX_VERTICES:
        raise ResourceLimitError(f"clique search capped at {_MAX_VERTICES} vertices")
    size, mask = kernels.max_clique(list(g.rows), count)
    members = tuple(i for i in range(count) if (mask >> i) & 1)
    return size, members


def _oracle_cap(max_n: Optional[int]) -> int:
    if max_n is not None:
        return max_n
    env = os.environ.get(MAX_N_ENV)
    if env:
        return int(env)
    return DEFAULT_MAX_N


def _warm_start_clique(n: int, L: DistanceSet) -> list[int]:
    """A known-valid clique among the weight-in-L vertices (a construction
    family translated to contain 0, with 0 dropped).

    Only a lower-bound seed for the search: with it as the incumbent, the
    branch and bound merely has to refute anything larger.  Returns [] when
    no construction applies.
    """
    from . import constructions  # local import: constructions imports oracle

    m = L.members
    if not m or not L.is_consecutive_block:
        return []
    family: tuple[int, ...] = ()
    if m[0] == 1:
        d = m[-1]
        if d % 2 == 0:
            family = constructions.hamming_ball(n, d // 2).family.vectors
        else:
            family = constructions.prism(n, (d - 1) // 2).family.vectors
    elif m[0] % 2 == 1 and m[-1] % 2 == 0:
        s = (m[0] - 1) // 2
        t = m[-1] // 2
        if n > 2 * t:
            family = constructions.packing_family(n, s, t).family.vectors
    if not family:
        return []
    base = family[0]
    clique = [v ^ base for v in family if v != base]
    allowed = set(m)
    assert all(v.bit_count() in allowed for v in clique)
    return clique


def oracle_exact(
    n: int,
    L: DistanceSet,
    *,
    normalize: bool = True,
    max_n: Optional[int] = None,
) -> BoundReport:
    """Exact maximum size of a family in {0,1}^n with pairwise distances in L.

    ``normalize=False`` searches the full 2^n-vertex graph instead of fixing
    the zero vector; it exists to test that the normalization is harmless.
    """
    if L.n != n:
        raise DomainError(f"dimension mismatch: n={n}, L n={L.n}")
    cap = _oracle_cap(max_n)
    if n > cap:
        raise ResourceLimitError(
            f"oracle capped at n <= {cap} (override with max_n or ${MAX_N_ENV})"
        )
    allowed = set(L.members)
    if normalize:
        verts = [v for v in range(1 << n) if v.bit_count() in allowed]
        if verts:
            warm = _warm_start_clique(n, L)
            rows = kernels.distance_adjacency(verts, allowed)
            size, mask = kernels.max_clique(rows, len(verts), len(warm))
            if mask:
                clique = [verts[i] for i in range(len(verts)) if (mask >> i) & 1]
            else:
                clique = warm  # nothing beat the seed; its witness stands
            assert size == len(clique)
            family = [0] + clique
        else:
            family = [0]
        value = len(family)
    else:
        verts = list(range(1 << n))
        rows = kernels.distance_adjacency(verts, allowed)
        value, mask = kernels.max_clique(rows, len(verts))
        family = [v for v in verts if (mask >> v) & 1]
    fam = VectorFamily(n, tuple(sorted(family)))
    witness = {
        "space": "hypercube",
        "normalized": normalize,
        "family": fam.to_lines(),
    }
    return BoundReport(n, L, "oracle", value, witness)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    q = 2
    while q * q <= p:
        if p % q == 0:
            return False
        q += 1
    return True


def oracle_fp_exact(p: int, N: int, *, max_points: Optional[int] = None) -> BoundReport:
    """Exact maximum size of H in F_p^N with (H - H) meeting {0,1}^N only at 0.

    Equivalently the independence number of the Cayley graph with connection
    set (J union -J) minus 0, J = {0,1}^N; computed as a maximum clique in
    the complement graph.
    """
    if not _is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if N < 0:
        raise DomainError(f"N must be non-negative, got {N}")
    points = p ** N
    cap = max_points if max_points is not None else DEFAULT_MAX_FP_POINTS
    if points > cap:
        raise ResourceLimitError(f"F_p oracle capped at p^N <= {cap}, got {points}")

    powers = [p ** i for i in range(N)]

    def decode(idx: int) -> tuple[int, ...]:
        return tuple((idx // powers[i]) % p for i in range(N))

    def encode(digits: Sequence[int]) -> int:
        return sum((d % p) * powers[i] for i, d in enumerate(digits))

    conn = set()
    for mask in range(1, 1 << N):
        digits = tuple((mask >> i) & 1 for i in range(N))
        conn.add(encode(digits))
        conn.add(encode(tuple((p - d) % p for d in digits)))
    conn.discard(0)

    neigh = [0] * points
    for u in range(points):
        du = decode(u)
        for c in conn:
            dc = decode(c)
            v = encode(tuple(du[i] + dc[i] for i in range(N)))
            neigh[u] |= 1 << v
    full = (1 << points) - 1
    comp = [full ^ neigh[u] ^ (1 << u) for u in range(points)]
    size, mask = kernels.max_clique(comp, points)
    members = sorted(u for u in range(points) if (mask >> u) & 1)
    witness = {
        "space": "fp",
        "p": p,
        "N": N,
        "family": [",".join(str(d) for d in decode(u)) for u in members],
    }
    return BoundReport(N, None, "oracle", size, witness)
