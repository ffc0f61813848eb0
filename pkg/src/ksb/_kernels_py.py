"""Pure-Python kernels: int-bitset implementations of the hot loops.

These mirror the compiled extension exactly (same signatures, same results)
and keep the package fully functional without a C toolchain.  They are the
slow path; tests and benchmarks drive them at reduced sizes.
"""

from __future__ import annotations

import sys
from typing import Iterable, Sequence

__all__ = ["max_clique", "gf2_rank", "fourier_diag_check", "distance_adjacency"]


def max_clique(adj: Sequence[int], n: int, initial_bound: int = 0) -> tuple[int, int]:
    """Exact maximum clique over bitset adjacency rows.

    Suffix-incremental branch and bound: for i = n-1 down to 0 the stage
    computes c[i], the clique number of the subgraph on vertices {i..n-1},
    reusing c[] as an exact pruning bound inside the stage search.  Since
    c[i] <= c[i+1] + 1, a stage can stop at the first improving clique.
    Well suited to dense code-like graphs where coloring bounds are loose.
    Fully deterministic; returns (size, member bitmask).

    ``initial_bound`` asserts a clique of that size is already known to the
    caller; only strictly larger cliques are searched for.  When nothing
    larger exists the result is (initial_bound, 0) and the caller's witness
    stands.
    """
    if n == 0:
        return max(0, initial_bound), 0
    best_size = initial_bound
    best_mask = 0
    found = False
    rstack = [0] * (n + 1)
    c = [0] * (n + 1)

    def expand(depth: int, cand: int) -> None:
        nonlocal best_size, best_mask, found
        if not cand:
            if depth > best_size:
                best_size = depth
                mask = 0
                for d in range(depth):
                    mask |= 1 << rstack[d]
                best_mask = mask
                found = True
            return
        while cand and not found:
            if depth + cand.bit_count() <= best_size:
                return
            v = (cand & -cand).bit_length() - 1
            if depth + c[v] <= best_size:
                return
            cand ^= 1 << v
            rstack[depth] = v
            expand(depth + 1, cand & adj[v])

    # greedy warm start: raises the incumbent before the search proper
    greedy_mask = 0
    greedy_size = 0
    for v in range(n):
        if greedy_mask & ~adj[v]:
            continue
        greedy_mask |= 1 << v
        greedy_size += 1
    if greedy_size > best_size:
        best_size = greedy_size
        best_mask = greedy_mask

    limit = sys.getrecursionlimit()
    bumped = n + 200 > limit
    if bumped:
        sys.setrecursionlimit(n + 200)
    try:
        c[n] = best_size  # no suffix clique can exceed the incumbent
        for i in range(n - 1, -1, -1):
            found = False
            suffix_above = -1 << (i + 1)
            rstack[0] = i
            expand(1, adj[i] & suffix_above)
            c[i] = min(c[i + 1] + 1, best_size)
    finally:
        if bumped:
            sys.setrecursionlimit(limit)
    return best_size, best_mask


def gf2_rank(rows: Iterable[int], ncols: int) -> int:
    """Rank over GF(2); rows are int bitsets, reduced lowest-set-bit first."""
    pivot_by_bit: dict[int, int] = {}
    rank = 0
    for row in rows:
        cur = row
        while cur:
            low = cur & -cur
            pivot = pivot_by_bit.get(low)
            if pivot is None:
                pivot_by_bit[low] = cur
                rank += 1
                break
            cur ^= pivot
    return rank


def fourier_diag_check(n: int, wpop: Sequence[int], eig: Sequence[int]) -> bool:
    """Check M v_S = eig[|S|] v_S for all S, where M[x][y] = wpop[d(x, y)].

    The 2^n matvecs against the parity vectors v_S are organized as one
    Walsh-Hadamard transform per row of M; comparison is entrywise exact.
    """
    size = 1 << n
    pc = [0] * size
    for z in range(1, size):
        pc[z] = pc[z >> 1] + (z & 1)
    for x in range(size):
        row = [wpop[pc[x ^ y]] for y in range(size)]
        h = 1
        while h < size:
            step = h << 1
            for base in range(0, size, step):
                for j in range(base, base + h):
                    a = row[j]
                    b = row[j + h]
                    row[j] = a + b
                    row[j + h] = a - b
            h = step
        for s_vec in range(size):
            expected = eig[pc[s_vec]]
            if pc[s_vec & x] & 1:
                expected = -expected
            if row[s_vec] != expected:
                return False
    return True


def distance_adjacency(vecs: Sequence[int], allowed: Iterable[int]) -> list[int]:
    """Adjacency bitsets over vertex indices: i ~ j iff the Hamming distance
    between vecs[i] and vecs[j] lies in ``allowed``."""
    ok = set(allowed)
    nv = len(vecs)
    rows = [0] * nv
    for i in range(nv):
        vi = vecs[i]
        for j in range(i + 1, nv):
            if (vi ^ vecs[j]).bit_count() in ok:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows
