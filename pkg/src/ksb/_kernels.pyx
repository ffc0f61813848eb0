# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Mirrors ksb._kernels_py: max_clique, gf2_rank, fourier_diag_check,
distance_adjacency.  Bitsets live in flat uint64 arrays; Python ints cross
the boundary via to_bytes / from_bytes.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t, int64_t, uint16_t, uint8_t

cdef extern from *:
    """
    #define KSB_POPCNT(x) __builtin_popcountll((unsigned long long)(x))
    #define KSB_CTZ(x) __builtin_ctzll((unsigned long long)(x))
    """
    int KSB_POPCNT(uint64_t x) nogil
    int KSB_CTZ(uint64_t x) nogil

__all__ = ["max_clique", "gf2_rank", "fourier_diag_check", "distance_adjacency"]

DEF MAX_VERTICES = 4096


cdef int _int_to_words(object value, uint64_t* out, Py_ssize_t nwords) except -1:
    cdef bytes raw = value.to_bytes(nwords * 8, "little")
    memcpy(out, <const char*> raw, nwords * 8)
    return 0


cdef object _words_to_int(uint64_t* words, Py_ssize_t nwords):
    cdef bytes raw = (<const char*> words)[:nwords * 8]
    return int.from_bytes(raw, "little")


# ---------------------------------------------------------------------------
# maximum clique: suffix-incremental branch and bound
#
# For i = n-1 down to 0, stage i computes c[i] = omega(G[{i..n-1}]) reusing
# the already-known c[] as an exact pruning bound; since c[i] <= c[i+1] + 1,
# a stage stops at its first improving clique.  Effective on dense code-like
# graphs where coloring bounds stay near |V|/2.
# ---------------------------------------------------------------------------

cdef struct _MC:
    uint64_t* adj        # n rows of W words
    uint64_t* cand       # (n+2) candidate sets, one per depth
    uint16_t* rstack     # current clique
    uint64_t* best       # best clique bitmask
    int* c               # suffix clique numbers
    int best_size
    bint found
    int n
    Py_ssize_t W


cdef void _mc_expand(_MC* st, int depth) noexcept:
    cdef Py_ssize_t W = st.W
    cdef uint64_t* cand = st.cand + depth * W
    cdef uint64_t* sub = st.cand + (depth + 1) * W
    cdef uint64_t* adjrow
    cdef Py_ssize_t w
    cdef int v, d, popc
    cdef bint empty

    empty = True
    for w in range(W):
        if cand[w]:
            empty = False
            break
    if empty:
        if depth > st.best_size:
            st.best_size = depth
            memset(st.best, 0, W * 8)
            for d in range(depth):
                st.best[st.rstack[d] >> 6] |= (<uint64_t> 1) << (st.rstack[d] & 63)
            st.found = True
        return

    while not st.found:
        popc = 0
        v = -1
        for w in range(W):
            if cand[w]:
                if v < 0:
                    v = <int> (w * 64 + KSB_CTZ(cand[w]))
                popc += KSB_POPCNT(cand[w])
        if v < 0:
            return
        if depth + popc <= st.best_size:
            return
        if depth + st.c[v] <= st.best_size:
            return
        cand[v >> 6] &= ~((<uint64_t> 1) << (v & 63))
        st.rstack[depth] = <uint16_t> v
        adjrow = st.adj + <Py_ssize_t> v * W
        for w in range(W):
            sub[w] = cand[w] & adjrow[w]
        _mc_expand(st, depth + 1)


def max_clique(adj, int n, int initial_bound=0):
    """Exact maximum clique over bitset adjacency rows; returns (size, bitmask).

    ``initial_bound`` asserts a clique of that size is already known to the
    caller; only strictly larger cliques are searched for.  When nothing
    larger exists the result is (initial_bound, 0) and the caller's witness
    stands.
    """
    if n == 0:
        return max(0, initial_bound), 0
    if n > MAX_VERTICES:
        raise ValueError(f"kernel supports at most {MAX_VERTICES} vertices, got {n}")
    cdef Py_ssize_t W = (n + 63) >> 6
    cdef Py_ssize_t levels = n + 2
    cdef _MC st
    cdef Py_ssize_t i, w
    cdef int v, stage
    cdef bint compatible
    cdef uint64_t* greedy
    st.n = n
    st.W = W
    st.best_size = initial_bound
    st.found = False
    st.adj = <uint64_t*> calloc(n * W, 8)
    st.cand = <uint64_t*> calloc(levels * W, 8)
    st.rstack = <uint16_t*> calloc(n + 1, 2)
    st.best = <uint64_t*> calloc(W, 8)
    st.c = <int*> calloc(n + 1, sizeof(int))
    greedy = <uint64_t*> calloc(W, 8)
    if (st.adj == NULL or st.cand == NULL or st.rstack == NULL
            or st.best == NULL or st.c == NULL or greedy == NULL):
        free(greedy)
        _mc_free(&st)
        raise MemoryError()
    try:
        for i in range(n):
            _int_to_words(adj[i], st.adj + i * W, W)
        # greedy warm start: raises the incumbent before the search proper
        v = 0
        for i in range(n):
            compatible = True
            for w in range(W):
                if greedy[w] & ~st.adj[i * W + w]:
                    compatible = False
                    break
            if compatible:
                greedy[i >> 6] |= (<uint64_t> 1) << (i & 63)
                v += 1
        if v > st.best_size:
            st.best_size = v
            memcpy(st.best, greedy, W * 8)
        # suffix stages; the stage candidate set lives in the depth-1 slot
        st.c[n] = 0
        for stage in range(n - 1, -1, -1):
            st.found = False
            st.rstack[0] = <uint16_t> stage
            for w in range(W):
                st.cand[W + w] = st.adj[<Py_ssize_t> stage * W + w]
            # keep only candidate indices above the stage vertex
            for w in range(stage >> 6):
                st.cand[W + w] = 0
            if (stage & 63) == 63:
                st.cand[W + (stage >> 6)] = 0
            else:
                st.cand[W + (stage >> 6)] &= ~(((<uint64_t> 1) << ((stage & 63) + 1)) - 1)
            _mc_expand(&st, 1)
            st.c[stage] = st.c[stage + 1] + 1
            if st.c[stage] > st.best_size:
                st.c[stage] = st.best_size
        return st.best_size, _words_to_int(st.best, W)
    finally:
        free(greedy)
        _mc_free(&st)


cdef void _mc_free(_MC* st) noexcept:
    free(st.adj)
    free(st.cand)
    free(st.rstack)
    free(st.best)
    free(st.c)


# ---------------------------------------------------------------------------
# GF(2) rank: lowest-set-bit pivoting on word rows
# ---------------------------------------------------------------------------

def gf2_rank(rows, Py_ssize_t ncols):
    """Rank over GF(2); rows are int bitsets, reduced lowest-set-bit first."""
    cdef Py_ssize_t R = len(rows)
    if R == 0 or ncols == 0:
        return 0
    cdef Py_ssize_t W = (ncols + 63) >> 6
    cdef uint64_t* mat = <uint64_t*> calloc(R * W, 8)
    cdef uint64_t** pivot_of = <uint64_t**> calloc(ncols, sizeof(uint64_t*))
    if mat == NULL or pivot_of == NULL:
        free(mat)
        free(pivot_of)
        raise MemoryError()
    cdef int rank = 0
    cdef Py_ssize_t i, w, start
    cdef int col
    cdef uint64_t* cur
    cdef uint64_t* prow
    try:
        for i in range(R):
            _int_to_words(rows[i], mat + i * W, W)
        for i in range(R):
            cur = mat + i * W
            start = 0
            while True:
                col = -1
                for w in range(start, W):
                    if cur[w]:
                        col = <int> (w * 64 + KSB_CTZ(cur[w]))
                        start = w
                        break
                if col < 0:
                    break
                if pivot_of[col] == NULL:
                    pivot_of[col] = cur
                    rank += 1
                    break
                prow = pivot_of[col]
                for w in range(start, W):
                    cur[w] ^= prow[w]
        return rank
    finally:
        free(mat)
        free(pivot_of)


# ---------------------------------------------------------------------------
# Walsh-Hadamard eigenvector verification (int64 arithmetic)
# ---------------------------------------------------------------------------

def fourier_diag_check(int n, wpop, eig):
    """Check M v_S = eig[|S|] v_S for all S, where M[x][y] = wpop[d(x, y)].

    One in-place Walsh-Hadamard transform per row of M.  Caller must ensure
    sum_y |M[x][y]| fits in int64; the pure-Python kernel handles the rest.
    """
    if n < 0 or n > 20:
        raise ValueError(f"n out of range for the dense check: {n}")
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef int64_t* row = <int64_t*> calloc(size, 8)
    cdef int64_t* wp = <int64_t*> calloc(n + 1, 8)
    cdef int64_t* ei = <int64_t*> calloc(n + 1, 8)
    cdef uint8_t* pc = <uint8_t*> calloc(size, 1)
    if row == NULL or wp == NULL or ei == NULL or pc == NULL:
        free(row); free(wp); free(ei); free(pc)
        raise MemoryError()
    cdef Py_ssize_t x, y, s, base, j, h, step
    cdef int64_t a, b, expected
    cdef bint ok = True
    try:
        for j in range(n + 1):
            wp[j] = wpop[j]
            ei[j] = eig[j]
        for y in range(1, size):
            pc[y] = pc[y >> 1] + <uint8_t> (y & 1)
        for x in range(size):
            for y in range(size):
                row[y] = wp[pc[x ^ y]]
            h = 1
            while h < size:
                step = h << 1
                base = 0
                while base < size:
                    for j in range(base, base + h):
                        a = row[j]
                        b = row[j + h]
                        row[j] = a + b
                        row[j + h] = a - b
                    base += step
                h = step
            for s in range(size):
                expected = ei[pc[s]]
                if pc[s & x] & 1:
                    expected = -expected
                if row[s] != expected:
                    ok = False
                    break
            if not ok:
                break
        return bool(ok)
    finally:
        free(row); free(wp); free(ei); free(pc)


# ---------------------------------------------------------------------------
# distance adjacency over an explicit vertex list
# ---------------------------------------------------------------------------

def distance_adjacency(vecs, allowed):
    """Adjacency bitsets over vertex indices: i ~ j iff the Hamming distance
    between vecs[i] and vecs[j] lies in ``allowed``."""
    cdef Py_ssize_t nv = len(vecs)
    if nv == 0:
        return []
    cdef Py_ssize_t W = (nv + 63) >> 6
    cdef uint64_t* vv = <uint64_t*> calloc(nv, 8)
    cdef uint64_t* mat = <uint64_t*> calloc(nv * W, 8)
    cdef uint8_t okd[65]
    if vv == NULL or mat == NULL:
        free(vv)
        free(mat)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int d
    memset(okd, 0, 65)
    try:
        for d_obj in allowed:
            d = d_obj
            if 0 <= d <= 64:
                okd[d] = 1
        for i in range(nv):
            vv[i] = vecs[i]
        for i in range(nv):
            for j in range(i + 1, nv):
                if okd[KSB_POPCNT(vv[i] ^ vv[j])]:
                    mat[i * W + (j >> 6)] |= (<uint64_t> 1) << (j & 63)
                    mat[j * W + (i >> 6)] |= (<uint64_t> 1) << (i & 63)
        return [_words_to_int(mat + i * W, W) for i in range(nv)]
    finally:
        free(vv)
        free(mat)
