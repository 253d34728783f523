# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep over canonical right-hand sides.

Points of {0..d}^n are indexed lexicographically (first coordinate most
significant). ``ranks[x * m + i]`` is the position of row i's value at point
x inside that row's sorted value list, so the point satisfies threshold t
for row i iff ``ranks[x * m + i] >= t``.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcmp, memcpy, memset


cdef void _digits(int N, int n, int d, const int* strides, int* coord) noexcept nogil:
    cdef int x, j
    for x in range(N):
        for j in range(n):
            coord[x * n + j] = (x // strides[j]) % (d + 1)


cdef int _connected(const unsigned char* feas, int N, int n, int d,
                    const int* strides, const int* coord, int* queue, unsigned char* seen) noexcept nogil:
    cdef int start = -1, count = 0, x, head = 0, tail = 0
    cdef int j, v, c, y, stride
    for x in range(N):
        if feas[x]:
            count += 1
            if start < 0:
                start = x
    if count <= 1:
        return 1
    memset(seen, 0, N)
    seen[start] = 1
    queue[tail] = start
    tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        for j in range(n):
            stride = strides[j]
            c = coord[x * n + j]
            for v in range(d + 1):
                if v == c:
                    continue
                y = x + (v - c) * stride
                if feas[y] and not seen[y]:
                    seen[y] = 1
                    queue[tail] = y
                    tail += 1
    return tail == count


def is_connected_mask(const unsigned char[::1] feas, int n, int d):
    """True iff the marked points induce a connected Hamming graph (empty counts)."""
    cdef int N = feas.shape[0]
    cdef int* strides = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* queue = <int*> malloc(max(N, 1) * sizeof(int))
    cdef unsigned char* seen = <unsigned char*> malloc(max(N, 1))
    cdef int* coord = <int*> malloc(max(N * n, 1) * sizeof(int))
    cdef int j, s = 1, res
    try:
        for j in range(n - 1, -1, -1):
            strides[j] = s
            s *= d + 1
        _digits(N, n, d, strides, coord)
        res = _connected(&feas[0] if N else NULL, N, n, d, strides, coord, queue, seen)
    finally:
        free(coord)
        free(strides)
        free(queue)
        free(seen)
    return bool(res)


def first_disconnecting(const int[::1] ranks, const int[::1] sizes, int n, int d):
    """Lexicographically first threshold tuple whose feasible set is disconnected.

    Returns a tuple of per-row threshold indices, or None when every tuple
    gives a connected (possibly empty) feasible set.
    """
    cdef int m = sizes.shape[0]
    cdef int N = 1, j, x, s = 1, level, any_pt, found = 0
    for j in range(n):
        N *= d + 1
    if m == 0:
        return None
    cdef int* strides = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* queue = <int*> malloc(N * sizeof(int))
    cdef unsigned char* seen = <unsigned char*> malloc(N)
    cdef int* coord = <int*> malloc(max(N * n, 1) * sizeof(int))
    # masks[level] is the feasible set after fixing rows 0..level-1
    cdef unsigned char* masks = <unsigned char*> malloc((m + 1) * N)
    # prev[level] is the child set produced by the previous threshold at that level
    cdef unsigned char* prev = <unsigned char*> malloc(m * N)
    cdef int* has_prev = <int*> malloc(m * sizeof(int))
    cdef int* t = <int*> malloc(m * sizeof(int))
    cdef unsigned char* cur
    cdef unsigned char* nxt
    try:
        for j in range(n - 1, -1, -1):
            strides[j] = s
            s *= d + 1
        _digits(N, n, d, strides, coord)
        memset(masks, 1, N)
        level = 0
        t[0] = -1
        has_prev[0] = 0
        with nogil:
            while level >= 0:
                t[level] += 1
                if t[level] >= sizes[level]:
                    level -= 1
                    continue
                cur = masks + level * N
                nxt = masks + (level + 1) * N
                any_pt = 0
                for x in range(N):
                    nxt[x] = cur[x] and ranks[x * m + level] >= t[level]
                    if nxt[x]:
                        any_pt = 1
                if not any_pt:
                    # larger thresholds only shrink the set further
                    level -= 1
                    continue
                if has_prev[level] and memcmp(nxt, prev + level * N, N) == 0:
                    continue
                memcpy(prev + level * N, nxt, N)
                has_prev[level] = 1
                if level == m - 1:
                    if not _connected(nxt, N, n, d, strides, coord, queue, seen):
                        found = 1
                        break
                    continue
                level += 1
                t[level] = -1
                has_prev[level] = 0
        if found:
            return tuple([t[j] for j in range(m)])
        return None
    finally:
        free(strides)
        free(queue)
        free(seen)
        free(coord)
        free(masks)
        free(prev)
        free(has_prev)
        free(t)
