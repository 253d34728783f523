"""Pure-Python sweep over canonical right-hand sides.

Same contract as the compiled ``_kernels`` module. Feasible sets are int
bitmasks over lexicographic point indices; connectivity is memoised per mask.
"""

from __future__ import annotations

from typing import Sequence


def _neighbour_masks(n: int, d: int) -> list[int]:
    N = (d + 1) ** n
    strides = [(d + 1) ** (n - 1 - j) for j in range(n)]
    out = []
    for x in range(N):
        mask = 0
        for stride in strides:
            c = (x // stride) % (d + 1)
            for v in range(d + 1):
                if v != c:
                    mask |= 1 << (x + (v - c) * stride)
        out.append(mask)
    return out


def _connected(mask: int, nbrs: Sequence[int]) -> bool:
    if mask & (mask - 1) == 0:
        return True
    seen = mask & -mask
    frontier = seen
    while frontier:
        grow = 0
        while frontier:
            low = frontier & -frontier
            grow |= nbrs[low.bit_length() - 1]
            frontier ^= low
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected_mask(feas: Sequence[int], n: int, d: int) -> bool:
    mask = 0
    for x, f in enumerate(feas):
        if f:
            mask |= 1 << x
    return _connected(mask, _neighbour_masks(n, d))


def first_disconnecting(ranks: Sequence[int], sizes: Sequence[int], n: int, d: int):
    m = len(sizes)
    if m == 0:
        return None
    N = (d + 1) ** n
    nbrs = _neighbour_masks(n, d)
    row_masks = []
    for i in range(m):
        per_t = [0] * sizes[i]
        for x in range(N):
            r = ranks[x * m + i]
            # point x meets every threshold t <= r
            per_t[r] |= 1 << x
        acc = 0
        for t in range(sizes[i] - 1, -1, -1):
            acc |= per_t[t]
            per_t[t] = acc
        row_masks.append(per_t)

    memo: dict[int, bool] = {}

    def connected(mask: int) -> bool:
        res = memo.get(mask)
        if res is None:
            res = memo[mask] = _connected(mask, nbrs)
        return res

    def descend(level: int, mask: int):
        prev = None
        for t, rm in enumerate(row_masks[level]):
            child = mask & rm
            if not child:
                return None
            if child == prev:
                continue
            prev = child
            if level == m - 1:
                if not connected(child):
                    return (t,)
            else:
                found = descend(level + 1, child)
                if found is not None:
                    return (t,) + found
        return None

    return descend(0, (1 << N) - 1)
