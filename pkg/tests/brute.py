"""Independent brute-force oracles written straight from the definitions.

Nothing here imports the package's elimination, graph or oracle code; the
checks work on plain lists of Fractions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def rows_of(A):
    """Accept a CoeffMatrix or nested lists, return list of lists of Fractions."""
    rows = A.rows if hasattr(A, "rows") else A
    return [[Fraction(v) for v in r] for r in rows]


def feasible(rows, b, x) -> bool:
    return all(sum(a * xi for a, xi in zip(r, x)) >= bi for r, bi in zip(rows, b))


def solutions(rows, b, d, n):
    return [x for x in itertools.product(range(d + 1), repeat=n) if feasible(rows, b, x)]


def hamming(x, y) -> int:
    return sum(1 for a, c in zip(x, y) if a != c)


def components(points) -> list[set]:
    """Connected components by pairwise scan, O(|V|^2)."""
    left = set(points)
    comps = []
    while left:
        seed = left.pop()
        comp = {seed}
        stack = [seed]
        while stack:
            u = stack.pop()
            near = [v for v in left if hamming(u, v) == 1]
            for v in near:
                left.discard(v)
                comp.add(v)
                stack.append(v)
        comps.append(comp)
    return comps


def eliminable(rows, cols, j) -> bool:
    """Definition check on the submatrix with column index set ``cols``."""
    for sign in (1, -1):
        ok = True
        for r in rows:
            if r[j] * sign > 0 and any(r[k] != 0 for k in cols if k != j):
                ok = False
                break
        if ok:
            return True
    return False


def has_eo(rows, n) -> bool:
    for perm in itertools.permutations(range(n)):
        cols = set(range(n))
        good = True
        for j in perm:
            if not eliminable(rows, cols, j):
                good = False
                break
            cols.discard(j)
        if good:
            return True
    return False


def row_values(rows, d, n):
    pts = list(itertools.product(range(d + 1), repeat=n))
    return [sorted({sum(a * x for a, x in zip(r, p)) for p in pts}) for r in rows]


def connected_for_all_b(rows, d, n):
    """(verdict, first disconnecting b) over the product of row value sets."""
    for b in itertools.product(*row_values(rows, d, n)):
        if len(components(solutions(rows, b, d, n))) >= 2:
            return False, b
    return True, None


def sign_matrices(m, n, values=(-1, 0, 1)):
    for ent in itertools.product(values, repeat=m * n):
        yield [list(ent[i * n:(i + 1) * n]) for i in range(m)]
