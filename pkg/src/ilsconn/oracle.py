"""Exhaustive ground truth: is G(A, b) connected for every right-hand side b?

Row i's feasibility at a point depends only on where b_i sits relative to the
finite set V_i of values the row takes on the box {0..d}^n. Sweeping b over
the product of the V_i therefore visits every distinct feasible set except
the empty one, which counts as connected.
"""

from __future__ import annotations

import itertools
import math
from array import array
from dataclasses import dataclass
from fractions import Fraction

from ilsconn.graph import (
    DEFAULT_ENUM_CAP,
    check_cap,
    integer_rows,
    solution_graph,
)
from ilsconn.kernels import get_backend
from ilsconn.matrix import CoeffMatrix, IlsInstance, Point, is_feasible
from ilsconn.witness import DisconnectWitness

DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int, detail: str):
        super().__init__(f"oracle refused: {detail} = {required} checks exceeds budget {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class CanonicalRhsSpace:
    values: tuple[tuple[Fraction, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(v) for v in self.values)

    @property
    def count(self) -> int:
        return math.prod(self.sizes)

    def rhs(self, index: tuple[int, ...]) -> tuple[Fraction, ...]:
        return tuple(vals[t] for vals, t in zip(self.values, index))

    def __iter__(self):
        return itertools.product(*self.values)


@dataclass(frozen=True)
class OracleVerdict:
    connected_for_all_b: bool
    counterexample_b: tuple[Fraction, ...] | None = None
    rhs_count: int = 0


def _row_values(A: CoeffMatrix, d: int, cap: int):
    """Integer-scaled row values at every box point, plus the per-row scale."""
    check_cap(A.n, d, cap)
    rows, _ = integer_rows(A, [Fraction(0)] * A.m)
    scales = [
        math.lcm(*(v.denominator for v in r)) if r else 1 for r in A.rows
    ]
    pts = list(itertools.product(range(d + 1), repeat=A.n))
    vals = [[sum(a * x for a, x in zip(r, p)) for p in pts] for r in rows]
    return vals, scales


def canonical_rhs_space(A: CoeffMatrix, d: int, cap: int = DEFAULT_ENUM_CAP) -> CanonicalRhsSpace:
    vals, scales = _row_values(A, d, cap)
    return CanonicalRhsSpace(
        tuple(tuple(Fraction(v, s) for v in sorted(set(row))) for row, s in zip(vals, scales))
    )


def rank_table(A: CoeffMatrix, d: int, budget: int = DEFAULT_BUDGET, cap: int = DEFAULT_ENUM_CAP):
    """Kernel input: ranks[x*m + i] is the rank of row i's value at box point x."""
    vals, scales = _row_values(A, d, cap)
    levels = [sorted(set(row)) for row in vals]
    N = (d + 1) ** A.n
    required = math.prod(len(v) for v in levels) * N
    if required > budget:
        sizes = " x ".join(str(len(v)) for v in levels)
        raise BudgetExceeded(required, budget, f"({sizes}) rhs x {d + 1}^{A.n} points")

    index = [{v: k for k, v in enumerate(lv)} for lv in levels]
    ranks = array("i", [0]) * (N * A.m)
    for i, row in enumerate(vals):
        idx = index[i]
        for x, v in enumerate(row):
            ranks[x * A.m + i] = idx[v]
    sizes = array("i", [len(v) for v in levels])
    return levels, scales, ranks, sizes


def connected_for_all_b(
    A: CoeffMatrix,
    d: int,
    budget: int = DEFAULT_BUDGET,
    backend: str | None = None,
    cap: int = DEFAULT_ENUM_CAP,
) -> OracleVerdict:
    """Sweep all canonical right-hand sides in lexicographic order.

    Returns the first b whose solution graph has two or more components,
    or a positive verdict when none exists.
    """
    levels, scales, ranks, sizes = rank_table(A, d, budget, cap)
    found = get_backend(backend).first_disconnecting(ranks, sizes, A.n, d)
    count = math.prod(sizes)
    if found is None:
        return OracleVerdict(True, None, count)
    b = tuple(Fraction(levels[i][t], scales[i]) for i, t in enumerate(found))
    return OracleVerdict(False, b, count)


def _neighbours(pt: Point, d: int):
    c = list(pt.coords)
    for pos, orig in enumerate(pt.coords):
        for v in range(d + 1):
            if v != orig:
                c[pos] = v
                yield Point(tuple(c), pt.labels)
        c[pos] = orig


def witness_failures(A: CoeffMatrix, d: int, w: DisconnectWitness, cap: int = DEFAULT_ENUM_CAP) -> list[str]:
    """Reasons ``w`` fails to disconnect ``(A, w.rhs, d)``; empty when it is valid."""
    if len(w.rhs) != A.m:
        return [f"rhs has {len(w.rhs)} entries for {A.m} rows"]
    for name, pt in (("p", w.p), ("q", w.q)):
        if pt.labels != A.labels:
            return [f"{name} labels {pt.labels} differ from matrix columns {A.labels}"]
        if not pt.in_domain(d):
            return [f"{name} = {pt} lies outside {{0..{d}}}^{A.n}"]
    if w.p == w.q:
        return ["p equals q"]
    inst = IlsInstance(A, w.rhs, d)
    fails = []
    for name, pt in (("p", w.p), ("q", w.q)):
        if not is_feasible(inst, pt):
            fails.append(f"{name} = {pt} is infeasible")
    if fails:
        return fails
    g = solution_graph(inst, cap)
    if g.component_of(w.p) == g.component_of(w.q):
        fails.append("p and q lie in the same component")
    iso = w.isolated_point
    if iso is not None:
        bad = [y for y in _neighbours(iso, d) if is_feasible(inst, y)]
        if bad:
            fails.append(f"{w.isolated} = {iso} has feasible neighbour {bad[0]}")
    return fails


def validate_witness(A: CoeffMatrix, d: int, w: DisconnectWitness, cap: int = DEFAULT_ENUM_CAP) -> bool:
    return not witness_failures(A, d, w, cap)
