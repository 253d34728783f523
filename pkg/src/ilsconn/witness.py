"""Right-hand sides that disconnect the solution graph, with witness points.

Every constructor returns a :class:`DisconnectWitness` whose ``p`` and ``q``
are feasible for ``(A, rhs, d)`` and lie in different components. The
constructions are explicit: given a matrix with no eliminable column they
write down ``b``, ``p`` and ``q`` in closed form; :func:`find_witness`
strips eliminable columns first and lifts the result back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ilsconn.elimination import (
    EliminationResult,
    ElimRule,
    can_eliminate_at,
    eliminate,
    run_algorithm1,
)
from ilsconn.matrix import CoeffMatrix, Point, sgn

TWO_ROW = "TwoRow"
TWO_COLUMN = "TwoColumn"
THREE_ROW_PAIR = "ThreeRowPair"
THREE_ROW_DISJOINT = "ThreeRowDisjoint"

EQ1_ROWS = ((1, 1, 0), (1, -1, 0), (-1, 0, 1), (-1, 0, -1))


class WitnessPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class DisconnectWitness:
    rhs: tuple[Fraction, ...]
    p: Point
    q: Point
    # which of p/q has no feasible neighbour at all, when the construction proves it
    isolated: str | None
    construction: str

    @property
    def isolated_point(self) -> Point | None:
        return {"p": self.p, "q": self.q}.get(self.isolated)


@dataclass(frozen=True)
class WitnessSearch:
    status: str  # "eo" | "witness" | "unknown"
    elimination: EliminationResult
    witness: DisconnectWitness | None = None


def _full(x: int, d: int) -> int:
    return d * (1 - x)


def _part(x: int, d: int) -> int:
    return (d - 1) * (1 - x) + x


def _require_no_eliminable(A: CoeffMatrix) -> None:
    for j in A.labels:
        rule = can_eliminate_at(A, j)
        if rule is not None:
            raise WitnessPreconditionError(f"column {j} can be eliminated (rule {rule.value})")


def row_ordering(row: Sequence[Fraction], labels: Sequence[int]) -> list[int]:
    """Column labels sorted by non-decreasing |entry|, ties by ascending label."""
    return [lab for _, lab in sorted(zip((abs(v) for v in row), labels))]


def two_row_witness(A: CoeffMatrix, d: int) -> DisconnectWitness:
    """Disconnecting witness for a 2-row matrix with no eliminable column; q is isolated."""
    if A.m != 2:
        raise WitnessPreconditionError(f"two-row construction needs 2 rows, got {A.m}")
    _require_no_eliminable(A)
    labels = A.labels
    r1, r2 = A.rows
    a1 = dict(zip(labels, r1))
    a2 = dict(zip(labels, r2))
    for j in labels:
        if a1[j] == 0 or sgn(a1[j]) != -sgn(a2[j]):
            raise WitnessPreconditionError(f"column {j} does not have opposite nonzero signs")

    j1 = row_ordering(r1, labels)
    j2 = row_ordering(r2, labels)
    x = {k: 0 if a1[k] > 0 else 1 for k in labels}
    for k in labels:
        assert a1[k] * (1 - 2 * x[k]) == abs(a1[k])
        assert a2[k] * (1 - 2 * x[k]) == -abs(a2[k])

    b1 = sum((a1[k] * _full(x[k], d) for k in labels if k != j1[1]), Fraction(0))
    b1 += a1[j1[1]] * _part(x[j1[1]], d)
    b2 = sum((a2[k] * _full(x[k], d) for k in labels if k != j2[0]), Fraction(0))
    b2 += a2[j2[0]] * _part(x[j2[0]], d)

    p = [_part(x[k], d) if k == j1[0] else _full(x[k], d) for k in labels]
    q = [_part(x[k], d) if k == j1[1] else _full(x[k], d) for k in labels]
    return DisconnectWitness((b1, b2), Point.of(p, labels), Point.of(q, labels), "q", TWO_ROW)


def pad_rhs(A: CoeffMatrix, i: int, d: int) -> Fraction:
    """A right-hand side that every point of the box satisfies for row ``i``."""
    return -d * sum((abs(v) for v in A.rows[i]), Fraction(0))


def opposite_row_pair(A: CoeffMatrix) -> tuple[int, int]:
    """Two rows whose signs are opposite and nonzero in both columns of an m x 2 matrix."""
    rows = A.rows

    def first(pred):
        for i, r in enumerate(rows):
            if pred(r):
                return i
        raise WitnessPreconditionError("a column can be eliminated; no opposite row pair")

    p = first(lambda r: r[0] != 0 and r[1] != 0)
    q = first(lambda r: sgn(r[0]) == -sgn(rows[p][0]) and r[1] != 0)
    r = first(lambda r: sgn(r[1]) == -sgn(rows[p][1]) and r[0] != 0)
    if sgn(rows[q][1]) == -sgn(rows[p][1]):
        return p, q
    if sgn(rows[r][0]) == -sgn(rows[p][0]):
        return p, r
    return q, r


def two_column_witness(A: CoeffMatrix, d: int) -> DisconnectWitness:
    if A.n != 2:
        raise WitnessPreconditionError(f"two-column construction needs 2 columns, got {A.n}")
    _require_no_eliminable(A)
    if A.m == 2:
        return two_row_witness(A, d)
    i1, i2 = opposite_row_pair(A)
    inner = two_row_witness(A.select_rows((i1, i2)), d)
    rhs = [pad_rhs(A, k, d) for k in range(A.m)]
    rhs[i1], rhs[i2] = inner.rhs
    return DisconnectWitness(tuple(rhs), inner.p, inner.q, inner.isolated, TWO_COLUMN)


def opposite_columns(A: CoeffMatrix, i1: int, i2: int) -> list[int]:
    """Labels where rows ``i1`` and ``i2`` have strictly opposite signs."""
    r1, r2 = A.rows[i1], A.rows[i2]
    return [lab for lab, u, v in zip(A.labels, r1, r2) if sgn(u) != 0 and sgn(u) == -sgn(v)]


def three_row_witness(A: CoeffMatrix, d: int) -> DisconnectWitness:
    if A.m != 3:
        raise WitnessPreconditionError(f"three-row construction needs 3 rows, got {A.m}")
    _require_no_eliminable(A)

    for i1, i2 in ((0, 1), (0, 2), (1, 2)):
        if len(opposite_columns(A, i1, i2)) >= 2:
            return _three_row_pair(A, d, i1, i2)
    return _three_row_disjoint(A, d)


def _three_row_pair(A: CoeffMatrix, d: int, i1: int, i2: int) -> DisconnectWitness:
    sub = A.select_rows((i1, i2))
    elim = run_algorithm1(sub)
    if elim.has_eo:
        raise RuntimeError(f"row pair ({i1}, {i2}) unexpectedly has an EO in {A}")
    inner = lift_expansion(sub, elim, two_row_witness(eliminate(sub, elim.eliminated), d), d)
    (third,) = {0, 1, 2} - {i1, i2}
    rhs = [Fraction(0)] * 3
    rhs[i1], rhs[i2] = inner.rhs
    rhs[third] = pad_rhs(A, third, d)
    return DisconnectWitness(tuple(rhs), inner.p, inner.q, inner.isolated, THREE_ROW_PAIR)


def _three_row_disjoint(A: CoeffMatrix, d: int) -> DisconnectWitness:
    lam12 = opposite_columns(A, 0, 1)
    lam23 = opposite_columns(A, 1, 2)
    lam13 = opposite_columns(A, 0, 2)
    if A.n != 3 or not (len(lam12) == len(lam23) == len(lam13) == 1):
        raise RuntimeError(f"no three-row branch applies to {A}; this is a bug")
    order = (lam12[0], lam23[0], lam13[0])
    if len(set(order)) != 3:
        raise RuntimeError(f"opposite-sign column sets overlap in {A}; this is a bug")

    # canonical coordinates: column k holds the label order[k]
    C = A.permute_columns(order).rows
    if not (C[0][1] == C[1][2] == C[2][0] == 0):
        raise RuntimeError(f"canonical zero pattern missing in {A}; this is a bug")
    x = [0 if C[k][k] > 0 else 1 for k in range(3)]
    for j in range(3):
        assert C[j][j] * (1 - 2 * x[j]) == abs(C[j][j])

    rhs = []
    for i in range(3):
        js = row_ordering(C[i], range(3))
        assert C[i][js[0]] == 0
        for s in (1, 2):
            if js[s] != i:
                assert C[i][js[s]] * (1 - 2 * x[js[s]]) == -abs(C[i][js[s]])
        f = _full if js[1] == i else _part
        rhs.append(sum((C[i][k] * f(x[k], d) for k in range(3)), Fraction(0)))

    p_canon = [_full(x[k], d) for k in range(3)]
    q_canon = [_part(x[k], d) for k in range(3)]
    back = [order.index(lab) for lab in A.labels]
    p = Point.of([p_canon[k] for k in back], A.labels)
    q = Point.of([q_canon[k] for k in back], A.labels)
    return DisconnectWitness(tuple(rhs), p, q, "p", THREE_ROW_DISJOINT)


def lift_expansion(
    A: CoeffMatrix, elim: EliminationResult, inner: DisconnectWitness, d: int
) -> DisconnectWitness:
    """Extend a witness for the residual columns to one for all of ``A``.

    Eliminated coordinates are pinned at ``d`` (rule ii) or ``0`` (rule i)
    and the right-hand side absorbs their contribution.
    """
    if set(inner.p.labels) != set(elim.residual) or inner.p.labels != inner.q.labels:
        raise WitnessPreconditionError(
            f"witness columns {inner.p.labels} differ from residual {sorted(elim.residual)}"
        )
    if len(inner.rhs) != A.m:
        raise WitnessPreconditionError(f"witness rhs has {len(inner.rhs)} rows, matrix has {A.m}")
    if not elim.order:
        return inner

    xe = {k: 1 if rule is ElimRule.POSITIVE_ISOLATED else 0 for k, rule in elim.order}
    zeta = {k: _full(xe[k], d) for k in xe}
    rhs = tuple(
        b + sum((A.entry(i, k) * zeta[k] for k in xe), Fraction(0))
        for i, b in enumerate(inner.rhs)
    )

    def merge(pt: Point) -> Point:
        vals = {**pt.as_dict(), **zeta}
        return Point.of([vals[lab] for lab in A.labels], A.labels)

    # fixing eliminated coordinates keeps the residual neighbours infeasible,
    # but moving an eliminated coordinate may stay feasible, so isolation is dropped
    return DisconnectWitness(
        rhs, merge(inner.p), merge(inner.q), None, f"Lifted({inner.construction})"
    )


def find_witness(A: CoeffMatrix, d: int) -> WitnessSearch:
    """Decide which construction applies to ``A`` and run it.

    Status ``"eo"`` means ``A`` has an elimination ordering, so no witness
    exists. ``"unknown"`` covers at least four rows with at least three
    residual columns, where no construction is known.
    """
    elim = run_algorithm1(A)
    if elim.has_eo:
        return WitnessSearch("eo", elim)
    Ar = eliminate(A, elim.eliminated)
    if A.m == 2:
        inner = two_row_witness(Ar, d)
    elif A.m == 3:
        inner = three_row_witness(Ar, d)
    elif Ar.n == 2:
        inner = two_column_witness(Ar, d)
    else:
        return WitnessSearch("unknown", elim)
    return WitnessSearch("witness", elim, lift_expansion(A, elim, inner, d))


def counterexample_matrix(m: int, n: int) -> CoeffMatrix:
    """The 4 x 3 matrix with no EO but connected graphs for every b, zero-padded to m x n."""
    if m < 4 or n < 3:
        raise ValueError(f"counterexample needs m >= 4 and n >= 3, got ({m}, {n})")
    rows = [list(r) + [0] * (n - 3) for r in EQ1_ROWS]
    rows += [[0] * n for _ in range(m - 4)]
    return CoeffMatrix.from_rows(rows)


def lemma1_path(s: Point, t: Point) -> list[Point]:
    """Coordinate path s -> (s1,t2,s3) -> (t1,t2,s3) -> t for the 4 x 3 counterexample.

    The caller orders the pair so that ``s[0] >= t[0]``; consecutive
    duplicates are dropped.
    """
    if len(s) != 3 or len(t) != 3:
        raise ValueError("the path is defined for 3-coordinate points only")
    if s.labels != t.labels:
        raise ValueError("points have different labels")
    s1, s2, s3 = s.coords
    t1, t2, t3 = t.coords
    path = [s]
    for c in ((s1, t2, s3), (t1, t2, s3), t.coords):
        if c != path[-1].coords:
            path.append(Point(tuple(c), s.labels))
    return path
