"""Column elimination, elimination orderings and the greedy residual split."""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from ilsconn.matrix import CoeffMatrix

DEFAULT_EO_CAP = 6


class ElimRule(enum.Enum):
    # rows with a positive entry in the column are zero elsewhere
    POSITIVE_ISOLATED = "i"
    # rows with a negative entry in the column are zero elsewhere
    NEGATIVE_ISOLATED = "ii"


@dataclass(frozen=True)
class EliminationResult:
    order: tuple[tuple[int, ElimRule], ...]
    residual: frozenset[int]

    @property
    def has_eo(self) -> bool:
        return not self.residual

    @property
    def eliminated(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.order)

    def rule_of(self, label: int) -> ElimRule:
        for j, rule in self.order:
            if j == label:
                return rule
        raise KeyError(label)


def _isolated(A: CoeffMatrix, k: int, sign: int) -> bool:
    for row in A.rows:
        v = row[k]
        if (v > 0 if sign > 0 else v < 0) and any(w for c, w in enumerate(row) if c != k):
            return False
    return True


def can_eliminate_at(A: CoeffMatrix, j: int) -> ElimRule | None:
    """Rule under which column ``j`` can be eliminated in ``A``, or None.

    Other entries are inspected only within the columns still present in
    ``A``. Condition (i) wins when both hold.
    """
    k = A.position(j)
    if _isolated(A, k, +1):
        return ElimRule.POSITIVE_ISOLATED
    if _isolated(A, k, -1):
        return ElimRule.NEGATIVE_ISOLATED
    return None


def eliminable_columns(A: CoeffMatrix) -> list[tuple[int, ElimRule]]:
    out = []
    for j in A.labels:
        rule = can_eliminate_at(A, j)
        if rule is not None:
            out.append((j, rule))
    return out


def eliminate(A: CoeffMatrix, J: Iterable[int]) -> CoeffMatrix:
    J = set(J)
    unknown = J - set(A.labels)
    if unknown:
        raise KeyError(f"cannot eliminate unknown columns {sorted(unknown)}")
    return A.restrict(j for j in A.labels if j not in J)


def run_algorithm1(
    A: CoeffMatrix,
    choose: Callable[[Sequence[tuple[int, ElimRule]]], tuple[int, ElimRule]] | None = None,
) -> EliminationResult:
    """Greedily eliminate columns until none is eliminable.

    ``choose`` picks among the currently eliminable ``(label, rule)`` pairs;
    the default takes the smallest label.
    """
    current = A
    order: list[tuple[int, ElimRule]] = []
    while current.n:
        cands = eliminable_columns(current)
        if not cands:
            break
        pick = cands[0] if choose is None else choose(cands)
        order.append(pick)
        current = eliminate(current, [pick[0]])
    return EliminationResult(tuple(order), frozenset(current.labels))


def random_chooser(rng: random.Random):
    return lambda cands: rng.choice(list(cands))


def is_elimination_ordering(A: CoeffMatrix, seq: Sequence[int]) -> bool:
    if sorted(seq) != sorted(A.labels):
        return False
    current = A
    for j in seq:
        if can_eliminate_at(current, j) is None:
            return False
        current = eliminate(current, [j])
    return True


def has_eo_exhaustive(A: CoeffMatrix, cap: int = DEFAULT_EO_CAP) -> bool:
    """Try every column permutation; independent of the greedy procedure."""
    if A.n > cap:
        raise ValueError(f"exhaustive EO search refused: {A.n} columns exceeds cap {cap}")
    return any(is_elimination_ordering(A, perm) for perm in itertools.permutations(A.labels))
