"""Exact-rational coefficient matrices, ILS instances and lattice points.

Entries are :class:`fractions.Fraction` values so every feasibility test is
decided without tolerances. Column labels are 1-based and survive column
elimination; rows are addressed by 0-based position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        token = value.strip()
        if not _RATIONAL_RE.match(token):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(token)
    raise TypeError(f"unsupported entry type {type(value).__name__}")


def format_rational(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def sgn(v) -> int:
    if v < 0:
        return -1
    if v > 0:
        return 1
    return 0


@dataclass(frozen=True)
class CoeffMatrix:
    """An m x |labels| matrix whose columns carry their original labels."""

    rows: tuple[tuple[Fraction, ...], ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) < 1:
            raise ValueError("a coefficient matrix needs at least one row")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate column labels {self.labels}")
        for r in self.rows:
            if len(r) != len(self.labels):
                raise ValueError("ragged matrix: row length differs from label count")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], labels: Sequence[int] | None = None) -> "CoeffMatrix":
        conv = tuple(tuple(to_rational(v) for v in r) for r in rows)
        if not conv:
            raise ValueError("a coefficient matrix needs at least one row")
        if labels is None:
            labels = range(1, len(conv[0]) + 1)
        return cls(conv, tuple(labels))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def position(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"column label {label} not in {self.labels}") from None

    def entry(self, i: int, label: int) -> Fraction:
        return self.rows[i][self.position(label)]

    def column(self, label: int) -> tuple[Fraction, ...]:
        k = self.position(label)
        return tuple(r[k] for r in self.rows)

    def restrict(self, labels: Iterable[int]) -> "CoeffMatrix":
        """Submatrix on the given column labels, kept in the matrix's own order."""
        keep = set(labels)
        missing = keep - set(self.labels)
        if missing:
            raise KeyError(f"unknown column labels {sorted(missing)}")
        pos = [k for k, lab in enumerate(self.labels) if lab in keep]
        return CoeffMatrix(
            tuple(tuple(r[k] for k in pos) for r in self.rows),
            tuple(self.labels[k] for k in pos),
        )

    def select_rows(self, indices: Sequence[int]) -> "CoeffMatrix":
        return CoeffMatrix(tuple(self.rows[i] for i in indices), self.labels)

    def permute_columns(self, order: Sequence[int]) -> "CoeffMatrix":
        """Reorder columns so that new position k holds the column labelled ``order[k]``.

        The result is relabelled ``1..n`` so callers can work in canonical
        coordinates; map back through ``order``.
        """
        pos = [self.position(lab) for lab in order]
        return CoeffMatrix(
            tuple(tuple(r[k] for k in pos) for r in self.rows),
            tuple(range(1, len(order) + 1)),
        )

    def sign_pattern(self) -> "CoeffMatrix":
        return CoeffMatrix(
            tuple(tuple(Fraction(sgn(v)) for v in r) for r in self.rows), self.labels
        )

    def scale_row(self, i: int, factor) -> "CoeffMatrix":
        f = to_rational(factor)
        rows = list(self.rows)
        rows[i] = tuple(v * f for v in rows[i])
        return CoeffMatrix(tuple(rows), self.labels)

    def row_dot(self, i: int, coords: Sequence[int]) -> Fraction:
        return sum((a * x for a, x in zip(self.rows[i], coords) if a), Fraction(0))

    def __str__(self) -> str:
        body = "; ".join(" ".join(format_rational(v) for v in r) for r in self.rows)
        return f"[{body}] cols={list(self.labels)}"


@dataclass(frozen=True, order=True)
class Point:
    """A lattice point, one integer coordinate per column label."""

    coords: tuple[int, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != len(self.labels):
            raise ValueError("coordinate count differs from label count")

    @classmethod
    def of(cls, coords: Sequence[int], labels: Sequence[int] | None = None) -> "Point":
        coords = tuple(int(c) for c in coords)
        if labels is None:
            labels = range(1, len(coords) + 1)
        return cls(coords, tuple(labels))

    def __getitem__(self, label: int) -> int:
        return self.coords[self.labels.index(label)]

    def __len__(self) -> int:
        return len(self.coords)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.labels, self.coords))

    def in_domain(self, d: int) -> bool:
        return all(0 <= c <= d for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coords)) + ")"


@dataclass(frozen=True)
class IlsInstance:
    """The system ``A x >= b`` over ``x in {0, ..., d}^n``."""

    matrix: CoeffMatrix
    rhs: tuple[Fraction, ...]
    d: int

    def __post_init__(self):
        if len(self.rhs) != self.matrix.m:
            raise ValueError(f"rhs has {len(self.rhs)} entries for {self.matrix.m} rows")
        if self.d < 1:
            raise ValueError("d must be a positive integer")

    @classmethod
    def of(cls, matrix: CoeffMatrix, rhs: Sequence, d: int) -> "IlsInstance":
        return cls(matrix, tuple(to_rational(v) for v in rhs), int(d))


def hamming(x: Point, y: Point) -> int:
    if x.labels != y.labels:
        raise ValueError(f"label sets differ: {x.labels} vs {y.labels}")
    return sum(1 for a, b in zip(x.coords, y.coords) if a != b)


def is_feasible(inst: IlsInstance, x: Point) -> bool:
    A = inst.matrix
    if x.labels != A.labels:
        raise ValueError(f"point labels {x.labels} do not match matrix columns {A.labels}")
    return all(A.row_dot(i, x.coords) >= inst.rhs[i] for i in range(A.m))


class MatrixParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str) -> Iterable[tuple[int, list[tuple[int, str]]]]:
    """Yield (line number, [(column, token)]) for non-blank lines, comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(mt.start() + 1, mt.group()) for mt in re.finditer(r"\S+", line)]
        if toks:
            yield lineno, toks


def parse_matrix_text(text: str) -> tuple[CoeffMatrix, int]:
    """Parse the ``m n d`` header format; returns the matrix and its d."""
    lines = list(_tokens(text))
    if not lines:
        raise MatrixParseError("empty input, expected header 'm n d'", 1)
    lineno, header = lines[0]
    if len(header) != 3:
        raise MatrixParseError(f"header needs 3 integers 'm n d', got {len(header)} fields", lineno)
    dims = []
    for col, tok in header:
        if not re.fullmatch(r"\d+", tok):
            raise MatrixParseError(f"header field {tok!r} is not a non-negative integer", lineno, col)
        dims.append(int(tok))
    m, n, d = dims
    if m < 1:
        raise MatrixParseError("m must be at least 1", lineno, header[0][0])
    if d < 1:
        raise MatrixParseError("d must be at least 1", lineno, header[2][0])
    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else lineno
        raise MatrixParseError(f"expected {m} matrix rows, found {len(body)}", last + (len(body) < m))
    rows = []
    for rl, toks in body:
        if len(toks) != n:
            raise MatrixParseError(f"expected {n} entries, found {len(toks)}", rl, toks[0][0])
        row = []
        for col, tok in toks:
            if not _RATIONAL_RE.match(tok):
                raise MatrixParseError(f"bad rational {tok!r}", rl, col)
            if "/" in tok and int(tok.split("/")[1]) == 0:
                raise MatrixParseError(f"zero denominator in {tok!r}", rl, col)
            row.append(Fraction(tok))
        rows.append(tuple(row))
    return CoeffMatrix(tuple(rows), tuple(range(1, n + 1))), d


def format_matrix_text(A: CoeffMatrix, d: int, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"{A.m} {A.n} {d}")
    for r in A.rows:
        out.append(" ".join(format_rational(v) for v in r))
    return "\n".join(out) + "\n"


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """Parse a comma- or whitespace-separated list of rationals."""
    toks = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    return tuple(to_rational(t) for t in toks)
