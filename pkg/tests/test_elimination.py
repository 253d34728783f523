import itertools
import random

import pytest

import brute
from ilsconn import (
    CoeffMatrix,
    ElimRule,
    can_eliminate_at,
    eliminate,
    has_eo_exhaustive,
    run_algorithm1,
)
from ilsconn.elimination import random_chooser

I2 = CoeffMatrix.from_rows([[1, 0], [0, 1]])
# the 4x3 example plus a zero row and a zero column; brute force: no EO, only column 4 eliminable
EQ1_PADDED = CoeffMatrix.from_rows(
    [[1, 1, 0, 0], [1, -1, 0, 0], [-1, 0, 1, 0], [-1, 0, -1, 0], [0, 0, 0, 0]]
)


def test_identity_column_is_positive_isolated():
    assert can_eliminate_at(I2, 1) is ElimRule.POSITIVE_ISOLATED


@pytest.mark.parametrize("j", [1, 2, 3])
def test_eq1_has_no_eliminable_column(eq1, j):
    assert can_eliminate_at(eq1, j) is None


def test_zero_column_prefers_rule_i():
    A = CoeffMatrix.from_rows([[1, 0], [-1, 0]])
    assert can_eliminate_at(A, 2) is ElimRule.POSITIVE_ISOLATED


def test_rule_ii_when_only_negatives_are_isolated():
    A = CoeffMatrix.from_rows([[1, 1], [-1, 0]])
    assert can_eliminate_at(A, 1) is ElimRule.NEGATIVE_ISOLATED


def test_unknown_label():
    with pytest.raises(KeyError):
        can_eliminate_at(I2, 3)


def test_eliminate():
    assert eliminate(I2, []) == I2
    e = eliminate(I2, {1})
    assert e.labels == (2,) and e.rows == ((0,), (1,))


def test_eliminate_everything(eq1):
    e = eliminate(eq1, {1, 2, 3})
    assert e.shape == (4, 0)


def test_algorithm1_identity():
    res = run_algorithm1(I2)
    assert res.has_eo
    assert res.order == ((1, ElimRule.POSITIVE_ISOLATED), (2, ElimRule.POSITIVE_ISOLATED))
    assert res.residual == frozenset()


def test_algorithm1_eq1(eq1):
    res = run_algorithm1(eq1)
    assert not res.has_eo and res.residual == {1, 2, 3} and res.order == ()


def test_algorithm1_padded_eq1():
    res = run_algorithm1(EQ1_PADDED)
    assert not res.has_eo
    assert res.residual == {1, 2, 3}
    assert res.eliminated == (4,)
    assert not has_eo_exhaustive(EQ1_PADDED)


def test_exhaustive_examples(eq1, swap2):
    assert has_eo_exhaustive(I2)
    assert not has_eo_exhaustive(eq1)
    assert not has_eo_exhaustive(swap2)


def test_exhaustive_cap():
    A = CoeffMatrix.from_rows([[0] * 7])
    with pytest.raises(ValueError, match="cap"):
        has_eo_exhaustive(A)
    assert has_eo_exhaustive(A, cap=7)


def _corpus(m, n):
    for rows in brute.sign_matrices(m, n):
        yield CoeffMatrix.from_rows(rows)


@pytest.mark.parametrize("m, n", [(1, 3), (2, 3), (3, 3)])
def test_monotonicity_of_eliminability(m, n):
    for A in _corpus(m, n):
        for j in A.labels:
            if can_eliminate_at(A, j) is None:
                continue
            for other in A.labels:
                if other != j:
                    assert can_eliminate_at(eliminate(A, [other]), j) is not None


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 3)])
def test_confluence_under_random_order(m, n):
    rng = random.Random(1234)
    for A in _corpus(m, n):
        ref = run_algorithm1(A).residual
        for _ in range(5):
            assert run_algorithm1(A, random_chooser(rng)).residual == ref


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)])
def test_agreement_with_brute_force(m, n):
    for A in _corpus(m, n):
        res = run_algorithm1(A)
        assert res.has_eo == has_eo_exhaustive(A) == brute.has_eo(brute.rows_of(A), n)
        assert len(res.residual) != 1


def test_sign_pattern_invariance():
    rng = random.Random(7)
    mags = [1, 2, 3, 5]
    for rows in brute.sign_matrices(3, 3):
        A = CoeffMatrix.from_rows(rows)
        B = CoeffMatrix.from_rows([[v * rng.choice(mags) for v in r] for r in rows])
        assert run_algorithm1(A).has_eo == run_algorithm1(B).has_eo
        assert B.sign_pattern() == A


def test_recorded_rules_are_valid():
    for rows in itertools.islice(brute.sign_matrices(3, 3), 0, None, 7):
        A = CoeffMatrix.from_rows(rows)
        current = A
        for j, rule in run_algorithm1(A).order:
            assert can_eliminate_at(current, j) is rule
            current = eliminate(current, [j])
