from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from skewgalois.errors import Inconclusive, NotInvertible
from skewgalois.normform import (NormForm, NormFormError, QuaternionSymbol, hamilton,
                                 has_only_trivial_zero, is_division_algebra, norm_form,
                                 quaternion_algebra, reduce_zero_ratfunc, reduce_zero_series,
                                 series_vector)
from skewgalois.poly import Poly
from skewgalois.ratfunc import KT
from skewgalois.series import SeriesPrecisionError, TruncSeries
from skewgalois.structalg import diagonal_algebra, matrix_algebra, matrix_unit, verify_structure

import oracles

SYMBOLS = [(-1, -1), (-1, -3), (1, 1), (2, 3), (-2, 5), (3, -7), (Fraction(1, 2), 5),
           (-5, Fraction(-2, 3)), (7, 11), (-1, 2)]


def test_quaternion_examples():
    assert quaternion_algebra(-1, -1) == hamilton()
    A = quaternion_algebra(1, 1)
    x, y = A.element([1, 1, 0, 0]), A.element([1, -1, 0, 0])
    assert not (x * y)
    assert verify_structure(quaternion_algebra(-1, -3))
    with pytest.raises(ValueError):
        QuaternionSymbol(0, 1)


def test_hamilton_norm_form():
    F = norm_form(hamilton())
    assert F.coeffs == oracles.quaternion_norm(-1, -1)
    assert F.format() == "x1^2 + x2^2 + x3^2 + x4^2"


@pytest.mark.parametrize("a,b", SYMBOLS)
def test_quaternion_norm_forms(a, b):
    A = quaternion_algebra(a, b)
    F = norm_form(A)
    assert F.coeffs == oracles.quaternion_norm(a, b)
    assert F(A.unit) == 1


@pytest.mark.parametrize("A", [hamilton(), quaternion_algebra(2, 3), matrix_algebra(2),
                               matrix_algebra(3)], ids=["H", "(2,3)", "M2", "M3"])
def test_norm_form_is_root_of_regular_determinant(A):
    F = norm_form(A)
    det, xs = oracles.regular_determinant(A)
    n = F.degree
    assert sympy.expand(oracles.form_expr(F, xs) ** n - det) == 0


def test_matrix_norm_form_is_determinant():
    F = norm_form(matrix_algebra(2))
    assert F.coeffs == {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}
    assert F(matrix_algebra(2).unit) == 1


def test_norm_form_rejects_non_csa():
    with pytest.raises(NormFormError):
        norm_form(diagonal_algebra(2))
    with pytest.raises(NormFormError):
        norm_form(diagonal_algebra(4))


def test_cleared_form():
    F = norm_form(quaternion_algebra(Fraction(1, 2), 5))
    scalar, ints = F.cleared()
    assert all(isinstance(c, int) for c in ints.values())
    assert {e: scalar * c for e, c in ints.items()} == F.coeffs


def test_division_algebra_examples():
    assert is_division_algebra(hamilton())
    verdict = is_division_algebra(quaternion_algebra(1, 1))
    assert not verdict and verdict.witness == (1, 1, 0, 0)
    M2 = matrix_algebra(2)
    verdict = is_division_algebra(M2)
    assert not verdict
    F = norm_form(M2)
    assert F(verdict.witness) == 0 and any(verdict.witness)
    assert F(matrix_unit(2, 1, 2).coords) == 0


def test_division_algebra_inconclusive():
    # (2,5) has no rational zero of small height and is indefinite
    with pytest.raises(Inconclusive):
        is_division_algebra(quaternion_algebra(2, 5), radius=2)


def test_anisotropic_binary_form():
    F = NormForm({(2, 0): 1, (0, 2): -2}, 2, 2)
    assert has_only_trivial_zero(F)


def test_reduce_zero_ratfunc_examples():
    F = norm_form(matrix_algebra(2))
    t = KT.gen()
    assert reduce_zero_ratfunc(F, [t, 1, t**2, t]) == (0, 1, 0, 0)
    z = [t, t**2, 1 / (t + 1), t / (t + 1)]
    out = reduce_zero_ratfunc(F, z)
    assert F(out) == 0 and any(out)
    assert reduce_zero_ratfunc(F, [t * c for c in z]) == out


def test_reduce_zero_ratfunc_rejects_non_zero():
    F = NormForm({(2, 0): 1, (0, 2): 1}, 2, 2)
    with pytest.raises(ValueError):
        reduce_zero_ratfunc(F, [KT.one, KT.gen()])
    with pytest.raises(ValueError):
        reduce_zero_ratfunc(F, [KT.zero, KT.zero])


def test_reduce_zero_series_examples():
    F = norm_form(matrix_algebra(2))
    a, b = Poly([1, 1]), Poly([1, -1])
    z = series_vector([a, b, a, b], 8)
    assert reduce_zero_series(F, z) == (1, 1, 1, 1)
    tz = [s.shift(1) for s in z]
    assert reduce_zero_series(F, tz) == (1, 1, 1, 1)


def test_reduce_zero_series_definite_form():
    F = norm_form(hamilton())
    z = series_vector([Poly([1]), Poly([0, 1]), Poly([]), Poly([])], 6)
    with pytest.raises(ValueError):
        reduce_zero_series(F, z)


def test_reduce_zero_series_precision_exhausted():
    F = norm_form(matrix_algebra(2))
    z = [TruncSeries([0, 0, 0], 3)] * 3 + [TruncSeries([], 3, 3)]
    with pytest.raises((ValueError, SeriesPrecisionError)):
        reduce_zero_series(F, z)


small = st.fractions(min_value=-4, max_value=4, max_denominator=3)
vec = st.lists(small, min_size=4, max_size=4)


@settings(max_examples=40, deadline=None)
@given(vec, vec, st.sampled_from([(-1, -1), (2, 3), (1, 1)]))
def test_norm_is_multiplicative(a, b, sym):
    A = quaternion_algebra(*sym)
    F = norm_form(A)
    x, y = A.element(a), A.element(b)
    assert F((x * y).coords) == F(x.coords) * F(y.coords)


@settings(max_examples=40, deadline=None)
@given(vec)
def test_invertible_iff_norm_nonzero(a):
    for A in (quaternion_algebra(1, 1), matrix_algebra(2)):
        F = norm_form(A)
        x = A.element(a)
        try:
            A.inverse(x)
            invertible = True
        except NotInvertible:
            invertible = False
        assert invertible == (F(x.coords) != 0)


@settings(max_examples=15, deadline=None)
@given(st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=4, max_size=4))
def test_invertible_iff_norm_nonzero_over_kt(cs):
    A = matrix_algebra(2).over(KT)
    F = norm_form(matrix_algebra(2)).map_coeffs(KT.convert, KT)
    x = [KT.convert(Poly(c)) for c in cs]
    try:
        A.inverse(x)
        invertible = True
    except NotInvertible:
        invertible = False
    assert invertible == bool(F(x))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2),
       st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_reduce_zero_ratfunc_output_is_zero(u, v):
    # (p*r, p*s, q*r, q*s) is a zero of x1x4 - x2x3 for any p, q, r, s
    p, qq = KT.convert(Poly(u)), KT.convert(Poly(v))
    r, s = KT.gen() + 1, KT.gen() ** 2
    z = [p * r, p * s, qq * r, qq * s]
    if not any(z):
        return
    F = norm_form(matrix_algebra(2))
    out = reduce_zero_ratfunc(F, z)
    assert F(out) == 0 and any(out)
