"""Shared algebra fleet and subalgebra catalogue."""

from skewgalois.linalg import Subspace
from skewgalois.normform import hamilton, quaternion_algebra
from skewgalois.poly import Poly
from skewgalois.structalg import (diagonal_algebra, matrix_algebra, simple_extension_algebra,
                                  upper_triangular)


def rational_field():
    return simple_extension_algebra(Poly([0, 1]))


def fleet():
    return {
        "hamilton": hamilton(),
        "quat(-1,-3)": quaternion_algebra(-1, -3),
        "M2": matrix_algebra(2),
        "QxQ": diagonal_algebra(2),
        "T2": upper_triangular(),
    }


def span(A, *vectors):
    return Subspace([tuple(A.field.convert(c) for c in v) for v in vectors], A.dim, A.field)


def catalogue(name, A):
    """Unital subalgebras of each fleet member."""
    one = A.unit
    subs = [span(A, one), Subspace.full(A.dim, A.field)]
    if name in ("hamilton", "quat(-1,-3)"):
        subs.append(span(A, one, (0, 1, 0, 0)))
        subs.append(span(A, one, (0, 0, 1, 0)))
    if name == "M2":
        subs.append(span(A, (1, 0, 0, 0), (0, 0, 0, 1)))
        subs.append(span(A, (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1)))
    if name == "T2":
        subs.append(span(A, (1, 0, 0), (0, 0, 1)))
    return subs


CENTRAL_SIMPLE = ["hamilton", "quat(-1,-3)", "M2"]
