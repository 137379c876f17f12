"""Centers and commutants in tensor products; simplicity of tensor products."""

from itertools import product

import pytest

from skewgalois.normform import hamilton, quaternion_algebra
from skewgalois.poly import Poly
from skewgalois.structalg import (center, commutant, diagonal_algebra, is_simple,
                                  matrix_algebra, simple_extension_algebra, tensor)

from fleet import CENTRAL_SIMPLE, catalogue, fleet, rational_field

FLEET = fleet()
PAIRS = [(a, b) for a, b in product(FLEET, repeat=2) if FLEET[a].dim * FLEET[b].dim <= 16]


def test_fleet_has_enough_pairs():
    assert len(PAIRS) >= 6


@pytest.mark.parametrize("a,b", PAIRS)
def test_center_of_tensor(a, b):
    A, B = FLEET[a], FLEET[b]
    assert center(tensor(A, B)) == center(A).tensor(center(B))


@pytest.mark.parametrize("a,b", [p for p in PAIRS if FLEET[p[0]].dim * FLEET[p[1]].dim <= 12]
                         + [("hamilton", "M2")])
def test_commutant_of_tensor(a, b):
    A, B = FLEET[a], FLEET[b]
    AB = tensor(A, B)
    for C, D in product(catalogue(a, A), catalogue(b, B)):
        expected = commutant(A, C).tensor(commutant(B, D))
        assert commutant(AB, C.tensor(D)) == expected


def simple_fleet():
    return {
        "hamilton": hamilton(),
        "quat(-1,-3)": quaternion_algebra(-1, -3),
        "M2": matrix_algebra(2),
        "Q": rational_field(),
        "Q(sqrt2)": simple_extension_algebra(Poly([-2, 0, 1])),
        "Q(cbrt2)": simple_extension_algebra(Poly([-2, 0, 0, 1])),
    }


SIMPLE = simple_fleet()


@pytest.mark.parametrize("csa,a", list(product(CENTRAL_SIMPLE, SIMPLE)))
def test_tensor_of_simple_is_simple(csa, a):
    assert is_simple(tensor(FLEET[csa], SIMPLE[a]))


@pytest.mark.parametrize("csa", CENTRAL_SIMPLE)
def test_tensor_with_product_is_not_simple(csa):
    assert not is_simple(tensor(FLEET[csa], diagonal_algebra(2)))
