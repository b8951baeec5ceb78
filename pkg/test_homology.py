"""
Cellular homology over Z, Q and Z/p
"""
import pytest

from bordlab.complex import Complex
from bordlab.errors import ValidationError
from bordlab.homology import chain_complex, homology, invariant_factors
from bordlab.reports import format_homology
from sympy import Matrix


def test_w158_integral_homology(w158):
    report = homology(w158)
    assert (report.h0, report.h1) == (1, 1)
    assert report.torsion == [3, 3]
    assert format_homology(report).splitlines()[1] == "H1 = Z^1 (+) Z/3 (+) Z/3"


def test_v23_homology(v23):
    integral = homology(v23)
    assert integral.h1 == 1
    assert integral.torsion == [3]
    assert homology(v23, 0).h1 == 1
    assert homology(v23, 2).h1 > 0
    assert homology(v23, 3).h1 == 2


@pytest.mark.parametrize("name", ['v23', 'xprime', 'xpp', 'w158'])
@pytest.mark.parametrize("p", [None, 0, 2, 3])
def test_betti_numbers_sum_to_euler_characteristic(corpus, name, p):
    c = corpus[name]
    report = homology(c, p)
    assert report.h0 - report.h1 + report.h2 == c.euler_characteristic()
    assert report.h0 == 1


@pytest.mark.parametrize("name", ['v23', 'xprime', 'xpp', 'w158'])
def test_boundary_of_boundary_vanishes(corpus, name):
    assert chain_complex(corpus[name]).is_complex()


def test_field_coefficients_carry_no_torsion(w158):
    assert homology(w158, 3).torsion == []
    assert homology(w158, 0).coefficients == 'Q'
    assert format_homology(homology(w158, 2)).startswith("H0 = (Z/2)^1")


def test_composite_modulus_rejected(v23):
    with pytest.raises(ValidationError):
        homology(v23, 4)


def test_invariant_factors():
    assert invariant_factors(Matrix([[2, 4], [6, 8]])) == [2, 4]
    assert invariant_factors(Matrix([[0, 0], [0, 0]])) == []
    assert invariant_factors(Matrix([[3, 0], [0, 3]])) == [3, 3]


def test_sphere_from_two_triangles():
    sphere = Complex([[1, 2, 3], [-3, -2, -1]])
    report = homology(sphere)
    assert (report.h0, report.h1, report.h2) == (1, 0, 1)
    assert report.torsion == []
