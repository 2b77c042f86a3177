import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kostka_shoji.errors import InvalidInput, NonPolynomialError, SingularBlockError
from kostka_shoji.exact import (CyclotomicScalar, FieldMatrix, GradedPolynomial,
                                RationalFunction, cyclotomic_polynomial, matrix_inverse,
                                matrix_mul, series_expand, totient)


def gp(*coeffs):
    return GradedPolynomial.from_dense(list(coeffs))


def rf(num, den=(1,), order=1):
    return RationalFunction(tuple(num), tuple(den), order)


def as_complex(x):
    """Numerical image of a cyclotomic scalar under zeta -> exp(2 pi i / l)."""
    z = cmath.exp(2j * cmath.pi / x.order)
    return sum(float(c) * z ** k for k, c in enumerate(x.coeffs))


# -- graded polynomials -------------------------------------------------------------------

def test_polynomial_arithmetic_examples():
    assert gp(1, 1) * gp(1, -1) == gp(1, 0, -1)
    assert gp(1, 1) + gp(-1, -1) == GradedPolynomial()
    assert not GradedPolynomial()
    assert gp(0, 0, 3).degree == 2 and gp(0, 0, 3).valuation == 2


def test_polynomial_formatting_and_json():
    p = gp(0, 1, 0, 1)
    assert str(p) == "q + q^3"
    assert p.latex() == "q+q^3"
    assert gp(0, 0, 2).latex() == "2q^2"
    assert GradedPolynomial.monomial(12).latex() == "q^{12}"
    assert p.to_json() == {"1": "1", "3": "1"}
    half = GradedPolynomial({0: Fraction(1, 2), 2: -3})
    assert half.to_json() == {"0": "1/2", "2": "-3"}
    assert GradedPolynomial.from_json(half.to_json()) == half


def test_polynomial_predicates():
    assert gp(1, 2).is_nonnegative_integral()
    assert not gp(1, -1).is_nonnegative_integral()
    assert not GradedPolynomial({0: Fraction(1, 2)}).is_nonnegative_integral()
    assert gp(3, 1).is_monic() and not gp(1, 2).is_monic()


# -- rational functions -------------------------------------------------------------------

def test_rational_function_examples():
    assert rf((1, 0, -1), (1, -1)) == rf((1, 1))
    assert rf((0, 1, 1), (0, 1)) == rf((1, 1))
    assert rf((1, 0, -1), (1, -1)).is_polynomial()
    assert rf((1, 0, -1), (1, -1)).to_graded() == gp(1, 1)
    with pytest.raises(NonPolynomialError):
        rf((1,), (1, -1)).to_graded()
    with pytest.raises(ZeroDivisionError):
        rf((1,), ())
    with pytest.raises(ZeroDivisionError):
        rf((1,)) / rf(())


def test_denominator_is_monic():
    f = rf((2,), (3, 6))
    assert f.den[-1] == 1
    assert f == rf((Fraction(1, 3),), (Fraction(1, 2), 1))


@pytest.mark.parametrize("f, degree, expected", [
    (rf((1,), (1, -1)), 3, gp(1, 1, 1, 1)),
    (rf((1,), (1, 0, -1)), 4, gp(1, 0, 1, 0, 1)),
    (rf((1, 1), (1, 0, 0, -1)), 5, gp(1, 1, 0, 1, 1)),
])
def test_series_examples(f, degree, expected):
    assert series_expand(f, degree) == expected


def test_series_rejects_pole_at_zero():
    with pytest.raises(InvalidInput):
        series_expand(rf((1,), (0, 1)), 3)


def test_molien_form_series_matches_division():
    # 1/((1-q)(1-q^2)) given both as a hint and as a plain quotient
    plain = rf((1,), (1, -1, -1, 1))
    hinted = RationalFunction((1,), (1, -1, -1, 1), molien_form=((1,), [(1, 1), (1, 2)]))
    assert series_expand(hinted, 10) == series_expand(plain, 10) == gp(
        1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6)


# -- cyclotomic scalars -------------------------------------------------------------------

@pytest.mark.parametrize("ell, coeffs", [(1, [-1, 1]), (2, [1, 1]), (3, [1, 1, 1]),
                                         (4, [1, 0, 1]), (6, [1, -1, 1])])
def test_cyclotomic_polynomials(ell, coeffs):
    assert list(cyclotomic_polynomial(ell)) == coeffs
    assert totient(ell) == len(coeffs) - 1


@pytest.mark.parametrize("ell", range(1, 9))
def test_zeta_has_order_ell(ell):
    z = CyclotomicScalar.zeta_power(1, ell)
    acc = CyclotomicScalar.from_rational(1, ell)
    for k in range(1, ell + 1):
        acc = acc * z
        assert (acc == 1) == (k == ell)
    assert z.conj() == CyclotomicScalar.zeta_power(ell - 1, ell)
    total = sum((CyclotomicScalar.zeta_power(k, ell) for k in range(ell)),
                CyclotomicScalar.from_rational(0, ell))
    assert total == (1 if ell == 1 else 0)


orders = st.integers(min_value=1, max_value=7)
small = st.integers(min_value=-4, max_value=4)


@st.composite
def scalars(draw, order):
    coeffs = draw(st.lists(small, min_size=1, max_size=order + 1))
    return CyclotomicScalar(coeffs, order)


@st.composite
def scalar_triples(draw):
    order = draw(orders)
    return order, draw(scalars(order)), draw(scalars(order)), draw(scalars(order))


@settings(max_examples=400, deadline=None)
@given(scalar_triples())
def test_cyclotomic_field_axioms(data):
    order, a, b, c = data
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b
    # agreement with floating-point evaluation at a primitive root
    assert abs(as_complex(a * b) - as_complex(a) * as_complex(b)) < 1e-9


@settings(max_examples=300, deadline=None)
@given(scalar_triples())
def test_conjugation_is_automorphism(data):
    order, a, b, _ = data
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a
    norm = a * a.conj()
    assert norm.conj() == norm
    if order <= 4 or order == 6:
        # the real subfield is Q exactly when phi(l) <= 2
        assert norm.is_rational()
    assert abs(as_complex(a.conj()) - as_complex(a).conjugate()) < 1e-9


@st.composite
def rational_functions(draw, order=1):
    num = draw(st.lists(small, min_size=1, max_size=4))
    den = draw(st.lists(small, min_size=1, max_size=4))
    den[0] = draw(st.integers(min_value=1, max_value=3))
    return RationalFunction(tuple(num), tuple(den), order)


@settings(max_examples=300, deadline=None)
@given(rational_functions(), rational_functions(), rational_functions())
def test_function_field_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    if f:
        assert f * f.inverse() == 1
    assert series_expand(f + g, 8) == series_expand(f, 8) + series_expand(g, 8)
    assert series_expand(f * g, 8) == (series_expand(f, 8) * series_expand(g, 8)).truncate(8)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=6).flatmap(
    lambda ell: st.tuples(st.just(ell), scalars(ell), scalars(ell))))
def test_cyclotomic_rational_functions(data):
    ell, a, b = data
    f = RationalFunction((a, b), (1, CyclotomicScalar.zeta_power(1, ell)), ell)
    if f:
        assert f * f.inverse() == 1
    g = f * f.conj()
    assert g.conj() == g
    if g.is_rational():
        assert g.rational() == g


def test_rational_function_json():
    f = rf((1, 1), (1, 0, -1))
    assert f == rf((1,), (1, -1))
    assert f.to_json() == {"field_order": 1, "num": [["-1"]], "den": [["-1"], ["1"]]}


# -- matrices ---------------------------------------------------------------------------

def _matrix(rows):
    labels = list(range(len(rows)))
    return FieldMatrix(labels, labels, [[x if isinstance(x, RationalFunction) else rf((x,))
                                         for x in r] for r in rows])


def test_identity_product():
    m = _matrix([[rf((1, 2)), 3], [rf((1,), (1, -1)), 0]])
    ident = FieldMatrix.identity(m.rows)
    assert matrix_mul(ident, m) == m
    assert m @ ident == m


def test_inverse_examples():
    one_by_one = _matrix([[rf((1,), (1, -1))]])
    assert matrix_inverse(one_by_one) == _matrix([[rf((1, -1))]])
    q = rf((0, 1))
    two = _matrix([[1, q], [q, 1]])
    scale = rf((1,), (1, 0, -1))
    expected = _matrix([[scale, -q * scale], [-q * scale, scale]])
    inv = matrix_inverse(two)
    assert inv == expected
    assert two @ inv == FieldMatrix.identity(two.rows)


def test_singular_inverse_names_block():
    with pytest.raises(SingularBlockError) as info:
        matrix_inverse(_matrix([[1, 2], [2, 4]]), label="a=3")
    assert info.value.details["block"] == "a=3"
