import pytest
import sympy

from bosonorder.realline import (
    QUADRATURE_SPLITTINGS,
    TENSOR_REALIZATIONS,
    RealPoly,
    TensorPoly,
    hermite_basis,
    quadrature_decomposition_check,
    realline_apply,
)
from bosonorder.parsing import parse_function

x = RealPoly.x()
one = RealPoly.constant(1)


def test_examples():
    assert realline_apply("a", RealPoly({2: 1})) == RealPoly({1: 2})
    assert realline_apply("a*", one) == x
    assert hermite_basis(2) == RealPoly({2: 1, 0: -1}).scale(1 / sympy.sqrt(2))


def test_vacuum_annihilated():
    assert realline_apply("a", one).is_zero()


@pytest.mark.parametrize("n", range(8))
def test_number_eigenvectors(n):
    e = hermite_basis(n)
    assert realline_apply("N", e) == e.scale(n)
    if n:
        assert realline_apply("a", e) == hermite_basis(n - 1).scale(sympy.sqrt(n))


@pytest.mark.parametrize("f", [one, x, RealPoly({3: 2, 1: -1}), hermite_basis(4)])
def test_canonical_commutators(f):
    qp = realline_apply("q", realline_apply("p", f)) - realline_apply("p", realline_apply("q", f))
    assert qp == f.scale(sympy.I)
    aad = realline_apply("a", realline_apply("a*", f)) - realline_apply("a*", realline_apply("a", f))
    assert aad == f


def test_decomposition_examples():
    const = TensorPoly.from_function(parse_function("1"))
    assert TENSOR_REALIZATIONS["A"](const).is_zero()
    c1 = TENSOR_REALIZATIONS["C"](const)
    x_, y_ = sympy.symbols("x y")
    assert c1 == TensorPoly(sympy.Poly((x_ + sympy.I * y_) / sympy.sqrt(2), x_, y_).as_dict())
    z = parse_function("z")
    from bosonorder.complexwave import apply_op

    assert TENSOR_REALIZATIONS["B*"](TensorPoly.from_function(z)) == TensorPoly.from_function(apply_op("B*", z))


def test_full_decomposition():
    report = quadrature_decomposition_check(6)
    assert report.passed, report.failures
    assert report.checked == 28 * (len(TENSOR_REALIZATIONS) + len(QUADRATURE_SPLITTINGS))
