from math import factorial

import numpy as np
import pytest
from oracles import monomial, poly_matrix, raw_ladder
from scipy.special import eval_genlaguerre

from bosonorder import ccr, fock
from bosonorder.ccr import OperatorPoly, anti_wick_direct, mul
from bosonorder.errors import DimensionError, QuadratureOrderError, SymbolError, TruncationError
from bosonorder.parsing import parse_function, parse_operator
from bosonorder.quadrature import gauss_hermite_grid

fn = parse_function


@pytest.fixture(scope="module")
def grid():
    return gauss_hermite_grid(64)


def random_points(rng, count, radius=1.5):
    r = radius * np.sqrt(rng.random(count))
    return r * np.exp(2j * np.pi * rng.random(count))


def test_ladder_examples():
    a, ad = fock.ladder(2)
    assert np.array_equal(a.entries, np.array([[0, 1], [0, 0]]))
    a, ad = fock.ladder(6)
    assert np.allclose((ad @ a).entries, np.diag(np.arange(6)))
    comm = (a @ ad).entries - (ad @ a).entries
    assert np.allclose(comm[:5, :5], np.eye(5))
    assert comm[5, 5] == pytest.approx(-5)
    with pytest.raises(DimensionError):
        fock.ladder(1)


def test_eval_poly_examples():
    assert np.allclose(fock.eval_poly(parse_operator("A*A"), (4,)).entries, np.diag(np.arange(4)))
    lhs = fock.eval_poly(parse_operator("A*^2 A^2 + 4 A*A + 2"), (12,))
    a, ad = raw_ladder(12)
    rhs = fock.FockMatrix(a @ a @ ad @ ad, (12,), 4)
    assert fock.safe_max_error(lhs, rhs) < 1e-12


def test_eval_poly_matches_oracle_multimode():
    p = parse_operator("(2 - i) A*^2 B + A B* - 1/3", 2)
    assert np.allclose(fock.eval_poly(p, (5, 4)).entries, poly_matrix(p, (5, 4)))
    with pytest.raises(DimensionError):
        fock.eval_poly(p, (5,))


@pytest.mark.parametrize("seed", range(5))
def test_safe_block_homomorphism(seed):
    rng = np.random.default_rng(seed)

    def random_op():
        terms = {}
        for _ in range(3):
            j, k = rng.integers(0, 5, size=2)
            terms[((0, int(j), int(k)),)] = complex(*rng.integers(-3, 4, size=2))
        return OperatorPoly(terms, 1)

    p, q = random_op(), random_op()
    dim = 16 + p.degree() + q.degree()
    prod = fock.eval_poly(p, (dim,)) @ fock.eval_poly(q, (dim,))
    err = fock.safe_max_error(prod, fock.eval_poly(mul(p, q), (dim,)))
    scale = max(1.0, np.max(np.abs(prod.safe_block())))
    assert err / scale < 1e-12
    adj = fock.eval_poly(p, (dim,)).adjoint()
    assert fock.safe_max_error(adj, fock.eval_poly(p.adjoint(), (dim,))) / scale < 1e-12


def test_exponential_vector_examples():
    v = fock.exponential_vector(0, 40).entries
    assert v[0] == 1 and not np.any(v[1:])
    e1 = fock.exponential_vector(1, 40).entries
    assert np.vdot(e1, e1).real == pytest.approx(np.e, abs=1e-10)
    a, _ = fock.ladder(40)
    residual = a.entries @ e1 - e1
    assert np.linalg.norm(residual[:39]) <= 1e-10


def test_exponential_vector_overlap(rng):
    for alpha, beta in zip(random_points(rng, 5), random_points(rng, 5)):
        va = fock.exponential_vector(alpha, 40).entries
        vb = fock.exponential_vector(beta, 40).entries
        assert np.vdot(va, vb) == pytest.approx(np.exp(np.conj(alpha) * beta), rel=1e-12)


def test_exponential_vector_tail_guard():
    with pytest.raises(TruncationError):
        fock.exponential_vector(3.0, 10)


def test_multimode_exponential_vector():
    v = fock.multimode_exponential_vector([0.5, -0.2j], 20)
    assert np.vdot(v.entries, v.entries).real == pytest.approx(np.exp(0.25 + 0.04))


def test_coherent_ratio_trivial():
    assert fock.coherent_ratio(fn("1"), 0.3, -1.1j) == pytest.approx(1)


def test_coherent_ratio_antiwick_values():
    # a a+ = a+ a + 1, so the ratio is conj(alpha) beta + 1
    assert fock.coherent_ratio(fn("z* z"), 1, 1) == pytest.approx(2)
    # a (a+)^2 = (a+)^2 a + 2 a+
    assert fock.coherent_ratio(fn("z*^2 z"), 1, 1j) == pytest.approx(2 + 1j)


def test_coherent_ratio_wick_substitution():
    assert fock.coherent_ratio(fn("z* z"), 1, 1, rule="wick") == pytest.approx(1)
    assert fock.coherent_ratio(fn("z*^2 z"), 1, 1j, rule="wick") == pytest.approx(1j)


def test_coherent_ratio_matches_normal_symbol(rng):
    f = fn("(1/2) z*^3 z - 2i z*^2 + z z + 3")
    for alpha, beta in zip(random_points(rng, 10), random_points(rng, 10)):
        got = fock.coherent_ratio(f, alpha, beta)
        assert got == pytest.approx(fock.coherent_ratio_exact(f, alpha, beta), rel=1e-10)
        wick = fock.coherent_ratio(f, alpha, beta, rule="wick")
        assert wick == pytest.approx(complex(f.evaluate(np.conj(alpha), beta)), rel=1e-10)


def test_antiwick_ratio_is_heat_flow_of_symbol():
    """The anti-Wick ratio equals exp(d/dz* d/dz) f evaluated at (conj(alpha), beta)."""
    f = fn("z*^2 z^2 - z*")
    # exp(dd*)(z*^2 z^2) = z*^2 z^2 + 4 z* z + 2
    expected = fn("z*^2 z^2 + 4 z* z + 2 - z*")
    assert ccr.normal_symbol(anti_wick_direct(f)) == expected


@pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5 - n)])
def test_anti_wick_integral(grid, n, m):
    f = monomial(n, m)
    err = fock.safe_max_error(fock.anti_wick_integral(f, grid, 20), fock.eval_poly(anti_wick_direct(f), (20,)))
    assert err <= 1e-6


def test_anti_wick_integral_examples(grid):
    one = fock.anti_wick_integral(fn("1"), grid, 20)
    assert fock.safe_max_error(one, fock.FockMatrix(np.eye(20), (20,), 0)) <= 1e-8
    n = fock.anti_wick_integral(fn("z* z"), grid, 20)
    assert fock.safe_max_error(n, fock.eval_poly(parse_operator("A*A + 1"), (20,))) <= 1e-8
    n2 = fock.anti_wick_integral(fn("z*^2 z^2"), grid, 20)
    assert fock.safe_max_error(n2, fock.eval_poly(parse_operator("A*^2 A^2 + 4 A*A + 2"), (20,))) <= 1e-6


def test_anti_wick_integral_order_guard():
    with pytest.raises(QuadratureOrderError):
        fock.anti_wick_integral(monomial(4, 4), gauss_hermite_grid(20), 20)


def test_positivity_examples():
    assert fock.positivity_check(fn("z*^2 z^2"), 30) >= -1e-8
    assert fock.positivity_check(fn("(z + z*)^2"), 30) >= -1e-8
    assert fock.positivity_check(fn("-1"), 30) == pytest.approx(-1)
    with pytest.raises(SymbolError):
        fock.positivity_check(fn("i z"), 30)


def test_positivity_random_squares(rng):
    for _ in range(20):
        c = rng.integers(-3, 4, size=(3, 3, 2))
        g = sum(
            (fn(f"{int(c[j, k, 0])} + {int(c[j, k, 1])}i") * fn("z*") ** j * fn("z") ** k
             for j in range(3) for k in range(3 - j)),
            fn("0"),
        )
        assert fock.positivity_check(g.conjugate() * g, 30) >= -1e-8


def weyl_oracle(beta, dim):
    """Closed-form displacement matrix elements from associated Laguerre polynomials."""
    x = abs(beta) ** 2
    out = np.zeros((dim, dim), dtype=complex)
    for m in range(dim):
        for n in range(dim):
            lo, hi = min(m, n), max(m, n)
            val = np.sqrt(factorial(lo) / factorial(hi)) * np.exp(-x / 2) * eval_genlaguerre(lo, hi - lo, x)
            out[m, n] = val * (beta ** (m - n) if m >= n else (-np.conj(beta)) ** (n - m))
    return out


@pytest.mark.parametrize("beta", [0.4, 1.0, 1.5j, -1.1 + 0.9j])
def test_weyl_matches_laguerre_formula(beta):
    d = fock.displacement_matrix(beta, ccr.WEYL, 40)
    oracle = fock.FockMatrix(weyl_oracle(beta, 40), (40,), 0)
    assert fock.safe_max_error(d, oracle) <= 1e-10


def test_displacement_examples():
    for rule in (ccr.WEYL, ccr.WICK, ccr.ANTIWICK):
        assert np.allclose(fock.displacement_matrix(0, rule, 40).entries, np.eye(40))
    weyl = fock.displacement_matrix(1, ccr.WEYL, 40)
    aw = fock.displacement_matrix(1, ccr.ANTIWICK, 40)
    wick = fock.displacement_matrix(1, ccr.WICK, 40)
    assert fock.safe_max_error(aw, weyl.scale(np.exp(-0.5))) <= 1e-10
    assert fock.safe_max_error(wick, weyl.scale(np.exp(0.5))) <= 1e-10
    with pytest.raises(TruncationError):
        fock.displacement_matrix(2, ccr.WEYL, 40)


def test_displacement_prefactors_match_symbolic_forms(rng):
    for beta in random_points(rng, 10, radius=1.0):
        weyl = fock.displacement_matrix(beta, ccr.WEYL, 40)
        for rule in (ccr.WICK, ccr.ANTIWICK):
            form = ccr.quantize_displacement(beta, rule)
            got = fock.displacement_matrix(beta, rule, 40)
            assert fock.safe_max_error(got, weyl.scale(form.multiplier(ccr.WEYL))) <= 1e-10


def test_vacuum_characteristic():
    assert fock.vacuum_characteristic(1.0, 0.0) == pytest.approx(1)
    assert fock.vacuum_characteristic(1.0, 1.0) == pytest.approx(np.exp(-0.5), abs=1e-6)
    assert fock.vacuum_characteristic(1.0, 1.0, quadrature="P") == pytest.approx(np.exp(-0.5), abs=1e-6)
    assert fock.vacuum_characteristic(0.0, 1.0) == pytest.approx(1)
    assert fock.vacuum_characteristic(0.7, -1.3) == pytest.approx(np.exp(-(1.3**2) * 0.49 / 2), abs=1e-6)
    with pytest.raises(TruncationError):
        fock.vacuum_characteristic(2.0, 1.5)


def test_fock_matrix_json_roundtrip():
    m = fock.eval_poly(parse_operator("i A*A + A"), (3,))
    again = fock.FockMatrix.from_json(m.to_json())
    assert np.array_equal(again.entries, m.entries) and again.safe_degree == m.safe_degree


def test_report_format():
    r = fock.make_report("demo", 1e-12, 1e-10, {"dim": 4})
    assert r.passed
    assert r.to_dict() == {"check": "demo", "params": {"dim": 4}, "observed": 1e-12, "bound": 1e-10, "pass": True}
    assert r.line().startswith("[PASS] demo")
    assert not fock.make_report("low", -1.0, -1e-8, lower=True).passed
