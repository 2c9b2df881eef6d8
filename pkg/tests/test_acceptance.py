"""Acceptance gate: one check per criterion, pinned tolerances and time limits.

Each criterion prints a single ``PASS``/``FAIL`` line (collected into the
pytest terminal summary, or printed directly when run as a script).

Criterion 3 asks for ``<exp a| A(f) |exp b> / <exp a|exp b> == f(conj(a), b)``
with ``A`` the anti-Wick rule. That identity holds for normal (Wick) ordering
only; under anti-Wick ordering ``a a+ = a+ a + 1`` already gives
``conj(a) b + 1`` for ``f = z* z``. The check is run as stated, reports FAIL,
and is marked as an expected failure; the line also reports the two identities
that do hold.
"""

import itertools
import sys
import time
from math import factorial

import numpy as np
import pytest
import sympy

from bosonorder import ccr, complexwave as cw, fields, fock
from bosonorder.ccr import anti_wick_direct, anti_wick_via_dilation
from bosonorder.gaussian_rational import GaussianRational
from bosonorder.polyfunc import PolyFunction
from bosonorder.quadrature import gauss_hermite_grid
from bosonorder.realline import quadrature_decomposition_check

RESULTS = []
SEED = 20240601


def monomial(n, m):
    return PolyFunction({(n, m): 1}, 1)


def disk(rng, count, radius):
    r = radius * np.sqrt(rng.random(count))
    return r * np.exp(2j * np.pi * rng.random(count))


def random_symbol(rng, degree):
    terms = {}
    for total in range(degree + 1):
        for j in range(total + 1):
            if rng.random() < 0.6:
                re, im = rng.integers(-4, 5, size=2)
                terms[(j, total - j)] = GaussianRational(int(re), int(im))
    f = PolyFunction(terms)
    return f if f.degree() == degree else f + monomial(0, degree)


def record(number, name, passed, detail):
    line = f"criterion {number:2d} [{'PASS' if passed else 'FAIL'}] {name}: {detail}"
    RESULTS.append(line)
    return passed


# 1 ---------------------------------------------------------------------------


def criterion_1():
    start = time.perf_counter()
    shapes = [(n, m) for n in range(9) for m in range(9 - n)]
    mismatches = [s for s in shapes if anti_wick_via_dilation(monomial(*s)) != anti_wick_direct(monomial(*s))]
    elapsed = time.perf_counter() - start
    ok = not mismatches and len(shapes) == 45 and elapsed < 5
    return record(1, "dilation theorem", ok, f"{len(shapes)} monomials, {len(mismatches)} mismatches, {elapsed:.2f}s < 5s")


# 2 ---------------------------------------------------------------------------


def criterion_2():
    start = time.perf_counter()
    grid = gauss_hermite_grid(64)
    worst = 0.0
    for n in range(5):
        for m in range(5 - n):
            f = monomial(n, m)
            quad = fock.anti_wick_integral(f, grid, 20)
            worst = max(worst, fock.safe_max_error(quad, fock.eval_poly(anti_wick_direct(f), (20,))))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-6 and elapsed < 30
    return record(2, "anti-Wick integral formula", ok, f"max err {worst:.2e} <= 1e-6, {elapsed:.2f}s < 30s")


# 3 ---------------------------------------------------------------------------


def criterion_3():
    rng = np.random.default_rng(SEED)
    stated = wick = closed_form = 0.0
    for _ in range(10):
        f = random_symbol(rng, int(rng.integers(1, 5)))
        for alpha, beta in zip(disk(rng, 20, 1.5), disk(rng, 20, 1.5)):
            target = complex(f.evaluate(np.conj(alpha), beta))
            got = fock.coherent_ratio(f, alpha, beta, 40)
            scale = max(abs(target), 1e-12)
            stated = max(stated, abs(got - target) / scale)
            w = fock.coherent_ratio(f, alpha, beta, 40, rule="wick")
            wick = max(wick, abs(w - target) / scale)
            exact = fock.coherent_ratio_exact(f, alpha, beta)
            closed_form = max(closed_form, abs(got - exact) / max(abs(exact), 1e-12))
    ok = stated <= 1e-8
    detail = (
        f"anti-Wick ratio vs f(a*, b): max rel err {stated:.2e} (bound 1e-8); "
        f"Wick ratio vs f(a*, b): {wick:.2e}; anti-Wick ratio vs its normal symbol: {closed_form:.2e}"
    )
    return record(3, "coherent identity", ok, detail)


# 4 ---------------------------------------------------------------------------


def criterion_4():
    grid = gauss_hermite_grid(64)
    exact_bad = 0
    worst = 0.0
    for n in range(7):
        for m in range(7):
            moment = cw.gaussian_moment(n, m)
            exact_bad += moment != (factorial(n) if n == m else 0)
            worst = max(worst, abs(grid.moment(n, m) - moment))
            f = monomial(n, m)
            p = cw.project_antiholomorphic(f)
            expected = monomial(n - m, 0) * (factorial(n) // factorial(n - m)) if n >= m else PolyFunction({})
            exact_bad += p != expected
            exact_bad += cw.project_antiholomorphic(p) != p
            for k in range(7):
                basis = monomial(k, 0)
                exact_bad += cw.inner_product(basis, p) != cw.inner_product(basis, f)
                numeric = grid.integrate_function(lambda z: z**k * np.conj(z) ** n * z**m)
                worst = max(worst, abs(numeric - complex(cw.inner_product(basis, f))))
    ok = exact_bad == 0 and worst <= 1e-10
    return record(4, "projection and moments", ok, f"{exact_bad} exact mismatches, quadrature err {worst:.2e} <= 1e-10")


# 5 ---------------------------------------------------------------------------


def criterion_5():
    tests = [monomial(j, d - j) for d in range(7) for j in range(d + 1)]
    bad = 0
    for f in tests:
        bad += not cw.ccr_check(f).passed
        bad += cw.apply_op("C", f) != f * monomial(0, 1)
        bad += cw.apply_op("C*", f) != f * monomial(1, 0)
    for f, g in itertools.product(tests, repeat=2):
        bad += not cw.ccr_check(f, g, pairs=[]).passed
    decomposition = quadrature_decomposition_check(6)
    bad += len(decomposition.failures)
    detail = f"{len(tests)} polynomials, {len(tests) ** 2} adjointness pairs, {decomposition.checked} tensor checks, {bad} failures"
    return record(5, "complex-wave representation", bad == 0, detail)


# 6 ---------------------------------------------------------------------------


def criterion_6():
    rng = np.random.default_rng(SEED + 6)
    kernel_err = 0.0
    for beta, gamma in zip(disk(rng, 20, 1.5), disk(rng, 20, 1.5)):
        value = cw.inner_product(cw.representer(beta, 40), cw.representer(gamma, 40))
        kernel_err = max(kernel_err, abs(complex(value) - cw.kernel_eval(beta, gamma)))
    repro_err = 0.0
    for beta in disk(rng, 10, 1.5):
        f = random_symbol(rng, 6)
        g = cw.project_antiholomorphic(f)
        value = complex(cw.inner_product(cw.representer(beta, 40), g))
        repro_err = max(repro_err, abs(value - complex(g.to_complex().evaluate(np.conj(beta), 0))))
    unitary_bad = 0
    states = []
    for _ in range(6):
        re, im = rng.integers(-3, 4, size=(2, 11))
        states.append([GaussianRational(int(a), int(b)) for a, b in zip(re, im)])
    for psi, chi in itertools.product(states, repeat=2):
        lhs = cw.inner_product(cw.bargmann_map(psi), cw.bargmann_map(chi))
        rhs = sum((a.conjugate() * b for a, b in zip(psi, chi)), GaussianRational(0))
        unitary_bad += sympy.simplify(sympy.sympify(lhs) - sympy.sympify(rhs)) != 0
    ok = kernel_err <= 1e-10 and repro_err <= 1e-10 and unitary_bad == 0
    detail = f"kernel err {kernel_err:.2e}, reproducing err {repro_err:.2e} (<= 1e-10), {unitary_bad} unitarity mismatches at degree 10"
    return record(6, "reproducing kernel", ok, detail)


# 7 ---------------------------------------------------------------------------


def criterion_7():
    rng = np.random.default_rng(SEED + 7)
    start = time.perf_counter()

    def vec():
        return rng.normal(size=2) + 1j * rng.normal(size=2)

    e_worst = 0.0
    shapes = 0
    for n in range(4):
        for m in range(4 - n):
            if n + m == 0:
                continue
            report = fields.anti_wick_fields_check([vec() for _ in range(n)], [vec() for _ in range(m)], cutoff=4)
            e_worst = max(e_worst, report.max_residual)
            shapes += 1
    z_worst = 0.0
    for _ in range(10):
        z_worst = max(z_worst, *fields.z_commutator_residual(vec(), vec(), 4))
    elapsed = time.perf_counter() - start
    ok = e_worst <= 1e-9 and z_worst <= 1e-12 and elapsed < 60
    detail = f"{shapes} word shapes, E_A residual {e_worst:.2e} <= 1e-9, Z commutator {z_worst:.2e} <= 1e-12, {elapsed:.2f}s < 60s"
    return record(7, "anti-Wick fields", ok, detail)


# 8 ---------------------------------------------------------------------------


def criterion_8():
    rng = np.random.default_rng(SEED + 8)
    disp = 0.0
    for beta in disk(rng, 10, 1.0):
        weyl = fock.displacement_matrix(beta, ccr.WEYL, 40)
        aw = fock.displacement_matrix(beta, ccr.ANTIWICK, 40)
        disp = max(disp, fock.safe_max_error(aw, weyl.scale(np.exp(-abs(beta) ** 2 / 2))))
    symbolic = ccr.quantize_displacement(1, ccr.ANTIWICK).multiplier_exponent(ccr.WEYL) == GaussianRational(-1, 0) / 2
    cohen = [
        fields.cohen_factorization_check(f1, f2)
        for f1, f2 in [(monomial(1, 1), monomial(0, 1)), (monomial(2, 1), monomial(1, 2)), (monomial(3, 0), monomial(0, 0))]
    ]
    factor_exact = all(r.symbolic_factor and r.multiplier_split for r in cohen)
    factor_matrix = max(r.matrix_residual for r in cohen)
    ok = disp <= 1e-10 and symbolic and factor_exact and factor_matrix <= 1e-10
    detail = f"displacement err {disp:.2e} <= 1e-10, exact factor/split {factor_exact and symbolic}, matrix err {factor_matrix:.2e} <= 1e-10"
    return record(8, "Cohen multipliers", ok, detail)


# 9 ---------------------------------------------------------------------------


def criterion_9():
    rng = np.random.default_rng(SEED + 9)
    lowest = np.inf
    for _ in range(20):
        g = random_symbol(rng, int(rng.integers(1, 3)))
        lowest = min(lowest, fock.positivity_check(g.conjugate() * g, 30))
    cp = min(
        fields.cp_block_check(fields.rank_one_symbol_matrix(g), 20)
        for g in (monomial(0, 1), monomial(0, 1) + monomial(1, 0), random_symbol(rng, 2))
    )
    ok = lowest >= -1e-8 and cp >= -1e-8
    return record(9, "positivity and CP", ok, f"min eigenvalue {lowest:.2e}, block CP {cp:.2e} (>= -1e-8)")


# 10 --------------------------------------------------------------------------


def criterion_10():
    rng = np.random.default_rng(SEED + 10)
    grid = gauss_hermite_grid(64)
    pts = disk(rng, 20, 1.5)
    inv = fwd = 0.0
    for _ in range(5):
        f = random_symbol(rng, 4)
        rec = cw.fourier_transform_analytic(f)
        fwd = max(fwd, np.max(np.abs(cw.fourier_transform(f, grid, pts) - rec(pts))))
        back = cw.inverse_fourier_transform(rec, grid, pts)
        inv = max(inv, np.max(np.abs(back - np.array([f(p) for p in pts]))))
    ok = inv <= 1e-6 and fwd <= 1e-8
    return record(10, "Fourier pair", ok, f"inversion err {inv:.2e} <= 1e-6, analytic vs quadrature {fwd:.2e} <= 1e-8")


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
]

_XFAIL_3 = "anti-Wick coherent ratio equals the normal symbol of A(f), not f itself; the stated identity is the Wick one"


@pytest.mark.parametrize(
    "criterion",
    [
        pytest.param(c, marks=pytest.mark.xfail(strict=True, reason=_XFAIL_3)) if c is criterion_3 else c
        for c in CRITERIA
    ],
    ids=[f"criterion_{i}" for i in range(1, 11)],
)
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    print("\n".join(RESULTS))
    sys.exit(0 if all(outcomes) else 1)
