"""Property suites run by ``bosonorder verify``.

Each suite returns a list of :class:`~bosonorder.fock.Report`. Exact checks
report the number of mismatches against a bound of 0; numerical checks report
the worst residual against their tolerance.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import ccr, complexwave, fields, fock
from .ccr import OperatorPoly, anti_wick_direct, anti_wick_via_dilation, dilate, dilate_word
from .fock import eval_poly, ladder, make_report, safe_max_error
from .gaussian_rational import GaussianRational
from .polyfunc import PolyFunction
from .quadrature import gauss_hermite_grid
from .realline import quadrature_decomposition_check

SUITES = ("symbolic", "complex-wave", "fock", "fields")


@dataclass
class VerifyConfig:
    seed: int = 0
    dim: int = None
    gh_order: int = 64
    tol: float = None

    def bound(self, default):
        return default if self.tol is None else self.tol

    def fock_dim(self, default):
        return default if self.dim is None else self.dim


def monomial(n, m):
    return PolyFunction({(n, m): 1}, 1)


def random_gaussian_rational(rng, scale=3):
    return GaussianRational(
        int(rng.integers(-scale, scale + 1)) if rng.random() < 0.7 else int(rng.integers(-9, 10)) / 4,
        int(rng.integers(-scale, scale + 1)) if rng.random() < 0.7 else int(rng.integers(-9, 10)) / 4,
    )


def random_symbol(rng, max_degree=4):
    terms = {}
    for _ in range(int(rng.integers(1, 6))):
        total = int(rng.integers(0, max_degree + 1))
        j = int(rng.integers(0, total + 1))
        terms[(j, total - j)] = random_gaussian_rational(rng)
    f = PolyFunction(terms, 1)
    return f if not f.is_zero() else PolyFunction.constant(1)


def random_point(rng, radius=1.5):
    r = radius * np.sqrt(rng.random())
    return complex(r * np.exp(2j * np.pi * rng.random()))


# symbolic ------------------------------------------------------------------------


def check_dilation_theorem(max_total=8):
    bad = sum(
        anti_wick_via_dilation(monomial(n, m)) != anti_wick_direct(monomial(n, m))
        for n in range(max_total + 1)
        for m in range(max_total + 1 - n)
    )
    return make_report("dilation_theorem", bad, 0, {"max_total": max_total})


def check_dilation_order_independence(max_total=4):
    bad = 0
    for n in range(max_total + 1):
        for m in range(max_total + 1 - n):
            reference = dilate(monomial(n, m))
            for word in set(itertools.permutations(["C*"] * n + ["C"] * m)):
                bad += dilate_word(word) != reference
    return make_report("dilation_order_independence", bad, 0, {"max_total": max_total})


def check_reordering_formula(max_power=6, dim=None):
    dim = dim or 2 * max_power + 4
    a, ad = ladder(dim)
    bad = 0
    worst = 0.0
    for k in range(max_power + 1):
        for j in range(max_power + 1):
            formula = OperatorPoly(
                {((0, jj, kk),): w for (jj, kk), w in ccr.reorder_antinormal(k, j).items()}, 1
            )
            if formula != ccr.canonicalize([(0, "annihilate")] * k + [(0, "create")] * j):
                bad += 1
            word = np.linalg.matrix_power(a.entries, k) @ np.linalg.matrix_power(ad.entries, j)
            err = safe_max_error(eval_poly(formula, (dim,), j + k), fock.FockMatrix(word, (dim,), j + k))
            worst = max(worst, err)
    return make_report("reordering_formula", bad + (worst > 1e-9), 0, {"max_power": max_power, "dim": dim})


def check_displacement_exponents():
    beta = 1.0
    aw = ccr.quantize_displacement(beta, ccr.ANTIWICK)
    weyl = ccr.quantize_displacement(beta, ccr.WEYL)
    wick = ccr.quantize_displacement(beta, ccr.WICK)
    bad = (aw.exponent - weyl.exponent != Fraction(-1, 2)) + (wick.exponent - weyl.exponent != Fraction(1, 2))
    return make_report("displacement_exponents", bad, 0)


def symbolic_suite(config):
    return [
        check_dilation_theorem(),
        check_dilation_order_independence(),
        check_reordering_formula(),
        check_displacement_exponents(),
    ]


# complex wave --------------------------------------------------------------------


def complex_wave_suite(config):
    rng = np.random.default_rng(config.seed)
    grid = gauss_hermite_grid(config.gh_order)
    out = []

    worst = max(
        abs(grid.moment(n, m) - complexwave.gaussian_moment(n, m))
        for n in range(7)
        for m in range(7)
        if n + m < grid.order
    )
    out.append(make_report("quadrature_moments", worst, config.bound(1e-10), {"gh_order": grid.order}))

    bad = 0
    for n in range(7):
        for m in range(7):
            f = monomial(n, m)
            p = complexwave.project_antiholomorphic(f)
            bad += complexwave.project_antiholomorphic(p) != p
            bad += not complexwave.apply_op("B", p).is_zero()
            for k in range(7):
                basis = monomial(k, 0)
                bad += complexwave.inner_product(basis, p) != complexwave.inner_product(basis, f)
    out.append(make_report("projection", bad, 0))

    bad = 0
    tests = [monomial(j, d - j) for d in range(7) for j in range(d + 1)]
    for f in tests:
        bad += not complexwave.ccr_check(f).passed
        bad += complexwave.apply_op("C", f) != complexwave.times_z(f)
        bad += complexwave.apply_op("C*", f) != complexwave.times_zbar(f)
    for f, g in itertools.product(tests[:10], repeat=2):
        bad += not complexwave.ccr_check(f, g, pairs=[]).passed
    out.append(make_report("complex_wave_ccr", bad, 0))

    report = quadrature_decomposition_check(6)
    out.append(make_report("quadrature_decomposition", len(report.failures), 0, {"checked": report.checked}))

    worst = 0.0
    for _ in range(10):
        b, g = random_point(rng), random_point(rng)
        val = complexwave.inner_product(complexwave.representer(b, 40), complexwave.representer(g, 40))
        worst = max(worst, abs(complex(val) - complexwave.kernel_eval(b, g)))
    out.append(make_report("rkhs_kernel", worst, config.bound(1e-10), {"T": 40}))

    pts = [random_point(rng) for _ in range(20)]
    worst_fwd = worst_inv = 0.0
    for _ in range(3):
        f = random_symbol(rng, 3)
        rec = complexwave.fourier_transform_analytic(f)
        worst_fwd = max(worst_fwd, np.max(np.abs(complexwave.fourier_transform(f, grid, pts) - rec(pts))))
        back = complexwave.inverse_fourier_transform(rec, grid, pts)
        worst_inv = max(worst_inv, np.max(np.abs(back - np.array([f(p) for p in pts]))))
    out.append(make_report("fourier_analytic_vs_quadrature", worst_fwd, config.bound(1e-8)))
    out.append(make_report("fourier_inversion", worst_inv, config.bound(1e-6)))
    return out


# fock --------------------------------------------------------------------------


def _relative(got, expected):
    return abs(got - expected) / max(abs(expected), 1e-12)


def fock_suite(config):
    rng = np.random.default_rng(config.seed)
    grid = gauss_hermite_grid(config.gh_order)
    out = []

    dim = config.fock_dim(20)
    worst = 0.0
    for n in range(5):
        for m in range(5 - n):
            f = monomial(n, m)
            worst = max(
                worst,
                safe_max_error(fock.anti_wick_integral(f, grid, dim), eval_poly(anti_wick_direct(f), (dim,))),
            )
    out.append(make_report("anti_wick_integral", worst, config.bound(1e-6), {"dim": dim, "gh_order": grid.order}))

    dim = config.fock_dim(40)
    worst_aw = worst_wick = 0.0
    for _ in range(10):
        f = random_symbol(rng, 4)
        for _ in range(20):
            a, b = random_point(rng), random_point(rng)
            worst_aw = max(worst_aw, _relative(fock.coherent_ratio(f, a, b, dim), fock.coherent_ratio_exact(f, a, b)))
            got = fock.coherent_ratio(f, a, b, dim, rule="wick")
            worst_wick = max(worst_wick, _relative(got, complex(f.evaluate(a.conjugate(), b))))
    out.append(make_report("coherent_ratio_antiwick", worst_aw, config.bound(1e-8), {"dim": dim}))
    out.append(make_report("coherent_ratio_wick", worst_wick, config.bound(1e-8), {"dim": dim}))

    dim = config.fock_dim(30)
    lowest = np.inf
    for _ in range(20):
        g = random_symbol(rng, 2)
        lowest = min(lowest, fock.positivity_check(g.conjugate() * g, dim))
    out.append(make_report("positivity", lowest, -config.bound(1e-8), {"dim": dim}, lower=True))

    dim = config.fock_dim(40)
    worst = 0.0
    for _ in range(10):
        beta = random_point(rng, 1.0)
        weyl = fock.displacement_matrix(beta, ccr.WEYL, dim)
        aw = fock.displacement_matrix(beta, ccr.ANTIWICK, dim)
        wick = fock.displacement_matrix(beta, ccr.WICK, dim)
        worst = max(
            worst,
            safe_max_error(aw, weyl.scale(np.exp(-abs(beta) ** 2 / 2))),
            safe_max_error(wick, weyl.scale(np.exp(abs(beta) ** 2 / 2))),
        )
    out.append(make_report("displacement_multipliers", worst, config.bound(1e-10), {"dim": dim}))

    err = abs(fock.vacuum_characteristic(1.0, 1.0, dim) - np.exp(-0.5))
    out.append(make_report("vacuum_characteristic", err, config.bound(1e-6), {"dim": dim}))
    return out


# fields ------------------------------------------------------------------------


def _random_vec(rng, d=2):
    return rng.normal(size=d) + 1j * rng.normal(size=d)


def fields_suite(config):
    rng = np.random.default_rng(config.seed)
    out = []
    cutoff = 4
    worst = 0.0
    for _ in range(10):
        worst = max(worst, *fields.z_commutator_residual(_random_vec(rng), _random_vec(rng), cutoff))
    out.append(make_report("z_commutativity", worst, config.bound(1e-12), {"d": 2, "cutoff": cutoff}))

    worst = 0.0
    for n in range(4):
        for m in range(4 - n):
            if n + m == 0:
                continue
            r = fields.anti_wick_fields_check(
                [_random_vec(rng) for _ in range(n)], [_random_vec(rng) for _ in range(m)], cutoff
            )
            worst = max(worst, r.max_residual)
    out.append(make_report("anti_wick_fields", worst, config.bound(1e-9), {"d": 2, "cutoff": cutoff}))

    err = abs(fields.exp_vector_overlap([1, 0], [1, 0], 20) - np.e)
    out.append(make_report("exp_vector_overlap", err, config.bound(1e-8)))

    r = fields.cohen_factorization_check(monomial(1, 1), monomial(0, 1))
    out.append(
        make_report(
            "cohen_factorization",
            r.matrix_residual if (r.symbolic_factor and r.multiplier_split) else np.inf,
            config.bound(1e-10),
        )
    )

    lowest = min(
        fields.cp_block_check(fields.rank_one_symbol_matrix(g), 20)
        for g in (monomial(0, 1), PolyFunction({(0, 1): 1, (1, 0): 1}), random_symbol(rng, 2))
    )
    out.append(make_report("cp_block", lowest, -config.bound(1e-8), lower=True))
    return out


_RUNNERS = {
    "symbolic": symbolic_suite,
    "complex-wave": complex_wave_suite,
    "fock": fock_suite,
    "fields": fields_suite,
}


def run_suites(names=None, config=None):
    config = config or VerifyConfig()
    names = list(names or SUITES)
    results = []
    for name in names:
        for report in _RUNNERS[name](config):
            report.params.setdefault("suite", name)
            results.append(report)
    return results
