"""
Polynomials on the plane as a representation of two modes
---------------------------------------------------------

In ``L2(C, exp(-|z|^2) d^2z / pi)`` the operators ``A = d/dz*`` and
``B = d/dz`` together with multiplication by ``z*`` and ``z`` satisfy two
independent commutation relations. Anti-holomorphic polynomials form the
B-vacuum sector, and the orthogonal projection onto them is computed exactly.
"""

import numpy as np

from bosonorder import complexwave as cw
from bosonorder import gauss_hermite_grid, parse_function

f = parse_function("z*^3 z + 2 z z*")
print("f                 ", f.to_text())
print("projection        ", cw.project_antiholomorphic(f).to_text())

report = cw.ccr_check(f, parse_function("z*^2 z + z*"))
print("commutators exact ", all(report.commutators.values()))
for name, (lhs, rhs) in report.adjointness.items():
    print(f"<{name} f|g> = {lhs},  <f|{name}* g> = {rhs}")

# exact moments against a 64-point Gauss-Hermite product grid
grid = gauss_hermite_grid(64)
for n, m in [(2, 2), (3, 3), (4, 2)]:
    print(f"E[z*^{n} z^{m}] exact {cw.gaussian_moment(n, m)}, quadrature {grid.moment(n, m).real:+.12f}")

# the kernel exp(conj(beta) gamma) reproduces polynomials in z*
beta, gamma = 0.7 - 0.4j, -0.3 + 1.1j
value = complex(cw.inner_product(cw.representer(beta, 40), cw.representer(gamma, 40)))
print("kernel", value, "vs", cw.kernel_eval(beta, gamma))

# Fourier transform: a polynomial times a Gaussian, evaluated both ways
points = np.array([0, 0.5, 1 + 1j])
record = cw.fourier_transform_analytic(f)
print("Fourier transform  (", record.polynomial.to_text(), ") exp(-z* z)")
print("analytic  ", np.round(record(points), 10))
print("quadrature", np.round(cw.fourier_transform(f, grid, points), 10))
