"""
Coherent-state matrix elements and the integral formula
-------------------------------------------------------

Between exponential vectors the Wick quantization of ``f`` has matrix element
ratio ``f(conj(alpha), beta)``. The anti-Wick quantization instead yields the
normal symbol of ``A(f)``, which differs from ``f`` by the heat-flow
correction: for ``f = z* z`` the ratio is ``conj(alpha) beta + 1``.
The anti-Wick operator itself is the Gaussian average of ``f`` against
coherent-state projectors, checked here on a truncated Fock space.
"""

import numpy as np

from bosonorder import anti_wick_direct, eval_poly, fock, gauss_hermite_grid, normal_symbol, parse_function

alpha, beta = 1.0, 1.0
for text in ["z* z", "z*^2 z"]:
    f = parse_function(text)
    print(f"f = {text}")
    print("  Wick ratio          ", np.round(fock.coherent_ratio(f, alpha, beta, 40, rule="wick"), 12))
    print("  anti-Wick ratio     ", np.round(fock.coherent_ratio(f, alpha, beta, 40), 12))
    print("  normal symbol of A(f)", normal_symbol(anti_wick_direct(f)).to_text())

# integral formula on the safe block of a 20-level truncation
grid = gauss_hermite_grid(64)
f = parse_function("z*^2 z^2 + 3 z")
integral = fock.anti_wick_integral(f, grid, 20)
print("integral formula error", fock.safe_max_error(integral, eval_poly(anti_wick_direct(f), (20,))))

# anti-Wick quantization of |g|^2 is a positive operator
g = parse_function("z^2 - 2 z* + 1")
print("min eigenvalue of A(|g|^2)", fock.positivity_check(g.conjugate() * g, 30))
