"""
Fields over a finite-dimensional test space
-------------------------------------------

With test vectors in ``C^2`` every field operator is a combination of two
modes. The doubled field ``Z(phi) = A(phi) + B*(J phi)`` commutes with its
own adjoints, which is what makes the anti-Wick field products well defined.
Anti-Wick displacement operators are Weyl operators scaled by
``exp(-|beta|^2 / 2)``, and that scalar factor splits over direct sums.
"""

import numpy as np

from bosonorder import ccr, fields, fock, parse_function

rng = np.random.default_rng(7)
phi = rng.normal(size=2) + 1j * rng.normal(size=2)
psi = rng.normal(size=2) + 1j * rng.normal(size=2)

print("Z commutator residuals", fields.z_commutator_residual(phi, psi, cutoff=4))

report = fields.anti_wick_fields_check([phi], [psi, phi], cutoff=4)
print("anti-Wick field product residual", report.max_residual)

print("<exp phi|exp phi> =", fields.exp_vector_overlap(phi, phi, 20), " exp|phi|^2 =", np.exp(np.vdot(phi, phi).real))

beta = 0.6 + 0.3j
weyl = fock.displacement_matrix(beta, ccr.WEYL, 40)
aw = fock.displacement_matrix(beta, ccr.ANTIWICK, 40)
print("anti-Wick vs scaled Weyl", fock.safe_max_error(aw, weyl.scale(np.exp(-abs(beta) ** 2 / 2))))

cohen = fields.cohen_factorization_check(parse_function("z* z"), parse_function("z*"))
print("factorization exact", cohen.symbolic_factor and cohen.multiplier_split, " matrix residual", cohen.matrix_residual)

# a 2x2 matrix of symbols g_i* g_j quantizes to a positive block operator
print("block min eigenvalue", fields.cp_block_check(fields.rank_one_symbol_matrix(parse_function("z + z*")), 20))
