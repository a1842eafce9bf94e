"""Exact integer spectra without floating point.

Run with:  python demos/02_exact_spectra.py
"""

from srgddg import char_poly, integral_spectrum, petersen, rank
from srgddg.exact import NonIntegral, add_scaled_identity
from srgddg.graphcore import adjacency_matrix, cycle

A = adjacency_matrix(petersen())

# the characteristic polynomial is computed by an exact division-free
# recurrence; for the Petersen graph it factors as (x-3)(x-1)^5(x+2)^4
poly = char_poly(A)
print("char poly coefficients (ascending):", poly.coeffs)

spec = integral_spectrum(A)
print("spectrum:", spec.as_dict())

# multiplicities can be cross-checked against a second, independent
# algorithm: mult(theta) = n - rank(A - theta*I) with fraction-free
# elimination
for theta, mult in spec.pairs:
    r = rank(add_scaled_identity(A, -theta))
    print(f"  theta={theta}: synthetic-division mult {mult}, "
          f"rank complement {10 - r}")

# an irrational spectrum is an informative outcome, not an error
res = integral_spectrum(adjacency_matrix(cycle(5)))
assert isinstance(res, NonIntegral)
print("\nC5: integer roots", res.found,
      "+ residual factor of degree", res.residual.degree)
