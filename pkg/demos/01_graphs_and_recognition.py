"""Build some graphs and classify them.

Run with:  python demos/01_graphs_and_recognition.py
"""

from srgddg import (
    composition,
    ddg_recognize,
    deza_params,
    edgeless,
    grid,
    petersen,
    srg_params,
    triangular,
)

# Strong regularity is checked by exhaustive common-neighbour counting,
# and the spectral data (r, s, multiplicities, coclique bound) is derived
# exactly from the parameters.
for g in (petersen(), triangular(6), grid(6, 6)):
    p = srg_params(g)
    print(f"{g.label}: (v,k,lambda,mu) = {p.tuple4}, eigenvalues "
          f"{p.k} > {p.r} > {p.s}, multiplicities 1/{p.f}/{p.g}, "
          f"coclique bound {p.c}")

# The composition of a strongly regular graph with lambda = mu and an
# empty graph is a Deza graph whose larger count b equals the degree.
comp = composition(triangular(6), edgeless(2))
d = deza_params(comp)
print(f"\nT(6)[2K1]: v={d.v}, k={d.k}, counts b={d.b}, a={d.a} (b = k)")

# That composition is also a divisible design graph; the recognizer
# recovers the canonical partition (copies of the empty graph).
wits = ddg_recognize(comp)
for dp, part in wits:
    print(f"  divisible design {dp.tuple6}, classes of size {part.n}")
