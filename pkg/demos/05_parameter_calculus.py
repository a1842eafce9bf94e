"""The parameter calculus: families, prime powers, and eliminations.

Run with:  python demos/05_parameter_calculus.py
"""

from srgddg import enumerate_feasible, match_spectrum_shapes
from srgddg.recognize import srg_params_from_tuple

# Each feasible pair (n, s) determines one SRG parameter set and one
# divisible-design parameter set.  When -s is a prime power the family
# is forced onto s = -q^(d-1), n = q^d: the symplectic parameters.
print("families with -12 <= s <= -2, n <= 100, passing all filters:")
for e in enumerate_feasible(-12, -2, 100):
    if not e.handshake_ok:
        continue
    tag = f"q={e.prime_power.q}, d={e.prime_power.d}" if e.prime_power else "not a prime power"
    print(f"  n={e.n:3d} s={e.s:3d}: SRG{e.family.srg.tuple4} "
          f"DDG{e.family.ddg.tuple6} [{tag}]")

# s = -6 is the first non-prime-power case.  Integrality alone allows
# n in {9, 12, 36}; the class-regularity parity kills n = 9 (a class
# would induce a 3-regular graph on 9 vertices).
print("\ns = -6 story:")
for e in enumerate_feasible(-6, -6, 40):
    verdict = "survives" if e.handshake_ok else "eliminated by parity"
    print(f"  n={e.n}: SRG{e.family.srg.tuple4} -> {verdict}")

# The converse engine: which spectrum shapes could a coclique-punctured
# SRG share with a divisible design graph?  For (40,27,18,18) exactly
# one shape survives and pins the DDG parameters; for (27,16,10,8)
# every shape dies, one of them by the classic m = 5 vs V = 24 clash.
print("\nshape matching for SRG(40,27,18,18):")
for m in match_spectrum_shapes(srg_params_from_tuple(40, 27, 18, 18)):
    if m.accepted:
        print(f"  case {m.case}: ACCEPTED -> DDG{m.ddg_params().tuple6}")

print("shape matching for SRG(27,16,10,8):")
for m in match_spectrum_shapes(srg_params_from_tuple(27, 16, 10, 8)):
    if m.reason and "divide" in m.reason:
        print(f"  case {m.case}: {m.reason}")
