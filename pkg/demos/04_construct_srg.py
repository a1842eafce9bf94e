"""Build a strongly regular graph from its pieces.

Take the divisible design graph on 36 vertices with parameters
(36,24,15,16;4,9), a symmetric 2-(4,3,2) design, and ANY bijection from
the 4 canonical classes to the 4 blocks; attaching the design's points
as a coclique always yields an SRG(40,27,18,18).

Run with:  python demos/04_construct_srg.py
"""

from itertools import permutations

from srgddg import (
    all_ksubsets_design,
    attach_coclique,
    decompose,
    fieldspec,
    srg_params,
    symplectic_complement,
)
from srgddg.coclique import CocliqueQuery
from srgddg.graphcore import bits, set_of
from srgddg.recognize import CanonicalPartition

# harvest a DDG(36,24,15,16;4,9) by decomposing the symplectic graph
graph = symplectic_complement(2, fieldspec(3, 1))
dec = decompose(graph, CocliqueQuery(mode="first"))[0]
ddg = dec.ddg
print("divisible design graph:", dec.ddg_params.tuple6)

# translate the canonical classes into ddg's own numbering
rest = (1 << graph.order) - 1 ^ dec.coclique
new_id = {old: new for new, old in enumerate(set_of(rest))}
classes = tuple(
    sum(1 << new_id[x] for x in bits(cl)) for cl in dec.partition.classes
)
partition = CanonicalPartition(classes)

# the 2-(4,3,2) design: all 3-subsets of a 4-set
design = all_ksubsets_design(4)
print("design:", design.params)

for phi in permutations(range(4)):
    built = attach_coclique(ddg, partition, design, phi)
    p = srg_params(built)
    print(f"phi = {phi} -> SRG{p.tuple4}")
