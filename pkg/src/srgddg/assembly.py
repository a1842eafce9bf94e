"""Both directions of the coclique + divisible-design-graph construction.

Forward (:func:`attach_coclique`): take a proper divisible design graph
whose parameters fit the (n, s) family pattern, a symmetric 2-design
with parameters (m, -s, (-s)(n+s)/n), and a bijection phi from classes
to blocks; append the design's points as a coclique and join a class
vertex to the points of its phi-block.  The result is strongly regular
with v = m(n+1), k = (-s)n, lambda = mu = (-s)(n+s), and the output is
re-verified at runtime rather than trusted.

Backward (:func:`decompose`): given a strongly regular graph, walk its
Hoffman cocliques, test whether the induced complement is a proper
divisible design graph of the family pattern, extract the design from
the coclique neighbourhoods, and re-validate by rebuilding the graph
edge for edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import theory
from .coclique import CocliqueQuery, hoffman_cocliques
from .designs import SymmetricDesign, required_design_params, verify_design
from .errors import BudgetExceeded
from .graphcore import Graph, VertexSet, bits, induced_subgraph, set_of
from .recognize import (
    CanonicalPartition,
    DdgParams,
    ddg_recognize,
    quotient_matrix,
    srg_params,
)

__all__ = [
    "Decomposition",
    "attach_coclique",
    "decompose",
    "verify_coclique_neighborhoods",
    "AssemblyError",
    "ParameterMismatch",
    "DesignMismatch",
    "PhiNotBijective",
    "ConstructionFailed",
    "Violation",
]


class AssemblyError(ValueError):
    pass


class ParameterMismatch(AssemblyError):
    """The input graph/partition is not a divisible design graph of the
    required family pattern."""


class DesignMismatch(AssemblyError):
    pass


class PhiNotBijective(AssemblyError):
    pass


class ConstructionFailed(AssemblyError):
    """Output verification failed; the input violates the constant
    quotient-matrix condition despite matching parameters."""


@dataclass(frozen=True)
class Violation:
    what: str
    detail: tuple

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Decomposition:
    """Witness that a graph arises from the coclique + DDG construction.

    ``coclique`` and ``partition`` refer to vertices of the original
    graph; ``ddg`` is the induced graph renumbered ascending.  Design
    point i is the i-th smallest coclique vertex, and ``phi`` maps class
    index to block index (extraction makes it the identity, but any
    bijection is legal on input).
    """

    coclique: VertexSet
    partition: CanonicalPartition
    ddg_params: DdgParams
    ddg: Graph
    design: SymmetricDesign
    phi: tuple[int, ...]
    n: int
    s: int

    @property
    def m(self) -> int:
        return self.ddg_params.m


def _family_of(dp: DdgParams) -> tuple[int, int]:
    """Recover (n, s) when the DDG parameters fit the family pattern."""
    n = dp.n
    if n < 2:
        raise ParameterMismatch("class size must be >= 2")
    s, rem = divmod(dp.K, n - 1)
    if rem:
        raise ParameterMismatch(f"K = {dp.K} is not a multiple of n - 1 = {n - 1}")
    s = -s
    fam = theory.family_from(n, s)
    if not fam:
        raise ParameterMismatch(f"(n = {n}, s = {s}) infeasible: {fam.reason}")
    if fam.ddg.tuple6 != dp.tuple6:
        raise ParameterMismatch(
            f"divisible design parameters {dp.tuple6} do not match the "
            f"family pattern {fam.ddg.tuple6} for (n = {n}, s = {s})"
        )
    return n, s


def _check_ddg_partition(ddg: Graph, partition: CanonicalPartition) -> DdgParams:
    """Verify the given partition realizes divisible-design counts."""
    partition.validate(ddg.order)
    K = ddg.regular_degree()
    if K is None:
        raise ParameterMismatch("graph is not regular")
    rows = ddg.rows
    classes = partition.classes
    lam1 = lam2 = None
    cls_of = [0] * ddg.order
    for i, cl in enumerate(classes):
        for x in bits(cl):
            cls_of[x] = i
    for x in range(ddg.order):
        rx = rows[x]
        for y in range(x + 1, ddg.order):
            cnt = (rx & rows[y]).bit_count()
            if cls_of[x] == cls_of[y]:
                if lam1 is None:
                    lam1 = cnt
                elif cnt != lam1:
                    raise ParameterMismatch(
                        f"same-class pair ({x}, {y}) has {cnt} common "
                        f"neighbours, expected {lam1}"
                    )
            else:
                if lam2 is None:
                    lam2 = cnt
                elif cnt != lam2:
                    raise ParameterMismatch(
                        f"cross-class pair ({x}, {y}) has {cnt} common "
                        f"neighbours, expected {lam2}"
                    )
    if lam1 is None or lam2 is None or lam1 == lam2:
        raise ParameterMismatch("partition does not give a proper divisible design")
    return DdgParams(ddg.order, K, lam1, lam2, partition.m, partition.n)


def attach_coclique(
    ddg: Graph,
    partition: CanonicalPartition,
    design: SymmetricDesign,
    phi: tuple[int, ...] | list[int],
) -> Graph:
    """Attach a design-governed coclique to a divisible design graph.

    The output graph keeps ddg's vertices 0..V-1 and appends the m
    design points as vertices V..V+m-1; it is verified to be strongly
    regular with the family parameters before being returned.
    """
    dp = _check_ddg_partition(ddg, partition)
    n, s = _family_of(dp)
    m = dp.m
    ok = verify_design(design)
    if not ok:
        raise DesignMismatch(f"design axioms fail: {ok.axiom} {ok.detail}")
    want = required_design_params(n, s)
    if design.params != want:
        raise DesignMismatch(f"design parameters {design.params}, need {want}")
    phi = tuple(phi)
    if sorted(phi) != list(range(m)):
        raise PhiNotBijective(f"phi = {phi} is not a bijection on 0..{m - 1}")
    V = ddg.order
    rows = [r for r in ddg.rows]
    for _ in range(m):
        rows.append(0)
    for i, cl in enumerate(partition.classes):
        block = design.blocks[phi[i]]
        shifted = block << V
        for x in bits(cl):
            rows[x] |= shifted
        for y in bits(block):
            rows[V + y] |= cl
    graph = Graph(V + m, rows)
    sp = srg_params(graph)
    want_srg = (m * (n + 1), (-s) * n, (-s) * (n + s), (-s) * (n + s))
    if not sp or sp.tuple4 != want_srg:
        raise ConstructionFailed(
            f"output is not strongly regular with {want_srg}: "
            f"{sp if not sp else sp.tuple4}"
        )
    return graph


def _extract_design(
    graph: Graph, coclique: VertexSet, partition: CanonicalPartition
) -> SymmetricDesign | None:
    """Blocks are the coclique neighbourhoods of the classes; every
    vertex of a class must see the same coclique points."""
    pts = set_of(coclique)
    pt_index = {p: i for i, p in enumerate(pts)}
    blocks = []
    for cl in partition.classes:
        members = set_of(cl)
        masks = {graph.rows[x] & coclique for x in members}
        if len(masks) != 1:
            return None
        blk = 0
        for p in bits(masks.pop()):
            blk |= 1 << pt_index[p]
        blocks.append(blk)
    k_blk = blocks[0].bit_count()
    lam = (blocks[0] & blocks[1]).bit_count() if len(blocks) > 1 else 0
    return SymmetricDesign(len(pts), tuple(blocks), k_blk, lam)


def decompose(
    graph: Graph, query: CocliqueQuery | None = None
) -> list[Decomposition]:
    """All ways to split graph into a Hoffman coclique plus a proper
    divisible design graph of the family pattern.

    Walks every Hoffman coclique (all of them unless the query asks for
    mode "first"), recognizes the induced complement, extracts the
    design, checks the constant quotient matrix, and re-validates each
    witness by rebuilding graph edge for edge.  Returns the witnesses in
    coclique order; an empty list is a legitimate outcome.
    """
    p = srg_params(graph)
    if not p:
        raise AssemblyError(f"not strongly regular: {p.reason}")
    if not p.primitive:
        raise AssemblyError("graph is imprimitive")
    budget_exc = None
    try:
        cocliques = hoffman_cocliques(graph, p, query)
    except BudgetExceeded as exc:
        cocliques = exc.partial or []
        budget_exc = exc
    full = (1 << graph.order) - 1
    out: list[Decomposition] = []
    for C in cocliques:
        rest = full ^ C
        old_ids = set_of(rest)
        new_id = {old: new for new, old in enumerate(old_ids)}
        ddg = induced_subgraph(graph, rest)
        wits = ddg_recognize(ddg)
        if not wits:
            continue
        for dp, part_ind in wits:
            if not dp.proper:
                continue
            try:
                n, s = _family_of(dp)
            except ParameterMismatch:
                continue
            if s != p.s:
                continue
            # partition in graph's numbering, classes by smallest member
            classes = []
            for cl in part_ind.classes:
                mask = 0
                for x in bits(cl):
                    mask |= 1 << old_ids[x]
                classes.append(mask)
            classes.sort(key=lambda cl: (cl & -cl).bit_length())
            part = CanonicalPartition(tuple(classes))
            design = _extract_design(graph, C, part)
            if design is None:
                continue
            if not verify_design(design) or design.params != required_design_params(n, s):
                continue
            q = quotient_matrix(ddg, part_ind)
            if not q or not q.is_constant(n + s):
                continue
            # induced-id classes in the same order as the design blocks
            ind_classes = []
            for cl in part.classes:
                mask = 0
                for x in bits(cl):
                    mask |= 1 << new_id[x]
                ind_classes.append(mask)
            dec = Decomposition(
                coclique=C,
                partition=part,
                ddg_params=dp,
                ddg=ddg,
                design=design,
                phi=tuple(range(dp.m)),
                n=n,
                s=s,
            )
            if _roundtrip_matches(graph, dec, ind_classes):
                out.append(dec)
    if budget_exc is not None:
        raise BudgetExceeded(
            "decompose: coclique search budget exhausted", budget_exc.nodes, out
        )
    return out


def _roundtrip_matches(graph: Graph, dec: Decomposition, ind_classes) -> bool:
    """Rebuild graph from the witness and compare edge sets exactly."""
    rebuilt = attach_coclique(
        dec.ddg, CanonicalPartition(tuple(ind_classes)), dec.design, dec.phi
    )
    # rebuilt numbering: ddg vertices (ascending original non-coclique
    # ids) then design points (ascending coclique ids)
    order = set_of(((1 << graph.order) - 1) ^ dec.coclique) + set_of(dec.coclique)
    back = [0] * graph.order
    for new, old in enumerate(order):
        back[old] = new
    for x in range(graph.order):
        row = 0
        for y in bits(rebuilt.rows[back[x]]):
            row |= 1 << order[y]
        if row != graph.rows[x]:
            return False
    return True


def verify_coclique_neighborhoods(graph: Graph, dec: Decomposition) -> bool | Violation:
    """Exhaustive coclique-neighbourhood checks for a decomposition.

    (1) vertices of one class share their whole coclique neighbourhood,
    which is the phi-image block; (2) each coclique vertex sees whole
    classes only, exactly -s of them, for (-s)*n neighbours total.
    """
    C = dec.coclique
    pts = set_of(C)
    for i, cl in enumerate(dec.partition.classes):
        blk_pts = {pts[b] for b in bits(dec.design.blocks[dec.phi[i]])}
        want = 0
        for pv in blk_pts:
            want |= 1 << pv
        for x in bits(cl):
            got = graph.rows[x] & C
            if got != want:
                return Violation("class neighbourhood != phi block", (i, x))
    for z in pts:
        rz = graph.rows[z]
        whole = 0
        for i, cl in enumerate(dec.partition.classes):
            inter = rz & cl
            if inter == cl:
                whole += 1
            elif inter:
                return Violation("class neither contained nor disjoint", (z, i))
        if whole != -dec.s:
            return Violation("coclique vertex sees wrong class count", (z, whole))
        if rz.bit_count() != (-dec.s) * dec.n:
            return Violation("coclique vertex degree != (-s)n", (z, rz.bit_count()))
    return True
