"""Canonical labeling and isomorphism testing for desk-scale graphs.

Individualization-refinement search over equitable ordered partitions.
Plain colour refinement cannot split strongly regular graphs (they are
1-WL homogeneous), so the search always starts from the uniform
partition and relies on individualization.  Discovered automorphisms
prune the search two ways: sibling branches lying in a common orbit are
skipped, and finding an automorphism at a leaf abandons the current
subtree back to where its path diverged from the first leaf's path
(the two subtrees are images of each other, so nothing new is there).

The certificate is the lexicographically least graph6 encoding over the
relabelings reached at the surviving search leaves; equal certificates
mean isomorphic graphs, and the certificate is invariant under
relabeling of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeCapExceeded
from .graphcore import Graph, bits, encode_graph6

DEFAULT_SIZE_CAP = 512


@dataclass(frozen=True)
class CanonicalForm:
    certificate: bytes


class _Backjump(Exception):
    def __init__(self, level: int):
        self.level = level


def _refine(rows: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition.

    Repeatedly splits cells by neighbour counts into active splitter
    cells; new sub-cells are ordered by ascending count, which keeps the
    procedure isomorphism-invariant.
    """
    cells = list(cells)
    queue = list(cells)
    while queue:
        splitter = queue.pop()
        out: list[int] = []
        changed = False
        for cell in cells:
            if cell.bit_count() <= 1:
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in bits(cell):
                d = (rows[v] & splitter).bit_count()
                groups[d] = groups.get(d, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
                continue
            changed = True
            parts = [groups[d] for d in sorted(groups)]
            out.extend(parts)
            queue.extend(parts)
        if changed:
            cells = out
    return cells


def _leaf_permutation(cells: list[int]) -> list[int]:
    """position-of-vertex array for a discrete ordered partition."""
    perm = [0] * len(cells)
    for pos, cell in enumerate(cells):
        perm[cell.bit_length() - 1] = pos
    return perm


def _apply_perm(g: Graph, perm: list[int]) -> Graph:
    rows = [0] * g.order
    for x in range(g.order):
        row = 0
        for y in bits(g.rows[x]):
            row |= 1 << perm[y]
        rows[perm[x]] = row
    return Graph(g.order, rows)


def _target_cell(cells: list[int]) -> int:
    """Index of the first smallest non-singleton cell."""
    best = -1
    best_size = None
    for i, cell in enumerate(cells):
        sz = cell.bit_count()
        if sz > 1 and (best_size is None or sz < best_size):
            best = i
            best_size = sz
    return best


class _OrbitUnion:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def canonical_form(g: Graph, size_cap: int = DEFAULT_SIZE_CAP) -> CanonicalForm:
    """Certificate by individualization-refinement with orbit pruning
    and automorphism backjumping."""
    n = g.order
    if n > size_cap:
        raise SizeCapExceeded(f"canonical_form: order {n} exceeds cap {size_cap}")
    rows = g.rows
    full = (1 << n) - 1

    best: list[bytes | None] = [None]
    first_perm: list[list[int] | None] = [None]
    first_cert: list[bytes | None] = [None]
    first_path: list[list[int]] = [[]]
    path: list[int] = []
    autos: list[list[int]] = []

    def record_leaf(cells: list[int]):
        perm = _leaf_permutation(cells)
        cert = encode_graph6(_apply_perm(g, perm))
        if best[0] is None or cert < best[0]:
            best[0] = cert
        if first_perm[0] is None:
            first_perm[0] = perm
            first_cert[0] = cert
            first_path[0] = list(path)
            return
        if cert == first_cert[0] and perm != first_perm[0]:
            # both permutations produce the same labeled graph, so
            # fperm^-1 . perm is an automorphism of g
            fperm = first_perm[0]
            inv = [0] * n
            for v, pos in enumerate(fperm):
                inv[pos] = v
            autos.append([inv[pos] for pos in perm])
            for lvl, (a, b) in enumerate(zip(first_path[0], path)):
                if a != b:
                    raise _Backjump(lvl)

    def stabilizing_orbits(cells: list[int]) -> _OrbitUnion | None:
        """Orbits of the discovered automorphisms fixing every cell."""
        if not autos:
            return None
        uf = _OrbitUnion(n)
        useful = False
        for a in autos:
            if all(all(cell >> a[v] & 1 for v in bits(cell)) for cell in cells):
                useful = True
                for v in range(n):
                    uf.union(v, a[v])
        return uf if useful else None

    def search(cells: list[int], depth: int):
        cells = _refine(rows, cells)
        t = _target_cell(cells)
        if t < 0:
            record_leaf(cells)
            return
        branched: list[int] = []
        for v in bits(cells[t]):
            if branched:
                uf = stabilizing_orbits(cells)
                if uf is not None and any(uf.find(v) == uf.find(u) for u in branched):
                    continue
            nxt = cells[:t] + [1 << v, cells[t] ^ (1 << v)] + cells[t + 1 :]
            path.append(v)
            try:
                search(nxt, depth + 1)
            except _Backjump as bj:
                if bj.level < depth:
                    path.pop()
                    branched.append(v)
                    raise
            path.pop()
            branched.append(v)

    search([full], 0)
    assert best[0] is not None
    return CanonicalForm(best[0])


def are_isomorphic(g: Graph, h: Graph, size_cap: int = DEFAULT_SIZE_CAP) -> bool:
    """Certificate equality, after cheap invariant shortcuts."""
    if g.order != h.order:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, size_cap) == canonical_form(h, size_cap)
