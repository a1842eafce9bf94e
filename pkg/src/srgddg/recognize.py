"""Graph classification: regular / strongly regular / Deza / divisible
design, plus canonical-partition recovery and equitable quotient matrices.

All recognition is pairwise common-neighbour counting on bitset rows
(row AND + popcount); no matrix multiplication is involved.  Recognition
functions return falsy result objects (NotSrg, NotDeza, NotDdg, ...)
carrying a reason and a witness instead of raising, so callers can
classify arbitrary graphs without exception plumbing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import NoHoffmanBound
from .graphcore import Graph, VertexSet, bits

__all__ = [
    "SrgParams",
    "NotSrg",
    "srg_params",
    "DezaParams",
    "NotDeza",
    "deza_params",
    "DdgParams",
    "CanonicalPartition",
    "NotDdg",
    "ddg_recognize",
    "QuotientMatrix",
    "NotEquitable",
    "quotient_matrix",
    "srg_params_from_tuple",
]


# -- strongly regular ---------------------------------------------------


@dataclass(frozen=True)
class SrgParams:
    """Parameters of a strongly regular graph with integral spectrum.

    r > s are the non-principal eigenvalues, f and g their
    multiplicities, and c the Delsarte-Hoffman coclique bound
    v*s/(s-k), kept as an exact fraction.
    """

    v: int
    k: int
    lam: int
    mu: int
    r: int
    s: int
    f: int
    g: int
    c: Fraction

    @property
    def primitive(self) -> bool:
        """Connected with connected complement: 0 < mu < k."""
        return 0 < self.mu < self.k

    @property
    def tuple4(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    def hoffman_size(self) -> int:
        """The coclique bound as an int; raises if it is not integral."""
        if self.c.denominator != 1:
            raise NoHoffmanBound(f"coclique bound {self.c} is not an integer")
        return int(self.c)

    def spectrum_pairs(self) -> tuple[tuple[int, int], ...]:
        return ((self.k, 1), (self.r, self.f), (self.s, self.g))


@dataclass(frozen=True)
class NotSrg:
    reason: str
    pair: tuple[int, int] | None = None

    def __bool__(self):
        return False


def srg_params_from_tuple(v: int, k: int, lam: int, mu: int) -> SrgParams | NotSrg:
    """Derive spectral data from a bare (v, k, lambda, mu) tuple."""
    if k * (k - lam - 1) != mu * (v - k - 1):
        return NotSrg("counting identity k(k-l-1) = mu(v-k-1) fails")
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    root = isqrt(disc)
    if root * root != disc or (lam - mu + root) % 2:
        return NotSrg("eigenvalues are irrational (conference-type parameters)")
    r = (lam - mu + root) // 2
    s = (lam - mu - root) // 2
    if r == s:
        return NotSrg("eigenvalues coincide (complete multipartite degenerate)")
    num = -k - (v - 1) * s
    f, rem = divmod(num, r - s)
    if rem:
        return NotSrg("eigenvalue multiplicities are not integral")
    g = v - 1 - f
    if f < 0 or g < 0:
        return NotSrg("negative multiplicity")
    return SrgParams(v, k, lam, mu, r, s, f, g, Fraction(v * s, s - k))


def srg_params(g: Graph) -> SrgParams | NotSrg:
    """Check strong regularity by exhaustive pair counting.

    Adjacent pairs must share lambda neighbours and non-adjacent pairs
    mu; the first violating pair is reported.  Disconnected input and
    complete/edgeless graphs are rejected up front.
    """
    n = g.order
    if n < 2:
        return NotSrg("graph too small")
    k = g.regular_degree()
    if k is None:
        return NotSrg("not regular")
    if k == 0:
        return NotSrg("edgeless")
    if k == n - 1:
        return NotSrg("complete")
    if not g.is_connected():
        return NotSrg("disconnected")
    rows = g.rows
    lam = mu = None
    for x in range(n):
        rx = rows[x]
        for y in range(x + 1, n):
            cnt = (rx & rows[y]).bit_count()
            if rx >> y & 1:
                if lam is None:
                    lam = cnt
                elif cnt != lam:
                    return NotSrg("adjacent pairs disagree on common neighbours", (x, y))
            else:
                if mu is None:
                    mu = cnt
                elif cnt != mu:
                    return NotSrg("non-adjacent pairs disagree on common neighbours", (x, y))
    assert lam is not None and mu is not None
    return srg_params_from_tuple(n, k, lam, mu)


# -- Deza ---------------------------------------------------------------


@dataclass(frozen=True)
class DezaParams:
    """Regular graph whose common-neighbour counts take at most two
    values b >= a."""

    v: int
    k: int
    b: int
    a: int


@dataclass(frozen=True)
class NotDeza:
    reason: str
    counts: tuple[int, ...] = ()

    def __bool__(self):
        return False


def deza_params(g: Graph) -> DezaParams | NotDeza:
    n = g.order
    if n < 2:
        return NotDeza("graph too small")
    k = g.regular_degree()
    if k is None:
        return NotDeza("not regular")
    if k == 0 or k == n - 1:
        return NotDeza("complete or edgeless")
    rows = g.rows
    seen: set[int] = set()
    for x in range(n):
        rx = rows[x]
        for y in range(x + 1, n):
            seen.add((rx & rows[y]).bit_count())
            if len(seen) > 2:
                return NotDeza("more than two distinct counts", tuple(sorted(seen)))
    vals = sorted(seen, reverse=True)
    if len(vals) == 1:
        vals.append(vals[0])
    return DezaParams(n, k, vals[0], vals[1])


# -- divisible design ----------------------------------------------------


@dataclass(frozen=True)
class DdgParams:
    V: int
    K: int
    lambda1: int
    lambda2: int
    m: int
    n: int

    def __post_init__(self):
        if self.V != self.m * self.n:
            raise ValueError("V must equal m*n")

    @property
    def proper(self) -> bool:
        return self.m > 1 and self.n > 1 and self.lambda1 != self.lambda2

    @property
    def tuple6(self) -> tuple[int, int, int, int, int, int]:
        return (self.V, self.K, self.lambda1, self.lambda2, self.m, self.n)


@dataclass(frozen=True)
class CanonicalPartition:
    """Disjoint classes of equal size covering all vertices, stored as
    bitsets ordered by smallest member."""

    classes: tuple[VertexSet, ...]

    @property
    def m(self) -> int:
        return len(self.classes)

    @property
    def n(self) -> int:
        return self.classes[0].bit_count()

    def class_of(self, x: int) -> int:
        for i, cl in enumerate(self.classes):
            if cl >> x & 1:
                return i
        raise ValueError(f"vertex {x} not covered")

    def validate(self, order: int) -> None:
        union = 0
        total = 0
        size = self.classes[0].bit_count()
        for cl in self.classes:
            if cl.bit_count() != size:
                raise ValueError("classes have unequal sizes")
            union |= cl
            total += cl.bit_count()
        if union != (1 << order) - 1 or total != order:
            raise ValueError("classes do not partition the vertex set")


@dataclass(frozen=True)
class NotDdg:
    reason: str
    srg_note: bool = False

    def __bool__(self):
        return False


def ddg_recognize(g: Graph) -> list[tuple[DdgParams, CanonicalPartition]] | NotDdg:
    """Recover every proper divisible-design structure of a graph.

    Needs the graph to be Deza with counts {b, a}; for each assignment
    of lambda1 the same-class relation (count == lambda1, plus identity)
    must be an equivalence with classes of one common size.  Both
    assignments can succeed, so all witnesses are returned.
    """
    dz = deza_params(g)
    if not dz:
        return NotDdg(f"not a Deza graph: {dz.reason}")
    if dz.b == dz.a:
        return NotDdg(
            "all pairs share the same count: graph is strongly regular "
            "with lambda = mu, an improper divisible design",
            srg_note=True,
        )
    n_verts = g.order
    rows = g.rows
    witnesses: list[tuple[DdgParams, CanonicalPartition]] = []
    for lam1, lam2 in ((dz.b, dz.a), (dz.a, dz.b)):
        mates = []
        for x in range(n_verts):
            rx = rows[x]
            mask = 1 << x
            for y in range(n_verts):
                if y != x and (rx & rows[y]).bit_count() == lam1:
                    mask |= 1 << y
            mates.append(mask)
        # equivalence iff every member of a candidate class sees the same class
        ok = True
        for x in range(n_verts):
            mx = mates[x]
            for y in bits(mx):
                if mates[y] != mx:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        classes = sorted(set(mates), key=lambda cl: (cl & -cl).bit_length())
        size = classes[0].bit_count()
        if any(cl.bit_count() != size for cl in classes):
            continue
        m = len(classes)
        part = CanonicalPartition(tuple(classes))
        part.validate(n_verts)
        witnesses.append((DdgParams(n_verts, dz.k, lam1, lam2, m, size), part))
    if not witnesses:
        return NotDdg("same-count relation is not an equivalence with equal classes")
    return witnesses


# -- equitable quotient --------------------------------------------------


@dataclass(frozen=True)
class QuotientMatrix:
    R: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.R)

    def is_constant(self, value: int) -> bool:
        return all(x == value for row in self.R for x in row)


@dataclass(frozen=True)
class NotEquitable:
    vertex: int
    class_index: int

    def __bool__(self):
        return False


def quotient_matrix(g: Graph, p: CanonicalPartition) -> QuotientMatrix | NotEquitable:
    """Row-sum matrix of the partition, or the violating (vertex, class).

    Every vertex of class i must have the same number of neighbours in
    class j, for all ordered pairs (i, j).
    """
    p.validate(g.order)
    R = []
    for i, cl_i in enumerate(p.classes):
        members = list(bits(cl_i))
        row = []
        for j, cl_j in enumerate(p.classes):
            counts = [(g.rows[x] & cl_j).bit_count() for x in members]
            first = counts[0]
            for x, cnt in zip(members, counts):
                if cnt != first:
                    return NotEquitable(x, j)
            row.append(first)
        R.append(tuple(row))
    return QuotientMatrix(tuple(R))
