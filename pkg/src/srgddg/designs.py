"""Symmetric 2-designs: verification, small builders, and the parameter
map used when attaching a coclique to a divisible design graph.

Designs are stored as explicit incidence bitsets (a block is an int
bitset over the points), which is comfortable at desk scale.  The
Bruck-Ryser-Chowla test is available behind :func:`bruck_ryser_chowla`
but never used to reject anything automatically; feasibility filtering
elsewhere relies only on integrality and the lambda*(v-1) = k*(k-1)
identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from .graphcore import bits, mask_of

__all__ = [
    "SymmetricDesign",
    "Violation",
    "verify_design",
    "complement_design",
    "all_ksubsets_design",
    "dual_design",
    "required_design_params",
    "bruck_ryser_chowla",
]


@dataclass(frozen=True)
class SymmetricDesign:
    """Point/block incidence structure with #blocks == #points.

    ``blocks[i]`` is the bitset of points on block i.  ``k_blk`` and
    ``lam`` are the nominal parameters; :func:`verify_design` checks that
    the incidences actually realize a symmetric 2-(v, k, lam) design.
    """

    v_pts: int
    blocks: tuple[int, ...]
    k_blk: int
    lam: int

    def __post_init__(self):
        if self.v_pts < 1:
            raise ValueError("design needs at least one point")
        if len(self.blocks) != self.v_pts:
            raise ValueError(
                f"symmetric design needs {self.v_pts} blocks, got {len(self.blocks)}"
            )
        full = (1 << self.v_pts) - 1
        for i, b in enumerate(self.blocks):
            if b & ~full:
                raise ValueError(f"block {i} mentions a point outside 0..{self.v_pts - 1}")

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.v_pts, self.k_blk, self.lam)

    def block_points(self, i: int) -> list[int]:
        return list(bits(self.blocks[i]))


def design_from_blocks(blocks: list[list[int]], v_pts: int | None = None) -> SymmetricDesign:
    """Build a design from explicit point lists, deriving k and lambda."""
    if not blocks:
        raise ValueError("no blocks given")
    if v_pts is None:
        v_pts = max(max(b) for b in blocks if b) + 1
    masks = tuple(mask_of(b) for b in blocks)
    k_blk = masks[0].bit_count()
    if len(masks) > 1:
        lam = (masks[0] & masks[1]).bit_count()
    else:
        lam = 0
    return SymmetricDesign(v_pts, masks, k_blk, lam)


@dataclass(frozen=True)
class Violation:
    """A failed design axiom, naming the offending pair."""

    axiom: str
    detail: tuple

    def __bool__(self):
        return False


def verify_design(d: SymmetricDesign) -> bool | Violation:
    """Brute-force check of every symmetric 2-design axiom."""
    v, k, lam = d.params
    for i, b in enumerate(d.blocks):
        if b.bit_count() != k:
            return Violation("block size", (i, b.bit_count(), k))
    for p in range(v):
        rep = sum(1 for b in d.blocks if b >> p & 1)
        if rep != k:
            return Violation("point replication", (p, rep, k))
    for p, q in combinations(range(v), 2):
        cov = sum(1 for b in d.blocks if b >> p & 1 and b >> q & 1)
        if cov != lam:
            return Violation("pair coverage", (p, q, cov, lam))
    for i, j in combinations(range(len(d.blocks)), 2):
        meet = (d.blocks[i] & d.blocks[j]).bit_count()
        if meet != lam:
            return Violation("block intersection", (i, j, meet, lam))
    if lam * (v - 1) != k * (k - 1):
        return Violation("counting identity", (v, k, lam))
    return True


def complement_design(d: SymmetricDesign) -> SymmetricDesign:
    """Replace each block by its complement: 2-(v, v-k, v-2k+lam)."""
    v, k, lam = d.params
    new_lam = v - 2 * k + lam
    if new_lam <= 0:
        raise ValueError(f"complement design is degenerate (lambda = {new_lam})")
    if k > v - 2:
        raise ValueError("complement needs k <= v - 2")
    full = (1 << v) - 1
    return SymmetricDesign(v, tuple(full ^ b for b in d.blocks), v - k, new_lam)


def all_ksubsets_design(v: int) -> SymmetricDesign:
    """The 2-(v, v-1, v-2) design whose blocks are all (v-1)-subsets."""
    if v < 3:
        raise ValueError("all_ksubsets_design needs v >= 3")
    full = (1 << v) - 1
    return SymmetricDesign(v, tuple(full ^ (1 << p) for p in range(v)), v - 1, v - 2)


def dual_design(d: SymmetricDesign) -> SymmetricDesign:
    """Transpose the incidence matrix (points <-> blocks)."""
    cols = []
    for p in range(d.v_pts):
        col = 0
        for i, b in enumerate(d.blocks):
            col |= (b >> p & 1) << i
        cols.append(col)
    return SymmetricDesign(d.v_pts, tuple(cols), d.k_blk, d.lam)


def required_design_params(n: int, s: int) -> tuple[int, int, int]:
    """Design parameters (m, -s, (-s)(n+s)/n) demanded by the coclique
    attachment for a divisible design graph built on the (n, s) family.

    Raises ValueError if either m or the design lambda is not an integer.
    """
    if s >= 0 or n + s <= 0:
        raise ValueError("need s < 0 and n + s > 0")
    m, rem = divmod((-s) * (n - 1), n + s)
    if rem:
        raise ValueError(f"class count (-s)(n-1)/(n+s) not integral for (n={n}, s={s})")
    lam, rem = divmod((-s) * (n + s), n)
    if rem:
        raise ValueError(f"design lambda (-s)(n+s)/n not integral for (n={n}, s={s})")
    return (m, -s, lam)


# -- Bruck-Ryser-Chowla (advisory only) ---------------------------------


def _factor(n: int) -> dict[int, int]:
    n = abs(n)
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _hilbert_symbol(a: int, b: int, p: int) -> int:
    """Hilbert symbol (a, b)_p for a prime p or p == -1 (the real place)."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if p == -1:
        return -1 if (a < 0 and b < 0) else 1
    alpha = 0
    while a % p == 0:
        a //= p
        alpha += 1
    beta = 0
    while b % p == 0:
        b //= p
        beta += 1
    if p == 2:
        e = ((a - 1) // 2) * ((b - 1) // 2) + alpha * ((b * b - 1) // 8) + beta * ((a * a - 1) // 8)
        return -1 if e % 2 else 1
    e = alpha * beta * ((p - 1) // 2)
    sign = (-1) ** (e % 2)
    if beta % 2:
        sign *= _legendre(a, p)
    if alpha % 2:
        sign *= _legendre(b, p)
    return sign


def _isotropic(a: int, b: int) -> bool:
    """Whether a*x^2 + b*y^2 = z^2 has a nontrivial rational solution."""
    if a == 0 or b == 0:
        return True
    places = {-1, 2}
    places.update(_factor(a))
    places.update(_factor(b))
    return all(_hilbert_symbol(a, b, p) == 1 for p in places)


def bruck_ryser_chowla(v: int, k: int, lam: int) -> bool:
    """Bruck-Ryser-Chowla feasibility for a symmetric 2-(v, k, lam) design.

    Returns True when the parameters survive the test; advisory only.
    """
    if lam * (v - 1) != k * (k - 1):
        return False
    order = k - lam
    if order <= 0:
        return False
    if v % 2 == 0:
        r = isqrt(order)
        return r * r == order
    sign = -1 if ((v - 1) // 2) % 2 else 1
    return _isotropic(order, sign * lam)
