"""Exact integer linear algebra: characteristic polynomials, integral
spectra, and fraction-free rank.

Everything here runs on arbitrary-precision Python ints; there is no
floating point and no tolerance anywhere.  A matrix whose characteristic
polynomial does not split over the integers is a legitimate outcome,
reported as :class:`NonIntegral`, never approximated.

Matrices are plain nested lists of ints (``IntMatrix`` is an alias).
Characteristic polynomials cost Theta(n^4) big-int work, so operations
refuse to run above a configurable size cap instead of silently crawling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeCapExceeded

IntMatrix = list  # n x n nested lists of ints

DEFAULT_SIZE_CAP = 512


def _check_square(m: IntMatrix) -> int:
    n = len(m)
    if n < 1:
        raise ValueError("matrix must have dimension >= 1")
    for row in m:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return n


def is_symmetric(m: IntMatrix) -> bool:
    n = _check_square(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients in ascending degree order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if len(c) > 1 and c[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def synthetic_div(self, root: int) -> tuple["IntPoly", int]:
        """Divide by (x - root); returns (quotient, remainder)."""
        out = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        out.reverse()
        if not out:
            out = [0]
        return IntPoly(tuple(out)), rem

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return IntPoly(tuple(out))


@dataclass(frozen=True)
class Spectrum:
    """Integer eigenvalues with multiplicities, sorted descending."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        vals = [v for v, _ in self.pairs]
        if vals != sorted(vals, reverse=True) or len(set(vals)) != len(vals):
            raise ValueError("eigenvalues must be distinct and descending")
        if any(m < 1 for _, m in self.pairs):
            raise ValueError("multiplicities must be positive")

    @property
    def n(self) -> int:
        return sum(m for _, m in self.pairs)

    def multiplicity(self, value: int) -> int:
        for v, m in self.pairs:
            if v == value:
                return m
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def power_sum(self, e: int) -> int:
        return sum(m * v**e for v, m in self.pairs)


@dataclass(frozen=True)
class NonIntegral:
    """Characteristic polynomial did not split over the integers.

    ``found`` holds the integer roots extracted so far; ``residual`` is
    the remaining factor with no integer root.
    """

    found: tuple[tuple[int, int], ...]
    residual: IntPoly

    def __bool__(self):
        return False


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact matrix product; skips zero entries, so 0/1 matrices only add."""
    n = len(a)
    out = []
    for i in range(n):
        acc = [0] * n
        for j, v in enumerate(a[i]):
            if v == 0:
                continue
            bj = b[j]
            if v == 1:
                acc = [x + y for x, y in zip(acc, bj)]
            else:
                acc = [x + v * y for x, y in zip(acc, bj)]
        out.append(acc)
    return out


def char_poly(m: IntMatrix, size_cap: int = DEFAULT_SIZE_CAP) -> IntPoly:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.

    The recurrence divides the trace by the step index; that division is
    exact over the integers, so no fractions ever appear.
    """
    n = _check_square(m)
    if n > size_cap:
        raise SizeCapExceeded(f"char_poly: dimension {n} exceeds cap {size_cap}")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = identity_matrix(n)
    for k in range(1, n + 1):
        work = mat_mul(m, work)
        tr = sum(work[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("Faddeev-LeVerrier trace division not exact")
        coeffs[n - k] = q
        if k < n:
            for i in range(n):
                work[i][i] += q
    return IntPoly(tuple(coeffs))


def integral_spectrum(
    m: IntMatrix, size_cap: int = DEFAULT_SIZE_CAP
) -> Spectrum | NonIntegral:
    """Full integer spectrum of a symmetric matrix, or NonIntegral.

    Roots are searched among the divisors of the constant term of each
    deflated factor (bounded by the Gershgorin row-sum radius), and
    multiplicities extracted by repeated synthetic division.
    """
    n = _check_square(m)
    if not is_symmetric(m):
        raise ValueError("integral_spectrum requires a symmetric matrix")
    poly = char_poly(m, size_cap=size_cap)
    bound = max(sum(abs(x) for x in row) for row in m)
    found: list[tuple[int, int]] = []

    mult = 0
    while poly.degree > 0 and poly.coeffs[0] == 0:
        poly, rem = poly.synthetic_div(0)
        assert rem == 0
        mult += 1
    if mult:
        found.append((0, mult))

    for cand in range(-bound, bound + 1):
        if cand == 0:
            continue
        if poly.degree == 0:
            break
        if poly.coeffs[0] % cand:
            continue
        mult = 0
        while poly.degree > 0:
            q, rem = poly.synthetic_div(cand)
            if rem != 0:
                break
            poly = q
            mult += 1
        if mult:
            found.append((cand, mult))

    found.sort(key=lambda p: -p[0])
    if poly.degree > 0:
        return NonIntegral(tuple(found), poly)
    spec = Spectrum(tuple(found))
    tr = sum(m[i][i] for i in range(n))
    if spec.n != n or spec.power_sum(1) != tr:
        raise ArithmeticError("spectrum failed trace cross-check")
    return spec


def rank(m: IntMatrix) -> int:
    """Exact rank by Bareiss fraction-free Gaussian elimination."""
    a = [list(row) for row in m]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    rk = 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if a[r][col]), None)
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
        pv = a[row][col]
        for r in range(row + 1, nrows):
            arc = a[r][col]
            if arc == 0 and pv == prev:
                # row already reduced; scaling by pv/prev == 1 is a no-op
                continue
            ar = a[r]
            ap = a[row]
            for c in range(col + 1, ncols):
                ar[c] = (ar[c] * pv - arc * ap[c]) // prev
            ar[col] = 0
        prev = pv
        rk += 1
        row += 1
        if row == nrows:
            break
    return rk


def add_scaled_identity(m: IntMatrix, scale: int) -> IntMatrix:
    """Return m + scale*I without mutating the input."""
    n = _check_square(m)
    out = [list(row) for row in m]
    for i in range(n):
        out[i][i] += scale
    return out
