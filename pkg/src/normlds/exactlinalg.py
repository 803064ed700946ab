"""Exact integer linear algebra on small dense matrices.

Everything here is fraction-free: determinants via Bareiss elimination,
column-style Hermite normal form, Smith normal form with unimodular
transformation witnesses, completion of a primitive vector to a basis of Z^n,
and exact inversion of unimodular matrices. Intended for n <= 4 but written
for general n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("rows must all have the same length")
            for x in row:
                if not isinstance(x, int):
                    raise ValueError(f"entries must be exact integers, got {x!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> "IntMatrix":
        n = len(diag)
        return cls(tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = other.transpose().entries
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.entries
            )
        )

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product self . vec."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.entries)

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


@dataclass(frozen=True)
class HnfDecomposition:
    """Column-style Hermite form: b @ c = h with h lower triangular, c unimodular."""

    h: IntMatrix
    c: IntMatrix


@dataclass(frozen=True)
class SnfDecomposition:
    """Smith form witnesses: x @ b @ y = diag(d), x and y unimodular, d[0] | d[1] | ..."""

    x: IntMatrix
    d: tuple[int, ...]
    y: IntMatrix


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant requires a square matrix")
    n = m.rows
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss: the division by the previous pivot is exact
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _minor(m: IntMatrix, drop_row: int, drop_col: int) -> IntMatrix:
    return IntMatrix(
        tuple(
            tuple(x for j, x in enumerate(row) if j != drop_col)
            for i, row in enumerate(m.entries)
            if i != drop_row
        )
    )


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a matrix with determinant +-1 (adjugate method)."""
    d = det(m)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    n = m.rows
    if n == 1:
        return IntMatrix.from_rows([[d]])
    adj = [
        [((-1) ** (i + j)) * det(_minor(m, j, i)) for j in range(n)]
        for i in range(n)
    ]
    inv = IntMatrix.from_rows([[x * d for x in row] for row in adj])
    if (inv @ m) != IntMatrix.identity(n):
        raise AssertionError("inverse verification failed")
    return inv


def hnf_column(b: IntMatrix) -> HnfDecomposition:
    """Column Hermite normal form.

    Returns (h, c) with b @ c = h lower triangular and c unimodular. Pivots are
    positive and entries left of each pivot are reduced into [0, pivot).
    Requires full row rank.
    """
    rows, cols = b.rows, b.cols
    if rows > cols:
        raise ValueError("full row rank requires rows <= cols")
    h = [list(row) for row in b.entries]
    c = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_cols(j1: int, j2: int) -> None:
        for r in h:
            r[j1], r[j2] = r[j2], r[j1]
        for r in c:
            r[j1], r[j2] = r[j2], r[j1]

    def addmul_col(dst: int, src: int, q: int) -> None:
        for r in h:
            r[dst] += q * r[src]
        for r in c:
            r[dst] += q * r[src]

    def negate_col(j: int) -> None:
        for r in h:
            r[j] = -r[j]
        for r in c:
            r[j] = -r[j]

    for i in range(rows):
        while True:
            nonzero = [j for j in range(i, cols) if h[i][j] != 0]
            if not nonzero:
                raise ValueError(f"rank-deficient input (row {i})")
            jmin = min(nonzero, key=lambda j: abs(h[i][j]))
            if jmin != i:
                swap_cols(i, jmin)
            done = True
            for j in range(i + 1, cols):
                if h[i][j] != 0:
                    q = h[i][j] // h[i][i]
                    addmul_col(j, i, -q)
                    if h[i][j] != 0:
                        done = False
            if done:
                break
        if h[i][i] < 0:
            negate_col(i)
        for j in range(i):
            q = h[i][j] // h[i][i]
            if q:
                addmul_col(j, i, -q)

    hm = IntMatrix.from_rows(h)
    cm = IntMatrix.from_rows(c)
    if (b @ cm) != hm:
        raise AssertionError("Hermite witness verification failed")
    return HnfDecomposition(hm, cm)


def snf(b: IntMatrix) -> SnfDecomposition:
    """Smith normal form with witnesses.

    Returns (x, d, y) with x @ b @ y = diag(d), x and y unimodular, and the
    diagonal nonnegative with d[i] | d[i+1] (trailing zeros allowed).
    """
    if b.rows != b.cols:
        raise ValueError("Smith form implemented for square matrices")
    n = b.rows
    a = [list(row) for row in b.entries]
    x = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    y = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i1: int, i2: int) -> None:
        a[i1], a[i2] = a[i2], a[i1]
        x[i1], x[i2] = x[i2], x[i1]

    def swap_cols(j1: int, j2: int) -> None:
        for r in a:
            r[j1], r[j2] = r[j2], r[j1]
        for r in y:
            r[j1], r[j2] = r[j2], r[j1]

    def addmul_row(dst: int, src: int, q: int) -> None:
        a[dst] = [p + q * r for p, r in zip(a[dst], a[src])]
        x[dst] = [p + q * r for p, r in zip(x[dst], x[src])]

    def addmul_col(dst: int, src: int, q: int) -> None:
        for r in a:
            r[dst] += q * r[src]
        for r in y:
            r[dst] += q * r[src]

    def negate_row(i: int) -> None:
        a[i] = [-v for v in a[i]]
        x[i] = [-v for v in x[i]]

    for s in range(n):
        while True:
            # locate a nonzero entry of least magnitude in the trailing block
            pos = None
            best = 0
            for i in range(s, n):
                for j in range(s, n):
                    v = abs(a[i][j])
                    if v != 0 and (pos is None or v < best):
                        pos, best = (i, j), v
            if pos is None:
                break  # trailing block is zero; remaining diagonal stays 0
            if pos != (s, s):
                if pos[0] != s:
                    swap_rows(s, pos[0])
                if pos[1] != s:
                    swap_cols(s, pos[1])
            # clear column s and row s by Euclidean steps
            dirty = False
            for i in range(s + 1, n):
                if a[i][s] != 0:
                    q = a[i][s] // a[s][s]
                    addmul_row(i, s, -q)
                    if a[i][s] != 0:
                        dirty = True
            for j in range(s + 1, n):
                if a[s][j] != 0:
                    q = a[s][j] // a[s][s]
                    addmul_col(j, s, -q)
                    if a[s][j] != 0:
                        dirty = True
            if dirty:
                continue
            # enforce the divisibility chain: pivot must divide the whole block
            offender = None
            for i in range(s + 1, n):
                for j in range(s + 1, n):
                    if a[i][j] % a[s][s] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            addmul_row(s, offender, 1)
        if a[s][s] < 0:
            negate_row(s)

    diag = tuple(a[i][i] for i in range(n))
    xm = IntMatrix.from_rows(x)
    ym = IntMatrix.from_rows(y)
    if (xm @ b @ ym) != IntMatrix.diagonal(list(diag)):
        raise AssertionError("Smith witness verification failed")
    for i in range(n - 1):
        if diag[i] == 0:
            if diag[i + 1] != 0:
                raise AssertionError("zero before nonzero in Smith diagonal")
        elif diag[i + 1] % diag[i] != 0:
            raise AssertionError("Smith divisibility chain broken")
    return SnfDecomposition(xm, diag, ym)


def complete_primitive(v: Sequence[int]) -> IntMatrix:
    """Complete a primitive integer vector to a unimodular matrix.

    Returns u with det(u) = 1 whose first column equals v. Deterministic:
    built from a fixed bottom-up sweep of extended-gcd row operations.
    Raises ValueError unless gcd(v) = 1.
    """
    vec = [int(a) for a in v]
    n = len(vec)
    if n == 0:
        raise ValueError("empty vector")
    if math.gcd(*vec) != 1:
        raise ValueError(f"vector {tuple(vec)} is not primitive")
    # build u with u . v = e1 as a product of 2x2 extended-gcd blocks
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    w = list(vec)
    for i in range(n - 1, 0, -1):
        a, b = w[i - 1], w[i]
        if b == 0:
            continue
        g, s, t = xgcd(a, b)
        # rows i-1 and i: [[s, t], [-b/g, a/g]] has determinant 1
        ri, rj = u[i - 1], u[i]
        u[i - 1] = [s * p + t * q for p, q in zip(ri, rj)]
        u[i] = [(-b // g) * p + (a // g) * q for p, q in zip(ri, rj)]
        w[i - 1], w[i] = g, 0
    if w[0] != 1:
        # gcd sweep must terminate at 1 for a primitive vector
        raise AssertionError("primitive completion sweep failed")
    result = inverse_unimodular(IntMatrix.from_rows(u))
    if result.column(0) != tuple(vec):
        raise AssertionError("completion does not start with the input vector")
    return result
