"""Coordinate sequences of beta * eps^k over a module basis, and their checks.

generate() produces the integer coordinate rows together with the recurrence
inherited from the minimal polynomial of eps. The checks are deliberately
independent of the generator: verify_lds is a brute-force divisor scan and
minimal_order fits least-order recurrences by exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .numberfield import FieldElement, ModuleBasis, min_poly, solve_linear


@dataclass
class SequenceReport:
    """Integer coordinate rows x_i(k) (row k, column i) plus their recurrence."""

    terms: list[list[int]]
    charpoly: tuple[int, ...]  # ascending, monic; the recurrence all columns satisfy
    beta: FieldElement | None = None
    eps: FieldElement | None = None
    basis: ModuleBasis | None = None
    minimality: list["MinimalRecurrence"] | None = None
    lds_verdicts: list["LdsVerdict"] | None = None

    @property
    def kmax(self) -> int:
        return len(self.terms) - 1

    @property
    def ncols(self) -> int:
        return len(self.terms[0])

    def column(self, i: int) -> list[int]:
        """Column i, 1-indexed to match the x_i naming."""
        return [row[i - 1] for row in self.terms]


class MinimalRecurrence(NamedTuple):
    order: int
    coeffs: tuple[Fraction, ...]  # x(k+d) = sum coeffs[j] * x(k+d-1-j)


@dataclass(frozen=True)
class LdsVerdict:
    ok: bool
    witness: tuple[int, int] | None = None  # first (n, m) with n | m but b(n) does not divide b(m)


def generate(beta: FieldElement, eps: FieldElement, w: ModuleBasis, kmax: int) -> SequenceReport:
    """Exact coordinates of beta * eps^k over w for k = 0..kmax.

    Every row must come out integral; a fractional coordinate means beta is not
    in the module or eps does not stabilize it, and raises ValueError.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    if beta.field != w.field or eps.field != w.field:
        raise ValueError("beta, eps and basis must share one field")
    mp = min_poly(eps)
    charpoly = []
    for c in mp:
        if c.denominator != 1:
            raise ValueError("eps must be an algebraic integer")
        charpoly.append(int(c))
    rows = []
    current = beta
    for k in range(kmax + 1):
        coords = w.coords(current)
        row = []
        for c in coords:
            if c.denominator != 1:
                raise ValueError(
                    f"non-integral coordinate at k={k}: beta*eps^k is outside the module"
                )
            row.append(int(c))
        rows.append(row)
        current = current * eps
    return SequenceReport(terms=rows, charpoly=tuple(charpoly), beta=beta, eps=eps, basis=w)


def verify_recurrence(report: SequenceReport) -> bool:
    """Whether every column satisfies the report's characteristic recurrence."""
    d = len(report.charpoly) - 1
    if report.kmax < d:
        raise ValueError("not enough terms to test the recurrence")
    # f = X^d - s_1 X^(d-1) - ... - s_d, so s_j = -charpoly[d - j]
    s = [-report.charpoly[d - j] for j in range(1, d + 1)]
    for i in range(1, report.ncols + 1):
        col = report.column(i)
        for k in range(len(col) - d):
            if col[k + d] != sum(s[j - 1] * col[k + d - j] for j in range(1, d + 1)):
                return False
    return True


def minimal_order(column: Sequence[int], max_order: int | None = None) -> MinimalRecurrence:
    """Least-order homogeneous linear recurrence fitting all given terms.

    Searches rational-coefficient recurrences by exact consistency of the shifted
    linear system, so minimality does not depend on integrality. The certifiable
    orders are bounded by (len(column) - 2) // 2; asking beyond that raises.
    """
    terms = [int(x) for x in column]
    certifiable = (len(terms) - 2) // 2
    if max_order is None:
        max_order = certifiable
    if max_order > certifiable:
        raise ValueError(
            f"{len(terms)} terms certify order at most {certifiable}, not {max_order}"
        )
    if all(x == 0 for x in terms):
        return MinimalRecurrence(0, ())
    for d in range(1, max_order + 1):
        # unknowns c_1..c_d with x(k+d) = sum_j c_j x(k+d-j) for every window
        cols = [
            [Fraction(terms[k + d - j]) for k in range(len(terms) - d)]
            for j in range(1, d + 1)
        ]
        rhs = [Fraction(terms[k + d]) for k in range(len(terms) - d)]
        sol = solve_linear(cols, rhs)
        if sol is not None:
            return MinimalRecurrence(d, tuple(sol))
    raise ValueError(f"no recurrence of order <= {max_order} fits the terms")


def divides(a: int, b: int) -> bool:
    """Divisibility over Z with the convention that 0 divides only 0."""
    if a == 0:
        return b == 0
    return b % a == 0


def verify_lds(column: Sequence[int], nmax: int) -> LdsVerdict:
    """Scan all pairs n | m with 1 <= n < m <= nmax; the index is the position.

    column[k] is b(k); entries through index nmax must be present. Returns the
    first failing pair scanning m upward, or a clean verdict.
    """
    terms = list(column)
    if len(terms) <= nmax:
        raise ValueError(f"need terms through index {nmax}, got {len(terms)}")
    for m in range(2, nmax + 1):
        for n in range(1, m):
            if m % n == 0 and not divides(terms[n], terms[m]):
                return LdsVerdict(False, (n, m))
    return LdsVerdict(True, None)


def analyze(report: SequenceReport, nmax: int | None = None) -> SequenceReport:
    """Fill per-column minimality and divisibility verdicts in place."""
    if nmax is None:
        nmax = report.kmax
    report.minimality = [minimal_order(report.column(i)) for i in range(1, report.ncols + 1)]
    report.lds_verdicts = [
        verify_lds(report.column(i), min(nmax, report.kmax)) for i in range(1, report.ncols + 1)
    ]
    return report
