"""Closed-form bound evaluation and comparison, in exact arithmetic.

Three quantities are compared for strong grids:

  * the domination number ceil(m/3) * ceil(n/3), a lower bound for any
    eternal strategy;
  * the competing upper bound (eq. 1), parameterised by the greatest
    k <= sqrt(n) with k = 2 (mod 3) (alpha = (k-2)/3 + 1);
  * this package's worst-case upper bound (eq. 2), the strategy bound at
    the worst divisibility residues (alpha = beta = 3, a = n-5, b = m-5).

Everything is exact: rationals are fractions.Fraction, and "real" mode
(which substitutes k = sqrt(n) - 3 and drops the inner ceiling, the way
the published comparison region was drawn) works in the quadratic field
Q(sqrt(n)), with signs decided by comparing squared quantities.  No
floating point anywhere.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, List, Optional, Tuple, Union

from .grid import DomainError


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def gamma_strong(n: int, m: int) -> int:
    """Domination number of the n x m strong grid: ceil(m/3) * ceil(n/3)."""
    if n < 1 or m < 1:
        raise DomainError("grid dimensions must be >= 1")
    return (-(-m // 3)) * (-(-n // 3))


@dataclass(frozen=True)
class Quad:
    """a + b*sqrt(n) with exact rational a, b; closed under +,-,*,/."""

    a: Fraction
    b: Fraction
    n: int

    @staticmethod
    def of(value, n: int) -> "Quad":
        return Quad(Fraction(value), Fraction(0), n)

    @staticmethod
    def sqrt_n(n: int) -> "Quad":
        return Quad(Fraction(0), Fraction(1), n)

    def _check(self, other: "Quad") -> None:
        if self.n != other.n:
            raise DomainError("mixed quadratic fields")

    def __add__(self, other: "Quad") -> "Quad":
        self._check(other)
        return Quad(self.a + other.a, self.b + other.b, self.n)

    def __sub__(self, other: "Quad") -> "Quad":
        self._check(other)
        return Quad(self.a - other.a, self.b - other.b, self.n)

    def __mul__(self, other: "Quad") -> "Quad":
        self._check(other)
        return Quad(
            self.a * other.a + self.b * other.b * self.n,
            self.a * other.b + self.b * other.a,
            self.n,
        )

    def __truediv__(self, other: "Quad") -> "Quad":
        self._check(other)
        denom = other.a * other.a - other.b * other.b * self.n
        if denom == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(n))")
        num = self * Quad(other.a, -other.b, self.n)
        return Quad(num.a / denom, num.b / denom, self.n)

    def sign(self) -> int:
        """Sign decided exactly by squaring: a + b*sqrt(n) compares against
        zero via n vs (a/b)^2."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0) if self.n > 0 else 0
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        t = -a / b  # positive here; expression = b * (sqrt(n) - t)
        bsign = 1 if b > 0 else -1
        if self.n > t * t:
            return bsign
        if self.n < t * t:
            return -bsign
        return 0

    def __lt__(self, other: "Quad") -> bool:
        return (self - other).sign() < 0

    def as_float(self) -> float:
        return float(self.a) + float(self.b) * self.n ** 0.5

    def render(self) -> str:
        if self.b == 0:
            return f"{self.a.numerator}/{self.a.denominator}"
        return (
            f"{self.a.numerator}/{self.a.denominator}"
            f"+{self.b.numerator}/{self.b.denominator}*sqrt({self.n})"
        )


class CeilingMode(enum.Enum):
    EXACT = "exact"
    REAL = "real"


class Winner(enum.Enum):
    OURS = "ours"
    EQ1 = "eq1"


@dataclass(frozen=True)
class BoundParams:
    n: int
    m: int
    k: int
    alpha1: Fraction
    ceiling_mode: CeilingMode


def eq1_k(n: int) -> int:
    """Greatest k <= sqrt(n) with k = 2 (mod 3); k > sqrt(n) - 3."""
    if n < 9:
        raise DomainError("eq1 needs n >= 9 so k >= 2")
    r = isqrt(n)
    while r % 3 != 2:
        r -= 1
    return r


def bound_params(n: int, m: int, mode: CeilingMode = CeilingMode.EXACT) -> BoundParams:
    k = eq1_k(n)
    return BoundParams(n, m, k, Fraction(k - 2, 3) + 1, mode)


def eq1_bound(n: int, m: int, mode: CeilingMode = CeilingMode.EXACT) -> Union[Fraction, Quad]:
    """((m-2a)/(3a-1)) * (ceil((n-2)(3a-3)/9) + 2n + 6a - 6) + 2a(m+n-2a).

    Exact mode uses the integer k and keeps the ceiling; real mode sets
    k = sqrt(n) - 3 (so 3*alpha - 1 = sqrt(n) - 3 + ... reduces inside
    Q(sqrt(n))) and drops the ceiling.
    """
    if n < 9 or m < 9:
        raise DomainError("eq1 bound needs n, m >= 9")
    if mode is CeilingMode.EXACT:
        p = bound_params(n, m, mode)
        a = p.alpha1
        inner = _ceil_frac(Fraction((n - 2), 9) * (3 * a - 3)) + 2 * n + 6 * a - 6
        return Fraction(m - 2 * a, 1) / (3 * a - 1) * inner + 2 * a * (m + n - 2 * a)
    if n == 9:
        # k = sqrt(n) - 3 vanishes: 3*alpha - 1 = 0 and the real-mode bound
        # diverges (the exact-k bound stays finite).
        raise DomainError("real-mode eq1 is singular at n = 9")
    s = Quad.sqrt_n(n)
    one = Quad.of(1, n)

    def q(v) -> Quad:
        return Quad.of(v, n)

    alpha = (s - q(2)) / q(3)
    inner = q(Fraction(n - 2, 9)) * (q(3) * alpha - q(3)) + q(2 * n - 6) + q(6) * alpha
    return (q(m) - q(2) * alpha) / (q(3) * alpha - one) * inner + q(2) * alpha * (
        q(m + n) - q(2) * alpha
    )


def eq2_bound(n: int, m: int) -> Fraction:
    """(m-5)(n-5)/7 + 8(m+n-11)/7 + 3*ceil(m/2) + 3*ceil(n/2) - 9."""
    if n < 9 or m < 9:
        raise DomainError("eq2 bound needs n, m >= 9")
    return (
        Fraction((m - 5) * (n - 5), 7)
        + Fraction(8 * (m + n - 11), 7)
        + 3 * (-(-m // 2))
        + 3 * (-(-n // 2))
        - 9
    )


@dataclass(frozen=True)
class ComparisonCell:
    n: int
    m: int
    value_eq1: Optional[Union[Fraction, Quad]]  # None: divergent (real mode, n=9)
    value_eq2: Fraction
    winner: Winner


def _less(a: Fraction, b: Union[Fraction, Quad]) -> bool:
    if isinstance(b, Quad):
        return (b - Quad.of(a, b.n)).sign() > 0
    return a < b


def compare_cell(n: int, m: int, mode: CeilingMode = CeilingMode.EXACT) -> ComparisonCell:
    e2 = eq2_bound(n, m)
    if mode is CeilingMode.REAL and n == 9:
        # Divergent competitor; ours wins by the limit.
        return ComparisonCell(n, m, None, e2, Winner.OURS)
    e1 = eq1_bound(n, m, mode)
    winner = Winner.OURS if _less(e2, e1) else Winner.EQ1
    return ComparisonCell(n, m, e1, e2, winner)


def scan_region(
    n_range: Tuple[int, int],
    m_range: Tuple[int, int],
    mode: CeilingMode = CeilingMode.EXACT,
    n_step: int = 1,
    m_step: int = 1,
) -> List[ComparisonCell]:
    if n_range[0] < 9 or m_range[0] < 9:
        raise DomainError("scan requires n, m >= 9")
    cells = []
    for n in range(n_range[0], n_range[1] + 1, n_step):
        for m in range(m_range[0], m_range[1] + 1, m_step):
            cells.append(compare_cell(n, m, mode))
    return cells


def _render_value(v: Optional[Union[Fraction, Quad]]) -> str:
    if v is None:
        return "inf"
    if isinstance(v, Quad):
        return v.render()
    return f"{v.numerator}/{v.denominator}"


def cells_to_csv(cells: Iterable[ComparisonCell]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "m", "eq1", "eq2", "winner"])
    for c in cells:
        w.writerow([c.n, c.m, _render_value(c.value_eq1), _render_value(c.value_eq2), c.winner.value])
    return buf.getvalue()


def eq2_slope(n: int) -> Fraction:
    """d(eq2)/dm with the ceiling averaged out: (n+3)/7 + 3/2."""
    return Fraction(n + 3, 7) + Fraction(3, 2)


def eq1_slope(n: int) -> Quad:
    """d(eq1)/dm in real mode: inner(n)/(3a-1) + 2a with a = (sqrt(n)-2)/3."""
    s = Quad.sqrt_n(n)

    def q(v) -> Quad:
        return Quad.of(v, n)

    alpha = (s - q(2)) / q(3)
    inner = q(Fraction(n - 2, 9)) * (q(3) * alpha - q(3)) + q(2 * n - 6) + q(6) * alpha
    return inner / (q(3) * alpha - q(1)) + q(2) * alpha


def ours_wins_asymptotically(n: int) -> bool:
    """Is the eq2 growth rate in m strictly below eq1's at this n?"""
    if n == 9:
        return True  # eq1's real-mode slope diverges as n -> 9
    diff = eq1_slope(n) - Quad.of(eq2_slope(n), n)
    return diff.sign() > 0


def asymptotic_threshold(n_cap: int = 20000) -> int:
    """Largest n (up to n_cap) where eq2 grows strictly slower in m.

    The crossover is unique in practice; the scan asserts there is no
    win beyond the returned value within the cap.
    """
    best = None
    for n in range(9, n_cap + 1):
        if ours_wins_asymptotically(n):
            best = n
    if best is None:
        raise DomainError("no winning n found below cap")
    if best == n_cap:
        raise DomainError("threshold not below cap; raise n_cap")
    return best
