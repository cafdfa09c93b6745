"""Certified log2 bounds and interval comparisons.

The only non-integer comparisons in the whole artifact are of the form
"integer vs product/quotient of logs of integers" (quasirandomness and
the abelian-section lower bound).  They are decided with rational
interval arithmetic around correctly rounded Decimal logarithms, with
outward rounding: a check only *fails* when the violation is certain.
"""

from __future__ import annotations

import decimal
from fractions import Fraction


def log2_bounds(x: int | Fraction, digits: int = 40) -> tuple[Fraction, Fraction]:
    """Certified (lower, upper) rational bounds on log2(x), x > 0."""
    num, den = (x.numerator, x.denominator) if isinstance(x, Fraction) else (x, 1)
    assert num > 0 and den > 0
    lo = _ln_dir(num, digits, down=True) - _ln_dir(den, digits, down=False)
    hi = _ln_dir(num, digits, down=False) - _ln_dir(den, digits, down=True)
    ln2_lo = _ln_dir(2, digits, down=True)
    ln2_hi = _ln_dir(2, digits, down=False)
    return _div_down(lo, ln2_hi, ln2_lo), _div_up(hi, ln2_lo, ln2_hi)


def _ln_dir(x: int, digits: int, down: bool) -> Fraction:
    """Fraction bound on ln(x) in the requested direction."""
    if x == 1:
        return Fraction(0)
    rounding = decimal.ROUND_FLOOR if down else decimal.ROUND_CEILING
    with decimal.localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = rounding
        val = decimal.Decimal(x).ln()
    return Fraction(val)


def _div_down(a: Fraction, pos_hi: Fraction, pos_lo: Fraction) -> Fraction:
    return a / pos_hi if a >= 0 else a / pos_lo


def _div_up(a: Fraction, pos_lo: Fraction, pos_hi: Fraction) -> Fraction:
    return a / pos_lo if a >= 0 else a / pos_hi


class Interval:
    """Closed rational interval; arithmetic only for the few ops needed."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Fraction, hi: Fraction):
        assert lo <= hi
        self.lo, self.hi = lo, hi

    @classmethod
    def exact(cls, x) -> "Interval":
        f = Fraction(x)
        return cls(f, f)

    @classmethod
    def log2(cls, x, digits: int = 40) -> "Interval":
        return cls(*log2_bounds(x, digits))

    def log2_of(self, digits: int = 40) -> "Interval":
        """log2 of this interval (endpoints must be positive)."""
        assert self.lo > 0
        return Interval(log2_bounds(self.lo, digits)[0],
                        log2_bounds(self.hi, digits)[1])

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        prods = [self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi]
        return Interval(min(prods), max(prods))

    def certainly_le(self, other: "Interval") -> bool:
        return self.hi <= other.lo

    def certainly_gt(self, other: "Interval") -> bool:
        return self.lo > other.hi

    def __repr__(self) -> str:
        return f"Interval({float(self.lo):.6g}, {float(self.hi):.6g})"


def holds_leq(lhs_fn, rhs_fn, max_digits: int = 200) -> bool:
    """Decide lhs <= rhs, escalating precision; outward rounding on a tie.

    lhs_fn/rhs_fn map a digit count to Intervals.  Returns False only if
    the violation is certain at some precision; an interval overlap that
    survives max_digits counts as a pass (never a false failure).
    """
    digits = 30
    while digits <= max_digits:
        lhs, rhs = lhs_fn(digits), rhs_fn(digits)
        if lhs.certainly_le(rhs):
            return True
        if lhs.certainly_gt(rhs):
            return False
        digits *= 2
    return True
