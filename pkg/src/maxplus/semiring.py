"""Exact max-plus arithmetic.

A weight is either a :class:`fractions.Fraction` or :data:`BOTTOM`, the
semiring zero (minus infinity).  Tuples of weights are plain tuples and
matrices are :class:`WeightMatrix` instances.
"""

from __future__ import annotations

from decimal import Decimal, InvalidOperation
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

__all__ = [
    "BOTTOM",
    "ONE",
    "Weight",
    "WeightMatrix",
    "as_weight",
    "format_weight",
    "is_bottom",
    "mat_mul",
    "parse_weight",
    "vmin",
    "vnorm",
    "w_plus",
    "w_sum",
    "w_times",
]


@total_ordering
class _Bottom:
    """The semiring zero.  Compares below every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"

    def __str__(self):
        return "-inf"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("maxplus.BOTTOM")

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()
ONE = Fraction(0)

Weight = Union[Fraction, _Bottom]


def is_bottom(x) -> bool:
    return x is BOTTOM


def as_weight(x) -> Weight:
    """Coerce ints, Fractions, strings and ``None`` into a weight."""
    if x is None or x is BOTTOM:
        return BOTTOM
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not weights")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_weight(x)
    if isinstance(x, Decimal):
        return Fraction(x)
    if isinstance(x, float):
        if x == float("-inf"):
            return BOTTOM
        # floats are accepted only when they hold an exact short decimal
        return Fraction(Decimal(repr(x)))
    raise TypeError(f"cannot interpret {x!r} as a max-plus weight")


def parse_weight(text: str) -> Weight:
    """Parse ``"3"``, ``"-1.25"``, ``"2/3"`` or ``"-inf"`` exactly."""
    s = text.strip()
    if s.lower() in ("-inf", "-infinity", "⊥"):
        return BOTTOM
    if not s:
        raise ValueError("empty weight")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ValueError(f"malformed rational weight {text!r}") from None
        if d == 0:
            raise ValueError(f"zero denominator in weight {text!r}")
        return Fraction(n, d)
    try:
        dec = Decimal(s)
    except InvalidOperation:
        raise ValueError(f"malformed weight {text!r}") from None
    if not dec.is_finite():
        raise ValueError(f"weight {text!r} is not finite (only -inf is allowed)")
    return Fraction(dec)


def format_weight(x: Weight) -> str:
    if x is BOTTOM:
        return "-inf"
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def w_plus(a: Weight, b: Weight) -> Weight:
    """Max-plus addition (max)."""
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return a if a >= b else b


def w_times(a: Weight, b: Weight) -> Weight:
    """Max-plus multiplication (+)."""
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    return a + b


def w_sum(xs: Iterable[Weight]) -> Weight:
    acc = BOTTOM
    for x in xs:
        acc = w_plus(acc, x)
    return acc


# -- tuples --------------------------------------------------------------------

def vmin(x: Sequence[Weight]) -> Fraction:
    """Smallest non-bottom coordinate of a tuple."""
    finite = [c for c in x if c is not BOTTOM]
    if not finite:
        raise ValueError("vmin of an all-bottom tuple")
    return min(finite)


def vnorm(x: Sequence[Weight]) -> tuple:
    """Shift the finite coordinates of ``x`` so that the smallest is zero."""
    m = vmin(x)
    return tuple(BOTTOM if c is BOTTOM else c - m for c in x)


# -- matrices ------------------------------------------------------------------

class WeightMatrix:
    """Dense matrix over the max-plus semiring."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(as_weight(v) for v in row) for row in entries)
        if not entries:
            raise ValueError("matrix must have at least one row")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("ragged matrix rows")
        self.rows = len(entries)
        self.cols = width
        self.entries = entries

    @classmethod
    def identity(cls, n: int) -> "WeightMatrix":
        return cls([[ONE if i == j else BOTTOM for j in range(n)] for i in range(n)])

    @classmethod
    def bottom(cls, rows: int, cols: int) -> "WeightMatrix":
        return cls([[BOTTOM] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, WeightMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        body = "; ".join(" ".join(format_weight(v) for v in row) for row in self.entries)
        return f"WeightMatrix([{body}])"


def mat_mul(A: WeightMatrix, B: WeightMatrix) -> WeightMatrix:
    """``(A ⊗ B)[i, j] = max_k A[i, k] + B[k, j]``."""
    if A.cols != B.rows:
        raise ValueError(f"dimension mismatch: {A.rows}x{A.cols} times {B.rows}x{B.cols}")
    out = []
    for i in range(A.rows):
        row_a = A.entries[i]
        row = []
        for j in range(B.cols):
            acc = BOTTOM
            for k in range(A.cols):
                a = row_a[k]
                if a is BOTTOM:
                    continue
                b = B.entries[k][j]
                if b is BOTTOM:
                    continue
                s = a + b
                if acc is BOTTOM or s > acc:
                    acc = s
            row.append(acc)
        out.append(row)
    return WeightMatrix(out)
