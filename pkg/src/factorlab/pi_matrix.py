"""An affine PI matrix ring with no atoms below a special shape: executable.

Inside the 2x2 matrices over Q[x, y, y^{-1}] (x not invertible, y invertible)
sits the subring whose top-right entry is divisible by x and whose bottom-
right entry is a y-polynomial plus a multiple of x:

    [ S      xS        ]
    [ S      Q[y] + xS ]

The ring fails to be atomic, and the failure has a hands-on witness: any
member whose entire second column is divisible by x and whose determinant is
nonzero factors as diag(1, y) times another member of the same shape (scale
the second row by 1/y).  diag(1, y) lies in the ring but its inverse does
not, so it is a nonunit, and the peeling step can be repeated forever.  The
chain driver below performs the peeling exactly and re-checks membership,
shape, determinant, and the nonunit cofactor at every step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .xy_poly import LaurentPoly2, ONE, ZERO, parse_laurent_poly

Y = LaurentPoly2.term(0, 1)
Y_INV = LaurentPoly2.term(0, -1)


@dataclass(frozen=True, slots=True)
class Mat2:
    """2x2 matrix over Q[x, y, y^{-1}], stored row-major."""

    a11: LaurentPoly2
    a12: LaurentPoly2
    a21: LaurentPoly2
    a22: LaurentPoly2

    def entries(self) -> tuple[LaurentPoly2, ...]:
        return (self.a11, self.a12, self.a21, self.a22)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(*(p + q for p, q in zip(self.entries(), other.entries())))

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def det(self) -> LaurentPoly2:
        return self.a11 * self.a22 - self.a12 * self.a21

    def display(self) -> str:
        e = [p.display() for p in self.entries()]
        return f"[{e[0]}, {e[1]}; {e[2]}, {e[3]}]"

    def __str__(self) -> str:
        return self.display()


IDENTITY = Mat2(ONE, ZERO, ZERO, ONE)
PEEL_UNIT = Mat2(ONE, ZERO, ZERO, Y)
PEEL_UNIT_INVERSE = Mat2(ONE, ZERO, ZERO, Y_INV)


def in_ring(m: Mat2) -> bool:
    """Entrywise membership: (1,2) in xS, (2,2) in Q[y] + xS.

    The left column is unconstrained; the (2,2) entry may contain arbitrary
    y-powers only in terms carrying at least one x.
    """
    return m.a12.divisible_by_x() and m.a22.pure_y_part_polynomial()


def is_special_form(m: Mat2) -> bool:
    """Whole second column divisible by x and nonzero determinant."""
    return m.a12.divisible_by_x() and m.a22.divisible_by_x() and not m.det().is_zero()


def peel(m: Mat2) -> tuple[Mat2, Mat2]:
    """Split a special-form matrix as diag(1, y) * (same shape).

    Returns (U, rest) with U * rest == m exactly; U is a ring member whose
    inverse leaves the ring, rest is again special-form, and
    det(rest) = det(m)/y.
    """
    if not is_special_form(m):
        raise ValueError("peel requires the special form (second column in xS, det != 0)")
    rest = Mat2(m.a11, m.a12, m.a21 * Y_INV, m.a22 * Y_INV)
    if PEEL_UNIT * rest != m:  # pragma: no cover - exact arithmetic
        raise AssertionError("peel failed to reproduce the input")
    return PEEL_UNIT, rest


@dataclass(frozen=True, slots=True)
class PeelStep:
    index: int
    cofactor: Mat2
    remainder: Mat2


def peel_chain(m: Mat2, steps: int) -> Iterator[PeelStep]:
    """Iterate the peeling, certifying every intermediate claim.

    Each step checks: the cofactor is in the ring while its inverse is not,
    the remainder is in the ring, special-form, has nonzero determinant, and
    the product reproduces the previous matrix exactly.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    if not in_ring(m):
        raise ValueError("starting matrix is not in the ring")
    current = m
    for k in range(1, steps + 1):
        unit, rest = peel(current)
        checks = (
            in_ring(unit),
            not in_ring(PEEL_UNIT_INVERSE),
            in_ring(rest),
            is_special_form(rest),
            not rest.det().is_zero(),
            unit * rest == current,
        )
        if not all(checks):  # pragma: no cover - exact arithmetic
            raise AssertionError(f"peeling invariant failed at step {k}: {checks}")
        yield PeelStep(k, unit, rest)
        current = rest


def power(m: Mat2, k: int) -> Mat2:
    out = IDENTITY
    for _ in range(k):
        out = out * m
    return out


def parse_matrix(text: str) -> Mat2:
    """Parse four semicolon-separated entry expressions in x, y, y^-1."""
    parts = text.split(";")
    if len(parts) != 4:
        raise ValueError("matrix literal needs exactly four ';'-separated entries")
    return Mat2(*(parse_laurent_poly(p) for p in parts))


def demo_matrix() -> Mat2:
    """The stock special-form starting point [1, x; 1, x*y]."""
    return Mat2(ONE, LaurentPoly2.term(1, 0), ONE, LaurentPoly2.term(1, 1))
