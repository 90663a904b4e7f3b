"""Arithmetic in the monoid algebra of the two-relator monoid.

Elements are finite maps from canonical monoid elements to nonzero scalars of
an exact field (arbitrary-precision rationals by default, or a prime field
for faster randomized sweeps).  Products multiply supports through the monoid
and collect coefficients, so every ring identity that holds here holds on the
nose; there are no tolerances anywhere in this module.

The divisibility probe searches for an exact right cofactor with support in a
finite candidate set by solving a linear system over the field.  Definite
negative answers come from two obstructions: the a-degree is additive on
nonzero products, and a (scalar multiple of a) single monoid element can only
be a product of scalar multiples of monoid elements, so monomial-by-monomial
division reduces to an exact division in the monoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from . import monoid
from .groups import NormalForm, left_quotient

Scalar = Union[Fraction, int]

NEG_INF = float("-inf")


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True, slots=True)
class Field:
    """Exact coefficient field: rationals (modulus None) or a prime field."""

    modulus: Optional[int] = None

    def __post_init__(self) -> None:
        if self.modulus is not None:
            if not (2 <= self.modulus < 2**31) or not _is_probable_prime(self.modulus):
                raise ValueError(f"modulus must be a prime below 2^31: {self.modulus}")

    @staticmethod
    def rationals() -> "Field":
        return Field(None)

    @staticmethod
    def prime(p: int) -> "Field":
        return Field(p)

    @property
    def zero(self) -> Scalar:
        return 0 if self.modulus else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.modulus else Fraction(1)

    def from_int(self, n: int) -> Scalar:
        return n % self.modulus if self.modulus else Fraction(n)

    def add(self, x: Scalar, y: Scalar) -> Scalar:
        return (x + y) % self.modulus if self.modulus else x + y

    def neg(self, x: Scalar) -> Scalar:
        return (-x) % self.modulus if self.modulus else -x

    def mul(self, x: Scalar, y: Scalar) -> Scalar:
        return (x * y) % self.modulus if self.modulus else x * y

    def inv(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ZeroDivisionError("division by zero in coefficient field")
        if self.modulus:
            return pow(x, self.modulus - 2, self.modulus)
        return Fraction(1) / x

    def parse(self, text: str) -> Scalar:
        text = text.strip()
        if self.modulus:
            if "/" in text:
                num, den = text.split("/", 1)
                return self.mul(self.from_int(int(num)), self.inv(self.from_int(int(den))))
            return self.from_int(int(text))
        return Fraction(text)

    def format(self, x: Scalar) -> str:
        return str(x)


@dataclass(frozen=True)
class AlgebraElement:
    """Finite linear combination of monoid elements with nonzero coefficients."""

    field: Field
    terms: tuple[tuple[NormalForm, Scalar], ...]  # sorted by shortlex, no zeros

    def __post_init__(self) -> None:
        for _, coeff in self.terms:
            if coeff == 0:
                raise ValueError("zero coefficient stored")

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple[NormalForm, ...]:
        return tuple(nf for nf, _ in self.terms)

    def coeff(self, nf: NormalForm) -> Scalar:
        for s, c in self.terms:
            if s == nf:
                return c
        return self.field.zero

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def display(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{self.field.format(c)} * {nf.display()}" for nf, c in self.terms)

    def __str__(self) -> str:
        return self.display()


def _build(field: Field, mapping: dict[NormalForm, Scalar]) -> AlgebraElement:
    items = [(nf, c) for nf, c in mapping.items() if c != 0]
    items.sort(key=lambda item: item[0].shortlex_key())
    return AlgebraElement(field, tuple(items))


def zero(field: Field) -> AlgebraElement:
    return AlgebraElement(field, ())


def monomial(field: Field, nf: NormalForm, coeff: Scalar = None) -> AlgebraElement:
    if coeff is None:
        coeff = field.one
    return _build(field, {nf: coeff})


def from_terms(field: Field, items: Iterable[tuple[NormalForm, Scalar]]) -> AlgebraElement:
    acc: dict[NormalForm, Scalar] = {}
    for nf, c in items:
        acc[nf] = field.add(acc.get(nf, field.zero), c)
    return _build(field, acc)


def _check_same_field(f: AlgebraElement, g: AlgebraElement) -> None:
    if f.field != g.field:
        raise ValueError("elements live over different coefficient fields")


def alg_add(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    _check_same_field(f, g)
    acc = dict(f.terms)
    for nf, c in g.terms:
        acc[nf] = f.field.add(acc.get(nf, f.field.zero), c)
    return _build(f.field, acc)


def alg_neg(f: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(f.field, tuple((nf, f.field.neg(c)) for nf, c in f.terms))

def alg_sub(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    return alg_add(f, alg_neg(g))


def alg_scale(f: AlgebraElement, scalar: Scalar) -> AlgebraElement:
    return _build(f.field, {nf: f.field.mul(c, scalar) for nf, c in f.terms})


def alg_mul(f: AlgebraElement, g: AlgebraElement) -> AlgebraElement:
    _check_same_field(f, g)
    acc: dict[NormalForm, Scalar] = {}
    for s, cs in f.terms:
        for t, ct in g.terms:
            st = monoid.multiply(s, t)
            acc[st] = f.field.add(acc.get(st, f.field.zero), f.field.mul(cs, ct))
    return _build(f.field, acc)


def deg_a(f: AlgebraElement):
    """Highest a-count over the support; -inf for the zero element.

    Additive on products of nonzero elements, because the algebra embeds into
    a skew Laurent extension graded by the a-exponent over a domain.
    """
    if f.is_zero():
        return NEG_INF
    return max(nf.a_count for nf, _ in f.terms)


@dataclass(frozen=True, slots=True)
class DivisionResult:
    status: str  # "yes" | "no" | "unknown"
    cofactor: Optional[AlgebraElement] = None


def _solve_exact(field: Field, rows: list[list[Scalar]], rhs: list[Scalar]) -> Optional[list[Scalar]]:
    """One exact solution of rows * x = rhs (free variables pinned to zero),
    or None if the system is inconsistent.  Columns are eliminated left to
    right, so earlier unknowns are preferred."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = field.inv(aug[r][col])
        aug[r] = [field.mul(v, inv) for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [field.add(v, field.neg(field.mul(factor, w))) for v, w in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    solution = [field.zero] * n
    for row_idx, col in enumerate(pivot_cols):
        solution[col] = aug[row_idx][n]
    return solution


def divides_right(f: AlgebraElement, g: AlgebraElement, search_cap: int = 6) -> DivisionResult:
    """Probe whether g lies in f * (algebra): bounded but certified.

    ``yes`` returns a cofactor h with f*h = g, re-verified by multiplication.
    ``no`` is only returned with a proof: either the a-degree obstruction
    (deg_a is additive and deg_a(f) > deg_a(g)), or, when both sides are
    scalar multiples of single monoid elements, failure of the exact monoid
    division (divisors of monomials are monomials).  Otherwise the bounded
    search over cofactor supports of canonical length <= search_cap is
    inconclusive and ``unknown`` is returned.
    """
    if f.is_zero():
        raise ValueError("left factor must be nonzero")
    if g.is_zero():
        return DivisionResult("yes", zero(f.field))
    _check_same_field(f, g)
    if deg_a(f) > deg_a(g):
        return DivisionResult("no")
    if f.is_monomial() and g.is_monomial():
        (s, cs), (t, ct) = f.terms[0], g.terms[0]
        v = left_quotient(s.word(), t.word())
        if v is None:
            return DivisionResult("no")
        h = monomial(f.field, v, f.field.mul(ct, f.field.inv(cs)))
        assert alg_mul(f, h) == g
        return DivisionResult("yes", h)
    budget = deg_a(g) - deg_a(f)
    candidates = [nf for nf in monoid.enumerate_elements(search_cap) if nf.a_count <= budget]
    products = [alg_mul(f, monomial(f.field, nf)) for nf in candidates]
    support: list[NormalForm] = sorted(
        {nf for p in products for nf in p.support()} | set(g.support()),
        key=NormalForm.shortlex_key,
    )
    rows = [[p.coeff(nf) for p in products] for nf in support]
    rhs = [g.coeff(nf) for nf in support]
    solution = _solve_exact(f.field, rows, rhs)
    if solution is None:
        return DivisionResult("unknown")
    h = from_terms(f.field, [(nf, c) for nf, c in zip(candidates, solution) if c != 0])
    if alg_mul(f, h) != g:  # pragma: no cover - the solver is exact
        return DivisionResult("unknown")
    return DivisionResult("yes", h)


def parse_element(text: str, field: Field) -> AlgebraElement:
    """Parse the element literal, e.g. ``3/2 * b^2 a^1 + -1 * e``."""
    text = text.strip()
    if text == "0":
        return zero(field)
    items: list[tuple[NormalForm, Scalar]] = []
    for part in text.split(" + "):
        part = part.strip()
        if "*" in part:
            coeff_text, word_text = part.split("*", 1)
            coeff = field.parse(coeff_text)
        else:
            coeff, word_text = field.one, part
        from .words import parse_word  # local import to keep module deps one-way

        nf = monoid.normalize(parse_word(word_text.strip(), monoid.ALPHABET))
        items.append((nf, coeff))
    return from_terms(field, items)
