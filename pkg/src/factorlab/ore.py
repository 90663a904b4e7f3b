"""Skew polynomial and skew Laurent rings over the rational polynomial ring.

Polynomials are written with right coefficients, f = sum_i x^i a_i with
a_i in Q[y], and multiplication is driven by the commutation rule

    a * x = x * sigma(a) + delta(a)

for base-ring elements a.  Three ready-made configurations cover the rings
exercised here: the Weyl algebra (sigma = id, delta = d/dy), the quantum
plane (sigma: y -> q y, delta = 0), and the quantum torus, the Laurent ring
over the scaling automorphism.

Length functions:

* ``lambda_skew(f) = deg_x(f) + weight(leading coefficient)`` strictly drops
  against proper right factors, with ``weight`` the y-degree on the base ring
  (an upper-bound surrogate for the maximal factorization length: the
  y-degree is itself superadditive and vanishes exactly on units, so every
  bound certified through it is valid);
* ``lambda_laurent(f) = (window width) + weight(lowest coefficient)`` is the
  Laurent analogue;
* ``lambda_filtration(f)`` is the total degree in x and y, exactly additive
  on products in the Weyl algebra because the associated graded ring of that
  filtration is a commutative polynomial ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

NEG_INF = float("-inf")


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q

@dataclass(frozen=True, slots=True)
class Poly:
    """Polynomial in y over the rationals; coeffs[i] multiplies y^i."""

    coeffs: tuple[Fraction, ...] = ()

    @staticmethod
    def of(*values) -> "Poly":
        return _poly([Fraction(v) for v in values])

    @staticmethod
    def const(value) -> "Poly":
        return Poly.of(value)

    def is_zero(self) -> bool:
        return not self.coeffs

    def deg(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(other.coeffs):
            out[i] += c
        return _poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return ZERO_POLY
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return _poly(out)

    def derivative(self) -> "Poly":
        return _poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def shift_argument(self, k: int) -> "Poly":
        """p(y) -> p(y + k), by Horner evaluation at y + k."""
        acc = ZERO_POLY
        y_plus_k = Poly.of(k, 1)
        for c in reversed(self.coeffs):
            acc = acc * y_plus_k + Poly.const(c)
        return acc

    def scale_argument(self, q: Fraction) -> "Poly":
        """p(y) -> p(q y)."""
        return _poly([c * q**i for i, c in enumerate(self.coeffs)])

    def display(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*y" if c != 1 else "y")
            else:
                parts.append(f"{c}*y^{i}" if c != 1 else f"y^{i}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.display()


def _poly(coeffs: Sequence[Fraction]) -> Poly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return Poly(tuple(Fraction(c) for c in coeffs))


ZERO_POLY = Poly()
ONE_POLY = Poly.of(1)
Y = Poly.of(0, 1)


def base_weight(p: Poly) -> int:
    """Superadditive weight on nonzero base polynomials: the y-degree."""
    if p.is_zero():
        raise ValueError("weight of the zero polynomial is undefined")
    return len(p.coeffs) - 1


# ---------------------------------------------------------------------------
# twist data

@dataclass(frozen=True, slots=True)
class SigmaDelta:
    """Endomorphism/derivation pair driving the commutation rule.

    sigma is one of identity, shift (y -> y+1) or scale (y -> q y); delta is
    zero or d/dy, the latter only alongside the identity.  All three sigmas
    are degree-preserving automorphisms, so they map nonunits to nonunits.
    """

    sigma: str  # "identity" | "shift" | "scale"
    delta: str = "zero"  # "zero" | "ddy"
    q: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        if self.sigma not in ("identity", "shift", "scale"):
            raise ValueError(f"unknown sigma: {self.sigma!r}")
        if self.delta not in ("zero", "ddy"):
            raise ValueError(f"unknown delta: {self.delta!r}")
        if self.delta == "ddy" and self.sigma != "identity":
            raise ValueError("d/dy is a derivation only for the identity twist")
        if self.sigma == "scale" and self.q == 0:
            raise ValueError("scale factor must be invertible")

    def apply_sigma(self, p: Poly, k: int = 1) -> Poly:
        if self.sigma == "identity" or k == 0:
            return p
        if self.sigma == "shift":
            return p.shift_argument(k)
        return p.scale_argument(self.q**k)

    def apply_delta(self, p: Poly) -> Poly:
        if self.delta == "zero":
            return ZERO_POLY
        return p.derivative()


def weyl() -> SigmaDelta:
    return SigmaDelta("identity", "ddy")


def quantum_plane(q=2) -> SigmaDelta:
    return SigmaDelta("scale", "zero", Fraction(q))


def parse_config(text: str) -> tuple[str, SigmaDelta]:
    """Parse a configuration string: ``weyl``, ``qplane:q=2`` or ``qtorus:q=2``.

    Returns ("poly", sd) for skew polynomial configurations and
    ("laurent", sd) for the quantum torus.
    """
    text = text.strip()
    if text == "weyl":
        return "poly", weyl()
    for prefix, kind in (("qplane", "poly"), ("qtorus", "laurent")):
        if text.startswith(prefix):
            q = Fraction(2)
            rest = text[len(prefix) :]
            if rest:
                if not rest.startswith(":q="):
                    raise ValueError(f"bad configuration: {text!r}")
                q = Fraction(rest[3:])
            return kind, quantum_plane(q)
    raise ValueError(f"unknown configuration: {text!r}")


# ---------------------------------------------------------------------------
# skew polynomials  f = sum_i x^i a_i

@dataclass(frozen=True, slots=True)
class OrePoly:
    coeffs: tuple[Poly, ...]  # right coefficients, no trailing zero
    sd: SigmaDelta

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1].is_zero():
            raise ValueError("trailing zero coefficient")

    def is_zero(self) -> bool:
        return not self.coeffs

    def deg_x(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading(self) -> Poly:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_unit(self) -> bool:
        # units are the nonzero scalars
        return len(self.coeffs) == 1 and self.coeffs[0].is_unit()

    def display(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            if i == 0:
                parts.append(f"({c.display()})")
            elif i == 1:
                parts.append(f"x*({c.display()})")
            else:
                parts.append(f"x^{i}*({c.display()})")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.display()


def _ore(coeffs: Sequence[Poly], sd: SigmaDelta) -> OrePoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return OrePoly(tuple(coeffs), sd)


def ore_zero(sd: SigmaDelta) -> OrePoly:
    return OrePoly((), sd)


def ore_from_base(p: Poly, sd: SigmaDelta) -> OrePoly:
    return _ore([p], sd)


def ore_x(sd: SigmaDelta, power: int = 1) -> OrePoly:
    return _ore([ZERO_POLY] * power + [ONE_POLY], sd)


def ore_from_coeffs(coeffs: Iterable[Poly], sd: SigmaDelta) -> OrePoly:
    return _ore(list(coeffs), sd)


def ore_add(f: OrePoly, g: OrePoly) -> OrePoly:
    _same_twist(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    out = [ZERO_POLY] * n
    for i, c in enumerate(f.coeffs):
        out[i] = out[i] + c
    for i, c in enumerate(g.coeffs):
        out[i] = out[i] + c
    return _ore(out, f.sd)


def _same_twist(f: OrePoly, g: OrePoly) -> None:
    if f.sd != g.sd:
        raise ValueError("operands carry different twist data")


def _base_times_x_power(a: Poly, j: int, sd: SigmaDelta) -> list[Poly]:
    """Coefficients of a * x^j, from j applications of a*x = x*sigma(a)+delta(a)."""
    vec = [a]
    for _ in range(j):
        new = [ZERO_POLY] * (len(vec) + 1)
        for m, c in enumerate(vec):
            if c.is_zero():
                continue
            new[m + 1] = new[m + 1] + sd.apply_sigma(c)
            new[m] = new[m] + sd.apply_delta(c)
        vec = new
    return vec


def ore_mul(f: OrePoly, g: OrePoly) -> OrePoly:
    _same_twist(f, g)
    if f.is_zero() or g.is_zero():
        return ore_zero(f.sd)
    out = [ZERO_POLY] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(g.coeffs):
            if b.is_zero():
                continue
            for m, c in enumerate(_base_times_x_power(a, j, f.sd)):
                if not c.is_zero():
                    out[i + m] = out[i + m] + c * b
    return _ore(out, f.sd)


def lambda_skew(f: OrePoly) -> int:
    """x-degree plus y-degree of the leading right coefficient."""
    if f.is_zero():
        raise ValueError("length of the zero element is undefined")
    return len(f.coeffs) - 1 + base_weight(f.leading())


def lambda_filtration(f: OrePoly) -> int:
    """Total degree in x and y; requires the Weyl configuration.

    Additive on products: the graded ring of the total-degree filtration of
    the Weyl algebra is the commutative polynomial ring in two variables.
    """
    if f.sd != weyl():
        raise ValueError("the filtration length is defined for the Weyl configuration")
    if f.is_zero():
        raise ValueError("length of the zero element is undefined")
    return max(i + base_weight(c) for i, c in enumerate(f.coeffs) if not c.is_zero())


def leading_law_holds(product: OrePoly, f: OrePoly, g: OrePoly) -> bool:
    """Check the top-coefficient identity of a product f*g:
    lead(f*g) = sigma^{deg g}(lead f) * lead g."""
    if f.is_zero() or g.is_zero():
        return product.is_zero()
    l = len(g.coeffs) - 1
    expected = f.sd.apply_sigma(f.leading(), l) * g.leading()
    return (
        product.deg_x() == f.deg_x() + g.deg_x()
        and product.leading() == expected
    )


# ---------------------------------------------------------------------------
# skew Laurent polynomials  f = sum_i x^i a_i,  i in Z

@dataclass(frozen=True, slots=True)
class LaurentOrePoly:
    coeffs: tuple[tuple[int, Poly], ...]  # sorted by exponent, nonzero coeffs
    sd: SigmaDelta

    def __post_init__(self) -> None:
        if self.sd.delta != "zero":
            raise ValueError("Laurent twists must have zero derivation")
        exps = [e for e, _ in self.coeffs]
        if exps != sorted(exps) or len(set(exps)) != len(exps):
            raise ValueError("coefficients must be sorted by distinct exponents")
        if any(c.is_zero() for _, c in self.coeffs):
            raise ValueError("zero coefficient stored")

    def is_zero(self) -> bool:
        return not self.coeffs

    def window(self) -> tuple[int, int]:
        if not self.coeffs:
            raise ValueError("zero element has no support window")
        return self.coeffs[0][0], self.coeffs[-1][0]

    def lowest(self) -> Poly:
        if not self.coeffs:
            raise ValueError("zero element has no lowest coefficient")
        return self.coeffs[0][1]

    def is_unit(self) -> bool:
        # units are scalar multiples of powers of x
        return len(self.coeffs) == 1 and self.coeffs[0][1].is_unit()

    def display(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"x^{e}*({c.display()})" for e, c in self.coeffs)

    def __str__(self) -> str:
        return self.display()


def laurent(coeffs: dict[int, Poly], sd: SigmaDelta) -> LaurentOrePoly:
    items = sorted((e, c) for e, c in coeffs.items() if not c.is_zero())
    return LaurentOrePoly(tuple(items), sd)


def laurent_zero(sd: SigmaDelta) -> LaurentOrePoly:
    return LaurentOrePoly((), sd)


def laurent_add(f: LaurentOrePoly, g: LaurentOrePoly) -> LaurentOrePoly:
    if f.sd != g.sd:
        raise ValueError("operands carry different twist data")
    acc = {e: c for e, c in f.coeffs}
    for e, c in g.coeffs:
        acc[e] = acc.get(e, ZERO_POLY) + c
    return laurent(acc, f.sd)


def laurent_mul(f: LaurentOrePoly, g: LaurentOrePoly) -> LaurentOrePoly:
    if f.sd != g.sd:
        raise ValueError("operands carry different twist data")
    acc: dict[int, Poly] = {}
    for i, a in f.coeffs:
        for j, b in g.coeffs:
            # a * x^j = x^j * sigma^j(a)
            term = f.sd.apply_sigma(a, j) * b
            acc[i + j] = acc.get(i + j, ZERO_POLY) + term
    return laurent(acc, f.sd)


def lambda_laurent(f: LaurentOrePoly) -> int:
    """Support-window width plus y-degree of the lowest coefficient."""
    if f.is_zero():
        raise ValueError("length of the zero element is undefined")
    lo, hi = f.window()
    return hi - lo + base_weight(f.lowest())


def laurent_lowest_law_holds(product: LaurentOrePoly, f: LaurentOrePoly, g: LaurentOrePoly) -> bool:
    """Lowest-coefficient identity for Laurent products:
    low(f*g) = sigma^{min-exp g}(low f) * low g."""
    if f.is_zero() or g.is_zero():
        return product.is_zero()
    mg = g.window()[0]
    expected = f.sd.apply_sigma(f.lowest(), mg) * g.lowest()
    return (
        product.window()[0] == f.window()[0] + mg
        and product.lowest() == expected
    )


# ---------------------------------------------------------------------------
# seeded randomized law checks

@dataclass(frozen=True, slots=True)
class LawCheckResult:
    configuration: str
    trials: int
    right_length_violations: int
    leading_law_violations: int

    def ok(self) -> bool:
        return self.right_length_violations == 0 and self.leading_law_violations == 0


def random_poly(rng, max_deg: int = 3, bound: int = 4, nonzero: bool = False) -> Poly:
    while True:
        p = _poly([Fraction(rng.randint(-bound, bound)) for _ in range(rng.randint(0, max_deg + 1))])
        if not nonzero or not p.is_zero():
            return p


def random_ore(rng, sd: SigmaDelta, max_deg_x: int = 3, nonzero: bool = False) -> OrePoly:
    while True:
        f = _ore([random_poly(rng) for _ in range(rng.randint(0, max_deg_x + 1))], sd)
        if not nonzero or not f.is_zero():
            return f


def random_laurent(rng, sd: SigmaDelta, span: int = 3, nonzero: bool = False) -> LaurentOrePoly:
    while True:
        acc: dict[int, Poly] = {}
        for _ in range(rng.randint(0, 3)):
            p = random_poly(rng)
            if not p.is_zero():
                e = rng.randint(-span, span)
                acc[e] = acc.get(e, ZERO_POLY) + p
        f = laurent(acc, sd)
        if not nonzero or not f.is_zero():
            return f


def check_skew_laws(configuration: str, pairs: int, seed: int = 0) -> LawCheckResult:
    """Randomized audit of the right-length drop and the leading-term law.

    Draws ``pairs`` products g*h with g nonzero and h a nonzero nonunit in
    the named configuration and counts violations of
    ``lambda(g*h) > lambda(g)`` and of the leading/lowest coefficient law.
    Deterministic for a fixed seed.
    """
    import random

    kind, sd = parse_config(configuration)
    rng = random.Random(seed)
    right_bad = 0
    law_bad = 0
    for _ in range(pairs):
        if kind == "poly":
            g = random_ore(rng, sd, nonzero=True)
            h = random_ore(rng, sd, nonzero=True)
            while h.is_unit():
                h = random_ore(rng, sd, nonzero=True)
            p = ore_mul(g, h)
            if not lambda_skew(p) > lambda_skew(g):
                right_bad += 1
            if not leading_law_holds(p, g, h):
                law_bad += 1
        else:
            g = random_laurent(rng, sd, nonzero=True)
            h = random_laurent(rng, sd, nonzero=True)
            while h.is_unit():
                h = random_laurent(rng, sd, nonzero=True)
            p = laurent_mul(g, h)
            if not lambda_laurent(p) > lambda_laurent(g):
                right_bad += 1
            if not laurent_lowest_law_holds(p, g, h):
                law_bad += 1
    return LawCheckResult(configuration, pairs, right_bad, law_bad)


def check_filtration_additivity(pairs: int, seed: int = 0) -> tuple[int, int]:
    """Count violations of lambda(fg) = lambda(f) + lambda(g) for the total
    degree on random nonzero Weyl-algebra pairs; returns (trials, violations)."""
    import random

    sd = weyl()
    rng = random.Random(seed)
    bad = 0
    for _ in range(pairs):
        f = random_ore(rng, sd, nonzero=True)
        g = random_ore(rng, sd, nonzero=True)
        if lambda_filtration(ore_mul(f, g)) != lambda_filtration(f) + lambda_filtration(g):
            bad += 1
    return pairs, bad


def parse_ore_poly(text: str, sd: SigmaDelta) -> OrePoly:
    """Parse a literal like ``x^2*(y+1) + x*(3) + (1/2)``.

    The literal is read with commuting symbols and the coefficient of x^i
    becomes the right coefficient a_i, matching the f = sum_i x^i a_i
    convention; negative x-powers are rejected.
    """
    from .xy_poly import parse_laurent_poly

    flat = parse_laurent_poly(text)
    by_x: dict[int, dict[int, Fraction]] = {}
    for (i, j), coeff in flat.terms:
        if j < 0:
            raise ValueError("base coefficients must be polynomials in y")
        by_x.setdefault(i, {})[j] = coeff
    if not by_x:
        return ore_zero(sd)
    top = max(by_x)
    coeffs = []
    for i in range(top + 1):
        ys = by_x.get(i, {})
        size = max(ys) + 1 if ys else 0
        coeffs.append(_poly([ys.get(k, Fraction(0)) for k in range(size)]))
    return _ore(coeffs, sd)
