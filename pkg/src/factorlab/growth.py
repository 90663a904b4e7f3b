"""Frame growth tables for presented monoid algebras, at desk scale.

For a monoid algebra the span of 1 and the generators is a frame, and the
dimension of its n-th power equals the number of monoid elements whose
minimal word length is at most n: the monoid elements are a basis and a
canonical normalizer with length-minimal normal forms identifies them.  The
table builder therefore just counts canonical keys of words, or parameter
tuples when a direct enumeration of canonical forms is available.

Classification of a finished table into polynomial or exponential growth is
a heuristic against the usual rubric (degree-d polynomial growth pinches
dim V^n between multiples of n^d); its output is a hint, never a theorem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Hashable, Optional

from . import monoid
from .words import Alphabet, Word, enumerate_words

DEFAULT_BUDGET = 2_000_000

#: bound for the stabilized-ratio test of exponential growth
RATIO_THRESHOLD = 1.05
#: relative tolerance for matching a polynomial degree
DEGREE_TOLERANCE = 0.10


@dataclass(frozen=True, slots=True)
class Classification:
    kind: str  # "polynomial" | "exponential" | "inconclusive"
    degree: Optional[int] = None
    ratio: Optional[float] = None

    def display(self) -> str:
        if self.kind == "polynomial":
            return f"polynomial(degree ~ {self.degree})"
        if self.kind == "exponential":
            return f"exponential(ratio ~ {self.ratio:.3f})"
        return "inconclusive"


@dataclass(frozen=True, slots=True)
class GrowthTable:
    frame: str
    entries: tuple[tuple[int, int], ...]  # (n, dim V^n)
    truncated_at: Optional[int] = None  # first n that exceeded the budget

    def dims(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.entries)

    def csv(self) -> str:
        lines = ["n,dim"] + [f"{n},{d}" for n, d in self.entries]
        if self.truncated_at is not None:
            lines.append(f"# truncated: element budget exceeded at n={self.truncated_at}")
        return "\n".join(lines)

    def columns(self) -> str:
        lines = [f"{n} {d}" for n, d in self.entries]
        if self.truncated_at is not None:
            lines.append(f"# truncated at n={self.truncated_at}")
        return "\n".join(lines)


def table_from_words(
    alphabet: Alphabet,
    canonical_key: Callable[[Word], Hashable],
    n_max: int,
    frame: str,
    budget: int = DEFAULT_BUDGET,
) -> GrowthTable:
    """Count distinct canonical keys of words of length <= n, for each n.

    Enumerating in shortlex order makes the first word that produces a key a
    minimal-length representative, so bucketing by first-hit length yields
    dim V^n without any search.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    new_at_length = [0] * (n_max + 1)
    seen: set[Hashable] = set()
    visited = 0
    truncated_at: Optional[int] = None
    for w in enumerate_words(alphabet, n_max):
        visited += 1
        if visited > budget:
            truncated_at = len(w)
            break
        key = canonical_key(w)
        if key not in seen:
            seen.add(key)
            new_at_length[len(w)] += 1
    top = n_max if truncated_at is None else truncated_at - 1
    entries = []
    running = 0
    for n in range(top + 1):
        running += new_at_length[n]
        entries.append((n, running))
    return GrowthTable(frame, tuple(entries), truncated_at)


def two_relator_table(n_max: int, budget: int = DEFAULT_BUDGET) -> GrowthTable:
    """Growth table of the two-relator monoid by direct enumeration of
    canonical parameter tuples (no word search, no deduplication)."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    counts = [0] * (n_max + 1)
    produced = 0
    truncated_at: Optional[int] = None
    for nf in monoid.enumerate_elements(n_max):
        produced += 1
        if produced > budget:
            truncated_at = nf.length
            break
        counts[nf.length] += 1
    top = n_max if truncated_at is None else max(truncated_at - 1, 0)
    entries = []
    running = 0
    for n in range(top + 1):
        running += counts[n]
        entries.append((n, running))
    return GrowthTable("two-relator monoid frame {1, a, b}", tuple(entries), truncated_at)


def free_commutative_table(n_max: int, budget: int = DEFAULT_BUDGET) -> GrowthTable:
    """Growth table of the free commutative monoid on two generators, by
    direct enumeration of its canonical exponent pairs."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    counts = [0] * (n_max + 1)
    produced = 0
    truncated_at: Optional[int] = None
    for total in range(n_max + 1):
        for _first in range(total + 1):
            produced += 1
            if produced > budget:
                truncated_at = total
                break
            counts[total] += 1
        if truncated_at is not None:
            break
    top = n_max if truncated_at is None else max(truncated_at - 1, 0)
    entries = []
    running = 0
    for n in range(top + 1):
        running += counts[n]
        entries.append((n, running))
    return GrowthTable("free commutative monoid on 2 generators", tuple(entries), truncated_at)


def builtin_table(family: str, n_max: int, budget: int = DEFAULT_BUDGET) -> GrowthTable:
    """Tables for the built-in frames.

    ``free``: two free generators, every word is its own canonical form.
    ``free-commutative``: canonical forms are exponent pairs.
    ``two-relator``: the monoid of :mod:`factorlab.monoid`.
    """
    two = Alphabet.from_names(("a", "b"))
    if family == "free":
        return table_from_words(two, lambda w: w.letters, n_max, "free monoid on 2 generators", budget)
    if family == "free-commutative":
        return free_commutative_table(n_max, budget)
    if family == "two-relator":
        return two_relator_table(n_max, budget)
    raise ValueError(f"unknown family: {family!r} (free, free-commutative, two-relator)")


def two_relator_table_by_oracle(n_max: int, budget: int = DEFAULT_BUDGET) -> GrowthTable:
    """Independent recomputation of the two-relator table: enumerate words and
    deduplicate by the group embedding instead of by parameter tuples."""
    from . import groups

    return table_from_words(
        monoid.ALPHABET,
        lambda w: groups.embed(w),
        n_max,
        "two-relator monoid frame {1, a, b} (oracle dedup)",
        budget,
    )


def _doubling_estimate(lookup: dict[int, int], n: int) -> Optional[float]:
    half = n // 2
    if half < 1 or n not in lookup or half not in lookup:
        return None
    return math.log(lookup[n] / lookup[half]) / math.log(n / half)


def classify(table: GrowthTable) -> Classification:
    """Heuristic growth class of a table with at least 8 entries.

    The log-log slope between n/2 and n estimates a polynomial degree; for
    genuinely polynomial data it is scale-stable, while for exponential data
    it keeps growing with n.  A table is called exponential when the estimate
    grows markedly across scales and the tail's successive ratios stabilize
    above 1.05; it is called polynomial of degree d when the estimate sits
    within 10 percent of the integer d.  Anything else is inconclusive, and
    every answer is a hint, not a theorem.
    """
    entries = [(n, d) for n, d in table.entries if d > 0]
    if len(entries) < 8:
        raise ValueError("need at least 8 table entries to classify")
    lookup = dict(entries)
    n_hi = entries[-1][0]
    est_hi = _doubling_estimate(lookup, n_hi)
    est_lo = _doubling_estimate(lookup, n_hi // 2)
    tail = entries[-max(4, len(entries) // 3) :]
    ratios = [b[1] / a[1] for a, b in zip(tail, tail[1:])]
    mean_ratio = sum(ratios) / len(ratios)
    if (
        est_hi is not None
        and est_lo is not None
        and est_hi > 1.25 * est_lo
        and min(ratios) > RATIO_THRESHOLD
        and max(ratios) - min(ratios) <= DEGREE_TOLERANCE * mean_ratio
    ):
        return Classification("exponential", ratio=mean_ratio)
    if est_hi is not None:
        degree = round(est_hi)
        if degree >= 0 and abs(est_hi - degree) <= DEGREE_TOLERANCE * max(degree, 1):
            return Classification("polynomial", degree=degree)
    return Classification("inconclusive")
