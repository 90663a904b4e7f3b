"""Alphabets, words, monoid presentations, and a terminating string rewriter.

Words are immutable sequences of generator names over a fixed alphabet;
equality is structural and concatenation is the free-monoid product.  The
rewriter applies oriented rules at the leftmost matching position until no
rule applies.  Rules must never lengthen a word, and any length-preserving
rule has to come with a termination certificate: a word weight that strictly
decreases under every application (the engine enforces the lexicographic
descent of ``(length, weight)`` at run time instead of trusting the caller).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence


class StepBudgetExceeded(RuntimeError):
    """Raised when rewriting does not reach a fixpoint within the budget."""


class CertificateViolation(RuntimeError):
    """Raised when a rewrite step fails to decrease the termination weight."""


@dataclass(frozen=True, slots=True)
class Generator:
    index: int
    name: str

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("generator index must be non-negative")
        if not self.name or any(ch.isspace() for ch in self.name):
            raise ValueError(f"generator name must be a non-empty token: {self.name!r}")


@dataclass(frozen=True, slots=True)
class Alphabet:
    generators: tuple[Generator, ...]

    def __post_init__(self) -> None:
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be pairwise distinct: {names}")

    @staticmethod
    def from_names(names: Sequence[str]) -> "Alphabet":
        return Alphabet(tuple(Generator(i, n) for i, n in enumerate(names)))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def __contains__(self, name: str) -> bool:
        return any(g.name == name for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)


@dataclass(frozen=True, slots=True)
class Word:
    alphabet: Alphabet
    letters: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        bad = [l for l in self.letters if l not in self.alphabet]
        if bad:
            raise ValueError(f"letters not in alphabet {self.alphabet.names}: {bad}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return concat(self, other)

    def runs(self) -> list[tuple[str, int]]:
        """Run-length encoding, e.g. ``baab`` -> [(b,1), (a,2), (b,1)]."""
        return [(ch, len(list(grp))) for ch, grp in itertools.groupby(self.letters)]

    def count(self, name: str) -> int:
        return sum(1 for l in self.letters if l == name)

    def display(self) -> str:
        if not self.letters:
            return "e"
        return " ".join(f"{ch}^{n}" if n > 1 else ch for ch, n in self.runs())

    def display_exponents(self) -> str:
        """Exponent-explicit form, e.g. ``b^2 a^3 b^1 a^2``; ``e`` if empty."""
        if not self.letters:
            return "e"
        return " ".join(f"{ch}^{n}" for ch, n in self.runs())

    def __str__(self) -> str:
        return self.display()


def concat(u: Word, v: Word) -> Word:
    if u.alphabet != v.alphabet:
        raise ValueError("cannot concatenate words over different alphabets")
    return Word(u.alphabet, u.letters + v.letters)


def word_from_runs(alphabet: Alphabet, runs: Iterable[tuple[str, int]]) -> Word:
    letters: list[str] = []
    for ch, n in runs:
        letters.extend([ch] * n)
    return Word(alphabet, tuple(letters))


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse ``b a a b`` or ``b^2 a^3``; ``e`` denotes the empty word."""
    text = text.strip()
    if text in ("", "e"):
        return Word(alphabet)
    letters: list[str] = []
    for tok in text.split():
        m = re.fullmatch(r"([^^\s]+)(?:\^(\d+))?", tok)
        if m is None:
            raise ValueError(f"bad word token: {tok!r}")
        name, exp = m.group(1), int(m.group(2) or 1)
        if name not in alphabet:
            raise ValueError(f"unknown generator {name!r} (alphabet: {' '.join(alphabet.names)})")
        letters.extend([name] * exp)
    return Word(alphabet, tuple(letters))


@dataclass(frozen=True, slots=True)
class Presentation:
    alphabet: Alphabet
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self) -> None:
        for lhs, rhs in self.relations:
            if lhs.alphabet != self.alphabet or rhs.alphabet != self.alphabet:
                raise ValueError("relation words must use the presentation's alphabet")


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_presentation(text: str) -> Presentation:
    """Parse the presentation file format.

    Line 1 declares ``generators: a b``; every following non-blank line is
    ``relation: b a a b = a a`` with one generator token per symbol.  Unknown
    tokens are rejected with a line/column diagnostic.
    """
    alphabet: Alphabet | None = None
    relations: list[tuple[Word, Word]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        if alphabet is None:
            if not raw.lstrip().startswith("generators:"):
                raise PresentationSyntaxError(
                    "first line must start with 'generators:'", lineno, 1
                )
            names = raw.split(":", 1)[1].split()
            if not names:
                raise PresentationSyntaxError("no generators declared", lineno, len(raw))
            try:
                alphabet = Alphabet.from_names(names)
            except ValueError as exc:
                raise PresentationSyntaxError(str(exc), lineno, raw.index(":") + 2) from exc
            continue
        if not raw.lstrip().startswith("relation:"):
            raise PresentationSyntaxError("expected 'relation:' line", lineno, 1)
        body_start = raw.index(":") + 1
        body = raw[body_start:]
        if body.count("=") != 1:
            raise PresentationSyntaxError("relation needs exactly one '='", lineno, body_start + 1)
        eq_pos = body.index("=")
        sides: list[Word] = []
        for offset, side_text in ((0, body[:eq_pos]), (eq_pos + 1, body[eq_pos + 1 :])):
            letters: list[str] = []
            for m in re.finditer(r"\S+", side_text):
                tok = m.group(0)
                if tok not in alphabet:
                    col = body_start + offset + m.start() + 1
                    raise PresentationSyntaxError(f"unknown symbol {tok!r}", lineno, col)
                letters.append(tok)
            sides.append(Word(alphabet, tuple(letters)))
        relations.append((sides[0], sides[1]))
    if alphabet is None:
        raise PresentationSyntaxError("empty presentation", 1, 1)
    return Presentation(alphabet, tuple(relations))


@dataclass(frozen=True, slots=True)
class RewriteSystem:
    """Oriented rules applied leftmost-first, with a termination certificate.

    Every rule must satisfy ``len(replacement) <= len(pattern)``.  If any rule
    preserves length, ``weight`` must be supplied and every application must
    strictly decrease ``(len(word), weight(word))`` lexicographically.
    """

    rules: tuple[tuple[Word, Word], ...]
    weight: Callable[[Word], int] | None = None
    strategy: str = "leftmost-innermost"

    def __post_init__(self) -> None:
        if self.strategy != "leftmost-innermost":
            raise ValueError(f"unsupported strategy: {self.strategy}")
        if not self.rules:
            raise ValueError("rewrite system needs at least one rule")
        needs_certificate = False
        for pattern, replacement in self.rules:
            if len(pattern) == 0:
                raise ValueError("empty rule pattern")
            if len(replacement) > len(pattern):
                raise ValueError(f"lengthening rule {pattern.display()} -> {replacement.display()}")
            if len(replacement) == len(pattern):
                needs_certificate = True
        if needs_certificate and self.weight is None:
            raise ValueError("length-preserving rules require a termination certificate (weight)")

    def _rank(self, w: Word) -> tuple[int, int]:
        return (len(w), self.weight(w) if self.weight is not None else 0)


def _find_leftmost(letters: tuple[str, ...], rules: Sequence[tuple[Word, Word]]):
    for pos in range(len(letters)):
        for pattern, replacement in rules:
            pl = pattern.letters
            if letters[pos : pos + len(pl)] == pl:
                return pos, pattern, replacement
    return None


def rewrite_to_fixpoint(w: Word, rs: RewriteSystem, step_budget: int = 10_000) -> Word:
    """Apply rules at the leftmost matching position until none applies.

    Raises :class:`StepBudgetExceeded` after ``step_budget`` steps (the signal
    for a mis-oriented or non-terminating system) and
    :class:`CertificateViolation` if a step fails to decrease the rank.
    """
    if step_budget <= 0:
        raise ValueError("step budget must be positive")
    steps = 0
    current = w
    rank = rs._rank(current)
    while True:
        hit = _find_leftmost(current.letters, rs.rules)
        if hit is None:
            return current
        steps += 1
        if steps > step_budget:
            raise StepBudgetExceeded(f"no fixpoint within {step_budget} steps from {w.display()}")
        pos, pattern, replacement = hit
        current = Word(
            current.alphabet,
            current.letters[:pos] + replacement.letters + current.letters[pos + len(pattern) :],
        )
        new_rank = rs._rank(current)
        if new_rank >= rank:
            raise CertificateViolation(
                f"rule {pattern.display()} -> {replacement.display()} did not decrease the rank"
            )
        rank = new_rank


def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """Yield every word of length <= max_len exactly once, in shortlex order."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    names = alphabet.names
    for length in range(max_len + 1):
        for combo in itertools.product(names, repeat=length):
            yield Word(alphabet, combo)


def inversion_count(w: Word, early: str = "a", late: str = "b") -> int:
    """Number of (early, later late) letter pairs; certificate weight for rules
    that move a block of ``early`` letters to the right past a ``late`` letter."""
    seen_early = 0
    inversions = 0
    for ch in w.letters:
        if ch == early:
            seen_early += 1
        elif ch == late:
            inversions += seen_early
    return inversions
