"""The two-relator monoid ``<a, b | baab = aa, aaaab = baaaa>`` as an object.

This monoid is atomic with trivial units and atoms exactly ``{a, b}``, yet
the principal right ideals generated by ``b^k a^2`` form an infinite strictly
ascending chain, so the ascending chain condition on principal ideals fails
and length sets are unbounded (``a^2`` equals ``b^n a^2 b^n`` for every n).

Two independent equality deciders are maintained:

* :func:`normalize` reduces runs of a word with the oriented relations
  (shift fourth powers of ``a`` right past ``b``, cancel ``b``-powers around
  interior ``a^2`` runs) until the canonical parameter tuple appears;
* the group embedding of :mod:`factorlab.groups` decides equality in the
  ambient group.

Their agreement on all short words is part of the test suite; neither code
path calls into the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .groups import ALPHABET, NormalForm, left_quotient, right_quotient
from .words import RewriteSystem, Word, inversion_count, parse_word

A = Word(ALPHABET, ("a",))
B = Word(ALPHABET, ("b",))
EMPTY = Word(ALPHABET)

RELATIONS = (
    (parse_word("b a a b", ALPHABET), parse_word("a a", ALPHABET)),
    (parse_word("a a a a b", ALPHABET), parse_word("b a a a a", ALPHABET)),
)

#: The relations oriented left-to-right; shortening rule first, and the
#: length-preserving shift rule certified by the (a, later b) inversion count.
REWRITE_SYSTEM = RewriteSystem(rules=RELATIONS, weight=inversion_count)


class ChainVerificationError(RuntimeError):
    """Internal consistency failure while certifying a divisor chain."""


def _merge_runs(runs: list[list]) -> list[list]:
    merged: list[list] = []
    for ch, cnt in runs:
        if cnt == 0:
            continue
        if merged and merged[-1][0] == ch:
            merged[-1][1] += cnt
        else:
            merged.append([ch, cnt])
    return merged


def _reduce_runs(runs: list[list]) -> list[list]:
    """Reduce a run-length encoded word over {a, b} to its canonical runs.

    Terminates because cancelling strictly shortens the word while shifting
    preserves length and strictly lowers the (a, later b) inversion count.
    """
    runs = _merge_runs(runs)
    while True:
        changed = False
        # shift a^{4q} to the right past the next b-run
        for i, (ch, cnt) in enumerate(runs):
            if ch == "a" and cnt >= 4 and i + 1 < len(runs):
                q, r = divmod(cnt, 4)
                tail = [["a", r], runs[i + 1], ["a", 4 * q]] + runs[i + 2 :]
                runs = _merge_runs(runs[:i] + tail)
                changed = True
                break
        if changed:
            continue
        # cancel b-powers on both sides of an interior a^2 run
        for i in range(1, len(runs) - 1):
            ch, cnt = runs[i]
            if ch == "a" and cnt == 2:
                d = min(runs[i - 1][1], runs[i + 1][1])
                patch = [["b", runs[i - 1][1] - d], ["a", 2], ["b", runs[i + 1][1] - d]]
                runs = _merge_runs(runs[: i - 1] + patch + runs[i + 2 :])
                changed = True
                break
        if not changed:
            return runs


def _runs_to_normal_form(runs: list[list]) -> NormalForm:
    head_b = 0
    idx = 0
    if runs and runs[0][0] == "b":
        head_b = runs[0][1]
        idx = 1
    blocks: list[tuple[int, int]] = []
    tail_a = 0
    while idx < len(runs):
        a_run = runs[idx][1]
        if idx + 1 < len(runs):
            blocks.append((a_run, runs[idx + 1][1]))
            idx += 2
        else:
            tail_a = a_run
            idx += 1
    return NormalForm(head_b, tuple(blocks), tail_a)


def normalize(w: Word) -> NormalForm:
    """Canonical form of a word, computed purely by rewriting."""
    return _runs_to_normal_form(_reduce_runs([[ch, len(list(g))] for ch, g in itertools.groupby(w.letters)]))


def normalize_letters(letters) -> NormalForm:
    return _runs_to_normal_form(_reduce_runs([[ch, len(list(g))] for ch, g in itertools.groupby(letters)]))


def equal(u: Word, v: Word) -> bool:
    return normalize(u) == normalize(v)


def multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    """Product in the monoid, as canonical forms."""
    return _runs_to_normal_form(
        _reduce_runs(
            [[ch, len(list(g))] for ch, g in itertools.groupby(x.letters() + y.letters())]
        )
    )


def word_of(nf: NormalForm) -> Word:
    return nf.word()


def enumerate_elements(max_len: int) -> Iterator[NormalForm]:
    """Yield each monoid element of minimal word length <= max_len once.

    Canonical words are length-minimal, so generating the valid parameter
    tuples directly enumerates elements without any deduplication.  Yields in
    shortlex order of the canonical words.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    found: list[NormalForm] = []

    def block_suffixes(budget: int, first: bool, head_b: int):
        # sequences of (a_run, b_run) blocks using total length <= budget
        yield ()
        a_choices = (1, 2, 3) if first else (1, 3)
        for a_run in a_choices:
            if first and a_run == 2 and head_b != 0:
                continue
            for b_run in range(1, budget - a_run + 1):
                used = a_run + b_run
                for rest in block_suffixes(budget - used, False, head_b):
                    yield ((a_run, b_run),) + rest

    for head_b in range(max_len + 1):
        for blocks in block_suffixes(max_len - head_b, True, head_b):
            used = head_b + sum(a + b for a, b in blocks)
            for tail_a in range(max_len - used + 1):
                found.append(NormalForm(head_b, blocks, tail_a))
    found.sort(key=NormalForm.shortlex_key)
    yield from found


@dataclass(frozen=True, slots=True)
class AtomVerdict:
    kind: str  # "unit" | "atom" | "composite"
    split: Optional[tuple[NormalForm, NormalForm]] = None


def is_atom(x: NormalForm) -> AtomVerdict:
    """Classify an element as unit, atom, or composite with a witness split.

    Exact, not search-bounded: the only unit is the empty word (the a-count
    is additive and b has infinite order), so the generators are atoms and
    any element with a canonical word of length >= 2 splits after its first
    letter into two nonunits.
    """
    letters = x.letters()
    if not letters:
        return AtomVerdict("unit")
    if len(letters) == 1:
        return AtomVerdict("atom")
    left = normalize_letters(letters[:1])
    right = normalize_letters(letters[1:])
    return AtomVerdict("composite", (left, right))


@dataclass(frozen=True, slots=True)
class LengthSetReport:
    element: NormalForm
    cap: int
    lengths: frozenset[int]
    exhausted: bool

    def sorted_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(self.lengths))


def length_set(x: NormalForm, cap: int) -> LengthSetReport:
    """All factorization lengths of ``x`` up to ``cap``.

    The atoms are exactly the two generators, so the factorization lengths of
    an element are precisely the lengths of the words representing it.  The
    congruence class is closed breadth-first by applying both relations in
    both directions at every position, never visiting words longer than
    ``cap``; ``exhausted`` is False when some lengthening application was
    suppressed by the cap, i.e. when completeness of ``lengths`` relies on
    the cutoff rather than on the closure having stabilized.
    """
    if cap < x.length:
        raise ValueError(f"cap {cap} below minimal word length {x.length}")
    moves = [(lhs.letters, rhs.letters) for lhs, rhs in RELATIONS]
    moves += [(rhs, lhs) for lhs, rhs in moves]
    start = x.letters()
    seen = {start}
    frontier = [start]
    suppressed = False
    while frontier:
        next_frontier = []
        for wrd in frontier:
            n = len(wrd)
            for pat, rep in moves:
                delta = len(rep) - len(pat)
                for pos in range(n - len(pat) + 1):
                    if wrd[pos : pos + len(pat)] != pat:
                        continue
                    if n + delta > cap:
                        suppressed = True
                        continue
                    new = wrd[:pos] + rep + wrd[pos + len(pat) :]
                    if new not in seen:
                        seen.add(new)
                        next_frontier.append(new)
        frontier = next_frontier
    lengths = frozenset(len(wrd) for wrd in seen)
    return LengthSetReport(x, cap, lengths, not suppressed)


@dataclass(frozen=True, slots=True)
class AccpWitness:
    """Certified strictly ascending chain of principal right ideals.

    ``chain[k]`` is ``(b^k a^2, cofactor)`` where each element equals its
    successor times the cofactor, while no division in the other direction
    exists.  The cofactor stored with entry 0 links it to nothing and is kept
    only to make the entries uniform.
    """

    depth: int
    chain: tuple[tuple[NormalForm, NormalForm], ...]


def verify_accp_failure(depth: int) -> AccpWitness:
    """Build and certify the chain witnessing the failure of the ascending
    chain condition on principal right ideals, to the requested depth.

    For each k: ``b^k a^2 = (b^{k+1} a^2) * b`` holds (one exact division
    succeeds) while ``b^{k+1} a^2`` is not a right multiple of ``b^k a^2``
    (the reverse division fails).  Any check failing raises
    :class:`ChainVerificationError`; with a correct oracle it never fires.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    cofactor_b = normalize(B)
    chain: list[tuple[NormalForm, NormalForm]] = []
    elements = [normalize_letters(("b",) * k + ("a", "a")) for k in range(depth + 1)]
    for k in range(depth):
        g_k, g_next = elements[k], elements[k + 1]
        inclusion = left_quotient(g_next.word(), g_k.word())
        if inclusion != cofactor_b:
            raise ChainVerificationError(f"expected cofactor b at step {k}, got {inclusion}")
        if multiply(g_next, inclusion) != g_k:
            raise ChainVerificationError(f"cofactor certificate failed at step {k}")
        if left_quotient(g_k.word(), g_next.word()) is not None:
            raise ChainVerificationError(f"chain not strict at step {k}")
    for element in elements:
        chain.append((element, cofactor_b))
    return AccpWitness(depth, tuple(chain))


@dataclass(frozen=True, slots=True)
class BPowerDivisibility:
    """Outcome of probing whether x is right-divisible by every power of b."""

    forever: bool
    exponent: int  # witness i with x = cofactor * a^2 * b^i, or the max n with x in M*b^n
    cofactor: Optional[NormalForm]
    probe: int


def divisible_by_all_b_powers(x: NormalForm, probe: Optional[int] = None) -> BPowerDivisibility:
    """Decide membership of x in every right ideal generated by a b-power.

    x lies in all of them iff x = u * a^2 * b^i for some i, because a^2
    absorbs matching b-powers on both sides; the certificate is verified by
    multiplication.  Since the b-count is additive, any such i is at most the
    b-count of x, so the default probe (b-count + 4) cannot miss a witness;
    the probe depth is still reported rather than silently trusted.  When no
    witness exists the result carries the largest n <= probe with x in M*b^n.
    """
    if probe is None:
        probe = x.b_count + 4
    if probe < 0:
        raise ValueError("probe must be non-negative")
    aa = ("a", "a")
    for i in range(probe + 1):
        cofactor = right_quotient(x.word(), Word(ALPHABET, aa + ("b",) * i))
        if cofactor is not None:
            certified = multiply(multiply(cofactor, NormalForm(0, (), 2)), NormalForm(i, (), 0))
            if certified != x:
                raise ChainVerificationError("b-power certificate failed to multiply back")
            return BPowerDivisibility(True, i, cofactor, probe)
    for n in range(probe, -1, -1):
        if right_quotient(x.word(), Word(ALPHABET, ("b",) * n)) is not None:
            return BPowerDivisibility(False, n, None, probe)
    raise ChainVerificationError("element not divisible by b^0")  # pragma: no cover


def right_length_refutation_triples(bound: int) -> list[tuple[NormalForm, NormalForm, NormalForm]]:
    """Verified factorizations (whole, left, right) that defeat every claimed
    right length function on this monoid within ``bound`` steps.

    The family combines ``b^k = b^{k-1} * b``, ``b^n a^2 = b^n * a^2`` and
    ``a^2 = (b^n a^2) * b^n`` for n, k <= bound: any function passing the
    right-length contract on all of them would have to exceed its own value
    at ``a^2`` once n does.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    aa = normalize_letters(("a", "a"))
    triples = []
    for n in range(1, bound + 1):
        b_n = NormalForm(n, (), 0)
        b_prev = NormalForm(n - 1, (), 0)
        bn_aa = normalize_letters(("b",) * n + ("a", "a"))
        triples.append((b_n, b_prev, NormalForm(1, (), 0)))
        triples.append((bn_aa, b_n, aa))
        triples.append((aa, bn_aa, b_n))
    return triples


#: User-style length function candidates on the monoid, all doomed: the
#: monoid admits no right length function at all.
CANDIDATE_LENGTH_FUNCTIONS = {
    "word-length": lambda nf: nf.length,
    "a-count": lambda nf: nf.a_count,
    "a-plus-b-count": lambda nf: nf.a_count + nf.b_count,
}


def refute_right_length(evaluator):
    """Refute a claimed right length function on the monoid.

    Runs the right-length contract on the b-bordered triple family up to
    n = evaluator(a^2) + 1; a genuine right length function would force
    evaluator(a^2) > evaluator(b^n a^2) >= n there, which is impossible once
    n passes evaluator(a^2), so a violation must surface within the bound.
    Returns (report, bound).
    """
    from . import lengths

    aa = NormalForm(0, (), 2)
    bound = max(1, evaluator(aa) + 1)
    triples = right_length_refutation_triples(bound)
    spec = lengths.LengthFunctionSpec(
        evaluator, lengths.RIGHT, lambda nf: nf.is_identity(), "candidate"
    )
    report = lengths.check_contract(spec, triples, multiply, lambda x, y: x == y)
    return report, bound


def nonunit_power_witness(x: NormalForm, n: int) -> list[NormalForm]:
    """Express x as a product of exactly n nonunits, if a representing word of
    length >= n exists among the b-bordered representatives; used to probe how
    deep x sits inside powers of the nonunit set."""
    if n < 1:
        raise ValueError("n must be positive")
    letters = x.letters()
    k = 0
    while len(letters) < n:
        # pad with the identity a^2 = b^k a^2 b^k, which only works for
        # elements right- and left-absorbing b-powers; fall back to error
        k += 1
        candidate = ("b",) * k + x.letters() + ("b",) * k
        if normalize_letters(candidate) != x:
            raise ValueError(f"{x} has no representing word of length >= {n}")
        letters = candidate
    # split into n nonempty chunks
    cuts = [round(i * len(letters) / n) for i in range(n + 1)]
    factors = [normalize_letters(letters[cuts[i] : cuts[i + 1]]) for i in range(n)]
    if any(f.is_identity() for f in factors):  # pragma: no cover
        raise ValueError("degenerate chunking")
    product = factors[0]
    for f in factors[1:]:
        product = multiply(product, f)
    if product != x:
        raise ChainVerificationError("nonunit power witness failed to multiply back")
    return factors
