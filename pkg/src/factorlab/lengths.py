"""Executable contracts for length functions on a monoid.

A *right length function* satisfies lambda(a) > lambda(b) whenever a = b*c
with c a nonunit; a *length function* demands the strict drop for inner
factors on either side; a *superadditive* one satisfies
lambda(a*b) >= lambda(a) + lambda(b) and vanishes only on units.  Each
stronger contract implies the weaker ones, and any of them bounds the number
of atoms in a factorization: a product of k nonunits has value at least k, so
max factorization length <= lambda.

The harness is host-agnostic: callers hand over factorization triples
(whole, left, right) together with the host's multiplication and equality,
and every triple is re-verified before the contract is evaluated.  The
harness never invents factorizations of its own.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable, Collection, Sequence

RIGHT = "right"
TWO_SIDED = "two-sided"
SUPERADDITIVE = "superadditive"

_FLAVORS = (RIGHT, TWO_SIDED, SUPERADDITIVE)


@dataclass(frozen=True)
class LengthFunctionSpec:
    evaluator: Callable[[Any], int]
    flavor: str
    is_unit: Callable[[Any], bool]
    name: str = "lambda"

    def __post_init__(self) -> None:
        if self.flavor not in _FLAVORS:
            raise ValueError(f"flavor must be one of {_FLAVORS}: {self.flavor!r}")


@dataclass(frozen=True)
class Violation:
    whole: Any
    left: Any
    right: Any
    value_whole: int
    value_left: int
    value_right: int
    reason: str


@dataclass(frozen=True)
class ViolationReport:
    contract: str
    sample_size: int
    violations: tuple[Violation, ...]

    def ok(self) -> bool:
        return not self.violations

    def to_json(self, describe: Callable[[Any], str] = str) -> str:
        return json.dumps(
            {
                "contract": self.contract,
                "samples": self.sample_size,
                "violations": [
                    {
                        "a": describe(v.whole),
                        "b": describe(v.left),
                        "c": describe(v.right),
                        "lambda_a": v.value_whole,
                        "lambda_b": v.value_left,
                        "lambda_c": v.value_right,
                        "reason": v.reason,
                    }
                    for v in self.violations
                ],
            },
            indent=2,
        )


def check_contract(
    spec: LengthFunctionSpec,
    samples: Sequence[tuple[Any, Any, Any]],
    multiply: Callable[[Any, Any], Any],
    equals: Callable[[Any, Any], bool],
) -> ViolationReport:
    """Evaluate the declared contract on verified factorization triples.

    Each sample (whole, left, right) must satisfy whole = left * right in the
    host structure; a failing triple is an input error, not a violation.
    """
    violations: list[Violation] = []
    for whole, left, right in samples:
        if not equals(whole, multiply(left, right)):
            raise ValueError("sample triple is not a factorization in the host structure")
        lam_w = spec.evaluator(whole)
        lam_l = spec.evaluator(left)
        lam_r = spec.evaluator(right)
        if min(lam_w, lam_l, lam_r) < 0:
            raise ValueError("length function values must be non-negative")
        if spec.flavor == SUPERADDITIVE:
            if lam_w < lam_l + lam_r:
                violations.append(
                    Violation(whole, left, right, lam_w, lam_l, lam_r, "lambda(bc) < lambda(b)+lambda(c)")
                )
            for value, element in ((lam_w, whole), (lam_l, left), (lam_r, right)):
                if value == 0 and not spec.is_unit(element):
                    violations.append(
                        Violation(whole, left, right, lam_w, lam_l, lam_r, "lambda = 0 on a nonunit")
                    )
                    break
        else:
            if not spec.is_unit(right) and lam_w <= lam_l:
                violations.append(
                    Violation(whole, left, right, lam_w, lam_l, lam_r, "no strict drop against right factor")
                )
            if spec.flavor == TWO_SIDED and not spec.is_unit(left) and lam_w <= lam_r:
                violations.append(
                    Violation(whole, left, right, lam_w, lam_l, lam_r, "no strict drop against left factor")
                )
    return ViolationReport(spec.flavor, len(samples), tuple(violations))


def bf_bound_check(spec: LengthFunctionSpec, element: Any, lengths: Collection[int]) -> bool:
    """Whether the observed factorization lengths respect max L <= lambda."""
    observed = getattr(lengths, "lengths", lengths)
    return max(observed) <= spec.evaluator(element)


def implication_chain_reports(
    evaluator: Callable[[Any], int],
    is_unit: Callable[[Any], bool],
    samples: Sequence[tuple[Any, Any, Any]],
    multiply: Callable[[Any, Any], Any],
    equals: Callable[[Any, Any], bool],
    name: str = "lambda",
) -> dict[str, ViolationReport]:
    """Run the same evaluator against all three contracts on one sample set.

    A superadditive pass must entail a two-sided pass, which must entail a
    right pass; callers assert that monotonicity.
    """
    return {
        flavor: check_contract(
            LengthFunctionSpec(evaluator, flavor, is_unit, name), samples, multiply, equals
        )
        for flavor in _FLAVORS
    }
