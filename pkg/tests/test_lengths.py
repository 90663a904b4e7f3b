import json
import random

import pytest

from factorlab import monoid, ore
from factorlab.groups import NormalForm
from factorlab.lengths import (
    RIGHT,
    SUPERADDITIVE,
    TWO_SIDED,
    LengthFunctionSpec,
    ViolationReport,
    bf_bound_check,
    check_contract,
    implication_chain_reports,
)
from factorlab.monoid import length_set, multiply, normalize
from factorlab.words import Alphabet, Word, parse_word

AB = Alphabet.from_names(("a", "b"))


def free_triples(rnd, count):
    """Random factorizations in the free monoid on two letters."""
    triples = []
    for _ in range(count):
        left = Word(AB, tuple(rnd.choice("ab") for _ in range(rnd.randint(0, 6))))
        right = Word(AB, tuple(rnd.choice("ab") for _ in range(rnd.randint(0, 6))))
        triples.append((left + right, left, right))
    return triples


FREE_OPS = dict(multiply=lambda u, v: u + v, equals=lambda u, v: u == v)


def test_word_length_is_a_length_function_on_the_free_monoid():
    rnd = random.Random(1)
    samples = free_triples(rnd, 100)
    reports = implication_chain_reports(
        len, lambda word: len(word) == 0, samples, **FREE_OPS
    )
    assert all(report.ok() for report in reports.values())


def test_degree_is_a_length_function_on_polynomials():
    rnd = random.Random(2)
    samples = []
    while len(samples) < 80:
        f = ore.random_poly(rnd, nonzero=True)
        g = ore.random_poly(rnd, nonzero=True)
        samples.append((f * g, f, g))
    reports = implication_chain_reports(
        ore.base_weight, ore.Poly.is_unit, samples, multiply=lambda p, q: p * q,
        equals=lambda p, q: p == q,
    )
    assert all(report.ok() for report in reports.values())


def test_zero_function_fails_on_a_nonunit():
    samples = [(Word(AB, ("a",)), Word(AB, ("a",)), Word(AB))]
    # a = a * e passes vacuously for the right contract ...
    spec = LengthFunctionSpec(lambda _: 0, RIGHT, lambda word: len(word) == 0)
    assert check_contract(spec, samples, **FREE_OPS).ok()
    # ... but the superadditive contract sees the nonunit with value 0
    spec = LengthFunctionSpec(lambda _: 0, SUPERADDITIVE, lambda word: len(word) == 0)
    report = check_contract(spec, samples, **FREE_OPS)
    assert not report.ok()
    assert report.violations[0].reason == "lambda = 0 on a nonunit"


def test_implication_chain_is_monotone():
    # passing a stronger contract entails passing the weaker ones on the same
    # samples: superadditive => two-sided => right
    rnd = random.Random(3)
    samples = free_triples(rnd, 60)
    evaluators = [len, lambda word: 2 * len(word), lambda word: len(word) + 1]
    for evaluator in evaluators:
        reports = implication_chain_reports(
            evaluator, lambda word: len(word) == 0, samples, **FREE_OPS
        )
        if reports[SUPERADDITIVE].ok():
            assert reports[TWO_SIDED].ok()
        if reports[TWO_SIDED].ok():
            assert reports[RIGHT].ok()


def test_implications_are_strict():
    # len + 1 drops strictly against every nonunit factor, so it passes the
    # right and two-sided contracts, but (len+1)(uv) < (len+1)(u) + (len+1)(v)
    # whenever both factors are nonempty: superadditivity fails
    rnd = random.Random(9)
    samples = [t for t in free_triples(rnd, 80) if len(t[1]) > 0 and len(t[2]) > 0]
    reports = implication_chain_reports(
        lambda word: len(word) + 1, lambda word: len(word) == 0, samples, **FREE_OPS
    )
    assert reports[RIGHT].ok()
    assert reports[TWO_SIDED].ok()
    assert not reports[SUPERADDITIVE].ok()


def test_bad_triple_is_an_input_error():
    spec = LengthFunctionSpec(len, RIGHT, lambda word: len(word) == 0)
    bad = [(Word(AB, ("a",)), Word(AB, ("b",)), Word(AB))]
    with pytest.raises(ValueError):
        check_contract(spec, bad, **FREE_OPS)


def test_negative_values_rejected():
    spec = LengthFunctionSpec(lambda _: -1, RIGHT, lambda word: len(word) == 0)
    with pytest.raises(ValueError):
        check_contract(spec, [(Word(AB, ("a",)), Word(AB), Word(AB, ("a",)))], **FREE_OPS)


def test_flavor_validation():
    with pytest.raises(ValueError):
        LengthFunctionSpec(len, "sideways", lambda _: False)


def test_right_length_functions_are_positive_on_nonunits():
    rnd = random.Random(4)
    samples = free_triples(rnd, 50)
    spec = LengthFunctionSpec(len, RIGHT, lambda word: len(word) == 0)
    assert check_contract(spec, samples, **FREE_OPS).ok()
    for whole, left, right in samples:
        for element in (whole, left, right):
            if len(element) > 0:
                assert spec.evaluator(element) > 0


def test_bf_bound_on_free_monoid_word():
    spec = LengthFunctionSpec(len, RIGHT, lambda word: len(word) == 0)
    x = parse_word("a b a b", AB)
    assert bf_bound_check(spec, x, [4])
    assert not bf_bound_check(spec, x, [5])


def test_bf_bound_on_polynomials():
    # y^2 - 1 = (y - 1)(y + 1): two atoms, degree two
    spec = LengthFunctionSpec(ore.base_weight, RIGHT, ore.Poly.is_unit)
    y2m1 = ore.Poly.of(-1, 0, 1)
    assert (ore.Poly.of(-1, 1) * ore.Poly.of(1, 1)) == y2m1
    assert bf_bound_check(spec, y2m1, [2])


def test_bf_bound_accepts_length_set_reports():
    spec = LengthFunctionSpec(lambda nf: nf.length, RIGHT, NormalForm.is_identity)
    b = normalize(parse_word("b", monoid.ALPHABET))
    assert bf_bound_check(spec, b, length_set(b, 5))


def test_monoid_has_no_right_length_function():
    # the executable content of the no-BF statement: every candidate dies on
    # the b-bordered triple family, and a^2 sits in arbitrarily deep products
    # of nonunits (depth probed to 10; emptiness would be needed for BF)
    for name, evaluator in monoid.CANDIDATE_LENGTH_FUNCTIONS.items():
        report, bound = monoid.refute_right_length(evaluator)
        assert not report.ok(), name
    aa = NormalForm(0, (), 2)
    for depth in range(1, 11):
        factors = monoid.nonunit_power_witness(aa, depth)
        assert len(factors) == depth


def test_report_json_schema():
    spec = LengthFunctionSpec(
        lambda nf: nf.a_count, RIGHT, NormalForm.is_identity, "a-count"
    )
    triples = monoid.right_length_refutation_triples(3)
    report = check_contract(
        spec, triples, multiply=multiply, equals=lambda x, y: x == y
    )
    doc = json.loads(report.to_json(lambda nf: nf.display()))
    assert doc["contract"] == RIGHT
    assert doc["samples"] == len(triples)
    assert doc["violations"], "the a-count candidate must be refuted"
    first = doc["violations"][0]
    assert set(first) == {"a", "b", "c", "lambda_a", "lambda_b", "lambda_c", "reason"}


def test_report_ok_shape():
    report = ViolationReport(RIGHT, 0, ())
    assert report.ok()
    assert json.loads(report.to_json())["violations"] == []
