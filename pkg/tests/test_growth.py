import pytest

from factorlab import monoid
from factorlab.groups import ALPHABET
from factorlab.growth import (
    GrowthTable,
    builtin_table,
    classify,
    table_from_words,
    two_relator_table,
    two_relator_table_by_oracle,
)


def test_free_monoid_table_matches_closed_form():
    table = builtin_table("free", 16)
    assert table.truncated_at is None
    assert all(d == 2 ** (n + 1) - 1 for n, d in table.entries)


def test_free_commutative_table_matches_closed_form():
    table = builtin_table("free-commutative", 16)
    assert all(2 * d == (n + 1) * (n + 2) for n, d in table.entries)


def test_two_relator_small_dimensions():
    table = builtin_table("two-relator", 2)
    assert table.entries == ((0, 1), (1, 3), (2, 7))


def test_two_relator_tables_agree_up_to_10():
    by_tuples = two_relator_table(10)
    by_oracle = two_relator_table_by_oracle(10)
    assert by_tuples.entries == by_oracle.entries


def test_word_table_with_normalizer_key():
    # a third computation of the same dimensions, keyed by the rewriting
    # normalizer instead of the group embedding
    table = table_from_words(ALPHABET, monoid.normalize, 8, "two-relator")
    assert table.entries == two_relator_table(8).entries


def test_entries_strictly_increasing():
    for family in ("free", "free-commutative", "two-relator"):
        dims = builtin_table(family, 12).dims()
        assert all(b > a for a, b in zip(dims, dims[1:]))


def test_classification_hints():
    assert classify(builtin_table("free", 16)).kind == "exponential"
    fc = classify(builtin_table("free-commutative", 20))
    assert (fc.kind, fc.degree) == ("polynomial", 2)
    constant = GrowthTable("point", tuple((n, 5) for n in range(12)))
    assert (classify(constant).kind, classify(constant).degree) == ("polynomial", 0)
    linear = GrowthTable("line", tuple((n, n + 1) for n in range(17)))
    assert (classify(linear).kind, classify(linear).degree) == ("polynomial", 1)
    cubic = GrowthTable("cubic", tuple((n, (n + 1) ** 3) for n in range(21)))
    assert (classify(cubic).kind, classify(cubic).degree) == ("polynomial", 3)


def test_two_relator_classifies_as_exponential_hint():
    hint = classify(builtin_table("two-relator", 12))
    assert hint.kind == "exponential"
    assert hint.ratio > 1.5


def test_classify_requires_enough_entries():
    with pytest.raises(ValueError):
        classify(GrowthTable("tiny", tuple((n, n + 1) for n in range(5))))


def test_budget_truncation_marker():
    table = builtin_table("free", 16, budget=100)
    assert table.truncated_at == 6
    assert table.entries[-1][0] == 5
    assert "truncated" in table.csv()
    full = builtin_table("free", 5)
    assert "truncated" not in full.csv()
    tr = builtin_table("two-relator", 12, budget=50)
    assert tr.truncated_at is not None


def test_output_formats():
    table = builtin_table("free-commutative", 8)
    csv = table.csv().splitlines()
    assert csv[0] == "n,dim"
    assert csv[1] == "0,1"
    cols = table.columns().splitlines()
    assert cols[0] == "0 1"


def test_bad_family_and_bounds():
    with pytest.raises(ValueError):
        builtin_table("boolean", 5)
    with pytest.raises(ValueError):
        builtin_table("free", -1)
