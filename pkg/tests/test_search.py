"""Tests for the bounded search, nth-root arithmetic, and the case report."""

import random

import pytest

import powersums.search as search_mod
from powersums.pell import family_k1
from powersums.search import (
    SearchConfig,
    SolutionRecord,
    VerificationError,
    integer_nth_root,
    pipeline_report,
    search_solutions,
)


def test_integer_nth_root_examples():
    assert integer_nth_root(100, 2) == (10, True)
    assert integer_nth_root(100, 3) == (4, False)
    assert integer_nth_root(960400, 2) == (980, True)
    assert integer_nth_root(1, 5) == (1, True)
    assert integer_nth_root(2**90, 9) == (2**10, True)
    assert integer_nth_root(2**90 - 1, 9) == (2**10 - 1, False)
    with pytest.raises(ValueError):
        integer_nth_root(0, 2)
    with pytest.raises(ValueError):
        integer_nth_root(10, 1)


def test_integer_nth_root_properties():
    rng = random.Random(8)
    for _ in range(300):
        n = rng.randint(2, 9)
        s = rng.randint(1, 10**18)
        root, exact = integer_nth_root(s, n)
        assert root**n <= s < (root + 1) ** n
        assert exact == (root**n == s)
        # monotone in s
        root2, _ = integer_nth_root(s + 1, n)
        assert root2 >= root
        # round-trips on exact powers
        assert integer_nth_root(root**n, n) == (root, True)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(0, 2, 10, 2)
    with pytest.raises(ValueError):
        SearchConfig(1, 2, 0, 2)
    with pytest.raises(ValueError):
        SearchConfig(1, 2, 10, 1)
    with pytest.raises(ValueError):
        SearchConfig(1, 2, 10, 2, partitions=0)
    with pytest.raises(ValueError):
        SearchConfig(1, 2, 10, 2, output_format="xml")


def test_search_finds_known_square():
    records = search_solutions(SearchConfig(1, 2, 1000, 5))
    assert SolutionRecord(1, 2, 8, 10, 2) in records
    assert SolutionRecord(1, 2, 800, 980, 2) in records
    assert records == sorted(records, key=lambda r: (r.x, r.n))


def test_search_matches_naive_recomputation():
    cfg = SearchConfig(2, 2, 200, 5)
    records = search_solutions(cfg)
    naive = []
    for x in range(1, 201):
        s = sum(j**2 for j in range(x + 1, 2 * x + 1))
        for n in range(2, 6):
            y = 1
            while y**n < s:
                y += 1
            if y**n == s:
                naive.append((x, y, n))
    assert [(r.x, r.y, r.n) for r in records] == naive


def test_partition_invariance():
    base = search_solutions(SearchConfig(1, 2, 2000, 3, partitions=1))
    for parts in (4, 16, 3000):
        assert search_solutions(SearchConfig(1, 2, 2000, 3, partitions=parts)) == base


def test_family_records_appear_in_search():
    records = search_solutions(SearchConfig(1, 2, 1000, 2))
    family = [r for r in family_k1(2, 3) if r.x <= 1000]
    assert family, "expected at least one family record in range"
    found = {(r.x, r.y) for r in records}
    for fam in family:
        assert (fam.x, fam.y) in found


def test_reverification_aborts_on_mismatch(monkeypatch):
    monkeypatch.setattr(search_mod, "power_sum_direct", lambda k, l, x: -1)
    with pytest.raises(VerificationError):
        search_solutions(SearchConfig(1, 2, 100, 2))


def test_pipeline_report():
    report = pipeline_report(2, 2, [2])
    assert report["has_two_distinct_zeros"] is True
    entry = report["exponents"][0]
    assert entry["bound_applies"] is True and entry["family_generator"] is None

    report = pipeline_report(1, 2, [2, 3])
    first, second = report["exponents"]
    assert first["exceptional"] == "shape_b" and first["family_generator"] == "k1"
    assert first["bound_applies"] is False
    assert second["bound_applies"] is True and second["t_values"] == ["3", "3"]

    report = pipeline_report(3, 2, [2])
    entry = report["exponents"][0]
    assert entry["exceptional"] == "shape_b" and entry["family_generator"] == "k3"

    with pytest.raises(ValueError):
        pipeline_report(1, 2, [1])
    with pytest.raises(ValueError):
        pipeline_report(0, 2, [2])
