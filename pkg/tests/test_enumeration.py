import io
import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from richwords import (BudgetExceededError, CacheFormatError,
                       CacheQMismatchError, CacheVersionError,
                       EnumerationConfig, InputError, count_rich,
                       count_rich_symmetric, load_cache, save_cache)

from . import oracles


def test_counts_against_bruteforce_binary():
    table = count_rich(2, 8)
    brute = oracles.rich_counts_brute(2, 8)
    for n in range(1, 9):
        assert table.entries[n].count == brute[n]


def test_counts_against_bruteforce_ternary():
    table = count_rich(3, 5)
    brute = oracles.rich_counts_brute(3, 5)
    for n in range(1, 6):
        assert table.entries[n].count == brute[n]


def test_all_short_words_are_rich():
    # every word of length <= 2 is rich, so the counts are q^n there
    table = count_rich(3, 2)
    assert table.entries[1].count == 3
    assert table.entries[2].count == 9


def test_submultiplicative_growth():
    table = count_rich(2, 12)
    for n in range(2, 13):
        # appending a letter to a rich word cannot create two rich words
        assert table.entries[n].count <= 2 * table.entries[n - 1].count


def test_max_luf_tracked():
    table = count_rich(2, 6)
    brute = {n: max(len(oracles.peel(w)) for w in oracles.all_words(2, n)
                    if oracles.is_rich(w)) for n in range(1, 7)}
    for n in range(1, 7):
        assert table.entries[n].max_luf == brute[n]


def test_max_luf_disabled():
    table = count_rich(2, 5, EnumerationConfig(with_max_luf=False))
    assert all(table.entries[n].max_luf is None for n in range(1, 6))


def test_symmetric_agrees_with_plain():
    for q in (2, 3, 4):
        plain = count_rich(q, 6, EnumerationConfig(with_max_luf=False))
        sym = count_rich_symmetric(q, 6)
        for n in range(1, 7):
            assert sym.entries[n].count == plain.entries[n].count, (q, n)


def test_parallel_matches_serial():
    serial = count_rich(2, 11, EnumerationConfig(workers=1))
    for workers, depth in ((2, 3), (3, 5), (4, 8)):
        par = count_rich(2, 11, EnumerationConfig(workers=workers,
                                                  shard_depth=depth))
        assert par.entries == serial.entries, (workers, depth)


def test_parallel_caches_byte_identical(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    save_cache(count_rich(2, 10, EnumerationConfig(workers=1)), a)
    save_cache(count_rich(2, 10, EnumerationConfig(workers=3,
                                                   shard_depth=4)), b)
    assert a.read_bytes() == b.read_bytes()


def test_budget_enforced():
    with pytest.raises(BudgetExceededError) as exc:
        count_rich(2, 12, EnumerationConfig(node_budget=50))
    assert exc.value.budget == 50
    assert exc.value.visited >= 50


def test_budget_error_in_parallel_mode():
    with pytest.raises(BudgetExceededError):
        count_rich(2, 14, EnumerationConfig(workers=2, shard_depth=3,
                                            node_budget=200))


def test_invalid_args():
    with pytest.raises(InputError):
        count_rich(1, 5)
    with pytest.raises(InputError):
        count_rich(2, 0)
    with pytest.raises(InputError):
        count_rich(2, 5, EnumerationConfig(node_budget=0))


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "counts.jsonl"
    table = count_rich(2, 7)
    save_cache(table, path)
    loaded = load_cache(path)
    assert loaded.q == table.q
    assert loaded.entries == table.entries
    assert loaded.provenance == table.provenance


def test_cache_roundtrip_without_maxluf(tmp_path):
    path = tmp_path / "counts.jsonl"
    table = count_rich(3, 4, EnumerationConfig(with_max_luf=False))
    save_cache(table, path)
    loaded = load_cache(path, expected_q=3)
    assert loaded.entries == table.entries


def test_cache_counts_serialized_as_strings(tmp_path):
    path = tmp_path / "counts.jsonl"
    save_cache(count_rich(2, 5), path)
    lines = path.read_text().strip().split("\n")
    header = json.loads(lines[0])
    assert header["schema_version"] == 1
    assert header["q"] == 2
    for line in lines[1:]:
        rec = json.loads(line)
        assert isinstance(rec["count"], str)
        assert rec["count"].isdigit()


def test_cache_q_mismatch(tmp_path):
    path = tmp_path / "counts.jsonl"
    save_cache(count_rich(2, 4), path)
    with pytest.raises(CacheQMismatchError):
        load_cache(path, expected_q=3)


def test_cache_version_rejected(tmp_path):
    path = tmp_path / "counts.jsonl"
    save_cache(count_rich(2, 4), path)
    lines = path.read_text().split("\n")
    header = json.loads(lines[0])
    header["schema_version"] = 99
    lines[0] = json.dumps(header)
    path.write_text("\n".join(lines))
    with pytest.raises(CacheVersionError):
        load_cache(path)


@pytest.mark.parametrize("mangle", [
    lambda text: "",                                  # empty file
    lambda text: "not json\n" + text,                 # garbage header
    lambda text: text.replace('"count"', '"xcount"'),  # missing key
    lambda text: text.replace('"n": 1', '"n": 1.5'),  # non-int n
    lambda text: text + text.split("\n")[1] + "\n",   # duplicate n
    lambda text: "[1,2]\n" + "\n".join(text.split("\n")[1:]),  # non-object
])
def test_cache_malformed_rejected(tmp_path, mangle):
    path = tmp_path / "counts.jsonl"
    save_cache(count_rich(2, 4), path)
    path.write_text(mangle(path.read_text()))
    with pytest.raises(CacheFormatError):
        load_cache(path)


def test_cache_nondecimal_count_rejected(tmp_path):
    path = tmp_path / "counts.jsonl"
    save_cache(count_rich(2, 3), path)
    path.write_text(path.read_text().replace('"count": "4"',
                                             '"count": "4x"'))
    with pytest.raises(CacheFormatError):
        load_cache(path)


def test_provenance_records_route():
    plain = count_rich(2, 3)
    sym = count_rich_symmetric(2, 3)
    assert plain.provenance["symmetric"] is False
    assert sym.provenance["symmetric"] is True
    assert "date" not in plain.provenance


def test_provenance_date_opt_in():
    table = count_rich(2, 3, EnumerationConfig(date_stamp="2026-08-16"))
    assert table.provenance["date"] == "2026-08-16"


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 3), st.integers(1, 6))
def test_counts_match_bruteforce_property(q, n_max):
    table = count_rich(q, n_max, EnumerationConfig(with_max_luf=False))
    assert table.entries[n_max].count == sum(
        1 for w in oracles.all_words(q, n_max) if oracles.is_rich(w))
