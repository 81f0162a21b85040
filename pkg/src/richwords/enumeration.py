"""Exact enumeration of rich words by pruned depth-first search.

Every prefix of a rich word is rich, so the q-ary tree of words can be
walked with a single journaled eertree: a push that creates no new
palindromic factor kills the whole subtree.  Counts are exact Python
integers throughout.

Two reductions are available:

* count_rich walks all words.  With workers > 1 it first collects the
  rich prefixes of a fixed shard depth serially, then hands each prefix
  subtree to a process pool; counts merge by addition, so the result is
  identical for any worker count.
* count_rich_symmetric walks only canonical words (each letter first
  appears in increasing order) and multiplies the count for words using
  exactly k distinct letters by q(q-1)...(q-k+1).  Valid because richness
  is invariant under permuting the alphabet.

Both walks optionally track the maximum number of parts in the
longest-palindromic-suffix peel among rich words of each length.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .eertree import Eertree
from .errors import (
    BudgetExceededError,
    CacheFormatError,
    CacheQMismatchError,
    CacheVersionError,
    InputError,
)
from .version import TOOL_VERSION

CACHE_SCHEMA_VERSION = 1
DEFAULT_NODE_BUDGET = 10**9


@dataclass
class EnumerationConfig:
    """Knobs for the search; the defaults suit test-sized runs."""

    workers: int = 1
    with_max_luf: bool = True
    node_budget: int = DEFAULT_NODE_BUDGET
    shard_depth: int = 8
    date_stamp: str | None = None


@dataclass(frozen=True)
class RichEntry:
    count: int
    max_luf: int | None


@dataclass
class RichCountTable:
    q: int
    entries: dict[int, RichEntry] = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)


def _peel_length(lps: list[int], n: int) -> int:
    # lps[k] = longest palindromic suffix length of the k-letter prefix
    parts = 0
    m = n
    while m > 0:
        m -= lps[m]
        parts += 1
    return parts


def _walk(tree, lps, depth, q, n_max, counts, maxluf, budget_state) -> None:
    nxt = depth + 1
    for a in range(q):
        budget_state[0] += 1
        if budget_state[0] > budget_state[1]:
            raise BudgetExceededError(budget_state[0], budget_state[1])
        if tree.push(a):
            counts[nxt] += 1
            if maxluf is not None:
                lps.append(tree.longest_pal_suffix_length())
                parts = _peel_length(lps, nxt)
                if parts > maxluf[nxt]:
                    maxluf[nxt] = parts
            if nxt < n_max:
                _walk(tree, lps, nxt, q, n_max, counts, maxluf, budget_state)
            if maxluf is not None:
                lps.pop()
        tree.pop()


def _collect_prefixes(tree, lps, depth, q, shard_depth, counts, maxluf,
                      budget_state, prefixes) -> None:
    nxt = depth + 1
    for a in range(q):
        budget_state[0] += 1
        if budget_state[0] > budget_state[1]:
            raise BudgetExceededError(budget_state[0], budget_state[1])
        if tree.push(a):
            counts[nxt] += 1
            if maxluf is not None:
                lps.append(tree.longest_pal_suffix_length())
                parts = _peel_length(lps, nxt)
                if parts > maxluf[nxt]:
                    maxluf[nxt] = parts
            if nxt == shard_depth:
                prefixes.append(tree.processed())
            else:
                _collect_prefixes(tree, lps, nxt, q, shard_depth, counts,
                                  maxluf, budget_state, prefixes)
            if maxluf is not None:
                lps.pop()
        tree.pop()


def _subtree_task(args):
    q, prefix, n_max, with_max_luf, budget = args
    tree = Eertree(q)
    lps = [0]
    for a in prefix:
        created = tree.push(a)
        if not created:  # shard prefixes are rich by construction
            raise InputError("shard prefix is not rich")
        lps.append(tree.longest_pal_suffix_length())
    depth = len(prefix)
    counts = [0] * (n_max + 1)
    maxluf = [0] * (n_max + 1) if with_max_luf else None
    budget_state = [0, budget]
    _walk(tree, lps if with_max_luf else None, depth, q, n_max, counts,
          maxluf, budget_state)
    return counts, maxluf, budget_state[0]


def _validate_args(q, n_max):
    if not isinstance(q, int) or q < 2:
        raise InputError(f"alphabet size must be an integer >= 2, got {q!r}")
    if not isinstance(n_max, int) or n_max < 1:
        raise InputError(f"n_max must be a positive integer, got {n_max!r}")


def _provenance(config: EnumerationConfig, symmetric: bool) -> dict:
    prov = {
        "symmetric": symmetric,
        "tool_version": TOOL_VERSION,
    }
    # the stamp is opt-in so that identical configs give identical tables
    if config.date_stamp is not None:
        prov["date"] = config.date_stamp
    return prov


def count_rich(q: int, n_max: int,
               config: EnumerationConfig | None = None) -> RichCountTable:
    """Count rich words of every length 1..n_max over q letters."""
    _validate_args(q, n_max)
    config = config or EnumerationConfig()
    if config.node_budget < 1:
        raise InputError("node budget must be positive")

    counts = [0] * (n_max + 1)
    maxluf = [0] * (n_max + 1) if config.with_max_luf else None
    tree = Eertree(q)
    lps = [0]
    budget_state = [0, config.node_budget]

    shard_depth = min(config.shard_depth, n_max - 1)
    if config.workers <= 1 or shard_depth < 1:
        _walk(tree, lps, 0, q, n_max, counts, maxluf, budget_state)
    else:
        prefixes: list[tuple[int, ...]] = []
        _collect_prefixes(tree, lps, 0, q, shard_depth, counts, maxluf,
                          budget_state, prefixes)
        remaining = config.node_budget - budget_state[0]
        tasks = [(q, p, n_max, config.with_max_luf, remaining)
                 for p in prefixes]
        total_child_nodes = 0
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for task_counts, task_maxluf, visited in pool.map(
                    _subtree_task, tasks, chunksize=16):
                total_child_nodes += visited
                for n in range(shard_depth + 1, n_max + 1):
                    counts[n] += task_counts[n]
                    if maxluf is not None and task_maxluf[n] > maxluf[n]:
                        maxluf[n] = task_maxluf[n]
        if budget_state[0] + total_child_nodes > config.node_budget:
            raise BudgetExceededError(
                budget_state[0] + total_child_nodes, config.node_budget)

    entries = {
        n: RichEntry(counts[n], maxluf[n] if maxluf is not None else None)
        for n in range(1, n_max + 1)
    }
    return RichCountTable(q, entries, _provenance(config, symmetric=False))


def _walk_canonical(tree, lps, depth, used, q, n_max, counts_nk, maxluf,
                    budget_state) -> None:
    nxt = depth + 1
    # canonical words introduce letters in increasing order, so the next
    # letter is one of 0..used
    for a in range(min(used + 1, q)):
        budget_state[0] += 1
        if budget_state[0] > budget_state[1]:
            raise BudgetExceededError(budget_state[0], budget_state[1])
        if tree.push(a):
            now_used = used + (1 if a == used else 0)
            counts_nk[nxt][now_used] += 1
            if maxluf is not None:
                lps.append(tree.longest_pal_suffix_length())
                parts = _peel_length(lps, nxt)
                if parts > maxluf[nxt]:
                    maxluf[nxt] = parts
                if nxt < n_max:
                    _walk_canonical(tree, lps, nxt, now_used, q, n_max,
                                    counts_nk, maxluf, budget_state)
                lps.pop()
            elif nxt < n_max:
                _walk_canonical(tree, lps, nxt, now_used, q, n_max,
                                counts_nk, maxluf, budget_state)
        tree.pop()


def count_rich_symmetric(q: int, n_max: int,
                         config: EnumerationConfig | None = None
                         ) -> RichCountTable:
    """Count rich words using the letter-permutation symmetry.

    Only canonical representatives are walked; the count for length n is
    recovered as sum over k of N_k(n) * q! / (q-k)!.  The walk is serial;
    it visits a small fraction of what count_rich visits.
    """
    _validate_args(q, n_max)
    config = config or EnumerationConfig()
    if config.node_budget < 1:
        raise InputError("node budget must be positive")

    counts_nk = [[0] * (q + 1) for _ in range(n_max + 1)]
    maxluf = [0] * (n_max + 1) if config.with_max_luf else None
    tree = Eertree(q)
    lps = [0]
    budget_state = [0, config.node_budget]
    _walk_canonical(tree, lps, 0, 0, q, n_max, counts_nk, maxluf,
                    budget_state)

    entries = {}
    for n in range(1, n_max + 1):
        total = sum(counts_nk[n][k] * math.perm(q, k) for k in range(1, q + 1))
        entries[n] = RichEntry(
            total, maxluf[n] if maxluf is not None else None)
    return RichCountTable(q, entries, _provenance(config, symmetric=True))


# -- cache I/O ------------------------------------------------------------
#
# Line-delimited JSON.  First line is a header object
#   {"schema_version": 1, "tool_version": ..., "q": ..., "provenance": ...}
# and every following line is one record
#   {"schema_version": 1, "q": ..., "n": ..., "count": "<decimal>", "max_luf": ...}
# Counts travel as decimal strings so arbitrarily large values survive any
# JSON reader bit-exactly.


def save_cache(table: RichCountTable, path: str | os.PathLike) -> None:
    lines = [json.dumps({
        "schema_version": CACHE_SCHEMA_VERSION,
        "tool_version": TOOL_VERSION,
        "q": table.q,
        "provenance": table.provenance,
    }, sort_keys=True)]
    for n in sorted(table.entries):
        entry = table.entries[n]
        lines.append(json.dumps({
            "schema_version": CACHE_SCHEMA_VERSION,
            "q": table.q,
            "n": n,
            "count": str(entry.count),
            "max_luf": entry.max_luf,
        }, sort_keys=True))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def _cache_line(raw: str, lineno: int) -> dict:
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"line {lineno}: not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise CacheFormatError(f"line {lineno}: expected an object")
    return obj


def load_cache(path: str | os.PathLike,
               expected_q: int | None = None) -> RichCountTable:
    try:
        with open(path, "r", encoding="ascii") as fh:
            raw_lines = fh.read().splitlines()
    except OSError as exc:
        raise CacheFormatError(f"cannot read cache {path}: {exc}") from exc
    raw_lines = [ln for ln in raw_lines if ln.strip()]
    if not raw_lines:
        raise CacheFormatError("cache file is empty")

    header = _cache_line(raw_lines[0], 1)
    for key in ("schema_version", "tool_version", "q"):
        if key not in header:
            raise CacheFormatError(f"header is missing {key!r}")
    if header["schema_version"] != CACHE_SCHEMA_VERSION:
        raise CacheVersionError(
            f"cache schema {header['schema_version']!r} is not supported "
            f"(expected {CACHE_SCHEMA_VERSION})")
    q = header["q"]
    if not isinstance(q, int) or q < 2:
        raise CacheFormatError(f"header q={q!r} is not a valid alphabet size")
    if expected_q is not None and q != expected_q:
        raise CacheQMismatchError(
            f"cache holds q={q}, but q={expected_q} was requested")

    entries: dict[int, RichEntry] = {}
    for lineno, raw in enumerate(raw_lines[1:], start=2):
        rec = _cache_line(raw, lineno)
        for key in ("schema_version", "q", "n", "count", "max_luf"):
            if key not in rec:
                raise CacheFormatError(f"line {lineno}: missing {key!r}")
        if rec["schema_version"] != CACHE_SCHEMA_VERSION:
            raise CacheVersionError(
                f"line {lineno}: record schema {rec['schema_version']!r}")
        if rec["q"] != q:
            raise CacheFormatError(
                f"line {lineno}: record q={rec['q']!r} disagrees with header")
        n = rec["n"]
        if not isinstance(n, int) or n < 1 or n in entries:
            raise CacheFormatError(f"line {lineno}: bad or duplicate n={n!r}")
        count_text = rec["count"]
        if not isinstance(count_text, str) or not count_text.isdigit():
            raise CacheFormatError(
                f"line {lineno}: count must be a decimal string")
        max_luf = rec["max_luf"]
        if max_luf is not None and (not isinstance(max_luf, int) or max_luf < 0):
            raise CacheFormatError(f"line {lineno}: bad max_luf={max_luf!r}")
        entries[n] = RichEntry(int(count_text), max_luf)

    provenance = header.get("provenance", {})
    if not isinstance(provenance, dict):
        raise CacheFormatError("header provenance must be an object")
    return RichCountTable(q, entries, provenance)
