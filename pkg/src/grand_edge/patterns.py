"""Error-pattern schedules for hard GRAND and ORBGRAND.

Patterns are tuples of flip positions.  The generators here are the
reference streams; :func:`hard_levels` and :func:`orb_table` hold the same
streams as numpy tables that the decoders scan in bulk.

ORBGRAND tie order inside one logistic weight ``m``: partitions of ``m`` into
distinct parts are listed with the largest part first, descending, and the
remainder recursively in the same order.  For m = 6 that gives
{6}, {5,1}, {4,2}, {3,2,1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

import numpy as np

ErrorPattern = tuple[int, ...]


@dataclass(frozen=True)
class HardSchedule:
    length: int
    max_weight: int = 3

    def __post_init__(self):
        if not 0 <= self.max_weight <= self.length:
            raise ValueError(f"max_weight {self.max_weight} not in [0, {self.length}]")


@dataclass(frozen=True, eq=False)
class OrbSchedule:
    """ORBGRAND schedule.

    ``rank_to_index[r - 1]`` is the bit position holding reliability rank
    ``r`` (rank 1 is the least reliable bit).  Defaults to the identity.
    """

    length: int
    lw_max: int = 104
    rank_to_index: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.rank_to_index is None:
            object.__setattr__(self, "rank_to_index", np.arange(self.length))
        perm = np.asarray(self.rank_to_index)
        if perm.shape != (self.length,) or not np.array_equal(np.sort(perm), np.arange(self.length)):
            raise ValueError("rank_to_index must be a permutation of range(length)")
        object.__setattr__(self, "rank_to_index", perm)

    @classmethod
    def from_llr(cls, llr, lw_max: int = 104) -> "OrbSchedule":
        """Rank positions by |LLR| ascending; ties keep the lower index first."""
        order = np.argsort(np.abs(np.asarray(llr, dtype=np.float64)), kind="stable")
        return cls(len(order), lw_max, order)


def hard_patterns(schedule: HardSchedule):
    """Yield flip sets by nondecreasing Hamming weight, lexicographic within a weight."""
    for w in range(schedule.max_weight + 1):
        yield from itertools.combinations(range(schedule.length), w)


def logistic_weight(ranks) -> int:
    return int(sum(ranks))


def _distinct_parts(m: int, cap: int):
    if m == 0:
        yield ()
        return
    if m > cap * (cap + 1) // 2:
        return
    for p in range(min(m, cap), 0, -1):
        for rest in _distinct_parts(m - p, p - 1):
            yield (p,) + rest


def orb_rank_patterns(length: int, lw_max: int):
    """Yield rank sets (ascending tuples, 1-indexed) in logistic-weight order."""
    for m in range(lw_max + 1):
        for parts in _distinct_parts(m, length):
            yield parts[::-1]


def orb_patterns(schedule: OrbSchedule):
    """Yield position sets: each rank set mapped through ``rank_to_index``."""
    perm = schedule.rank_to_index
    for ranks in orb_rank_patterns(schedule.length, schedule.lw_max):
        yield tuple(sorted(int(perm[r - 1]) for r in ranks))


def orb_count(length: int, lw_max: int) -> int:
    """Number of sets of distinct parts in [1, length] with sum <= lw_max."""
    counts = [1] + [0] * lw_max
    for part in range(1, min(length, lw_max) + 1):
        for s in range(lw_max, part - 1, -1):
            counts[s] += counts[s - part]
    return sum(counts)


def budget(schedule) -> int:
    """Total length of a schedule's pattern stream (the query cap)."""
    if isinstance(schedule, HardSchedule):
        return sum(comb(schedule.length, w) for w in range(schedule.max_weight + 1))
    if isinstance(schedule, OrbSchedule):
        return orb_count(schedule.length, schedule.lw_max)
    raise TypeError(f"unknown schedule type {type(schedule).__name__}")


def _index_dtype(length: int):
    return np.uint8 if length <= 256 else np.int32


def lex_combinations(length: int, w: int) -> np.ndarray:
    """All w-subsets of range(length) as rows, in lexicographic order."""
    dt = _index_dtype(length)
    if w == 0:
        return np.zeros((1, 0), dtype=dt)
    if w > length:
        return np.zeros((0, w), dtype=dt)
    if w == 1:
        return np.arange(length, dtype=dt)[:, None]
    tails = lex_combinations(length, w - 1)
    firsts = tails[:, 0].astype(np.int64)
    blocks = []
    for a in range(length - w + 1):
        start = np.searchsorted(firsts, a, side="right")
        block = np.empty((len(tails) - start, w), dtype=dt)
        block[:, 0] = a
        block[:, 1:] = tails[start:]
        blocks.append(block)
    return np.concatenate(blocks)


@lru_cache(maxsize=64)
def hard_levels(length: int, max_weight: int) -> tuple[np.ndarray, ...]:
    """Per-weight tables of :func:`hard_patterns`; entry w has shape (C(length, w), w)."""
    levels = tuple(lex_combinations(length, w) for w in range(max_weight + 1))
    for lv in levels:
        lv.flags.writeable = False
    return levels


@dataclass(frozen=True, eq=False)
class OrbTable:
    """The ORBGRAND stream as a parent-pointer forest in stream order.

    Node ``i`` is the rank set of node ``parent[i]`` plus the rank
    ``part[i]``, which is larger than every rank in the parent.  Nodes with
    logistic weight ``m`` occupy ``offsets[m]:offsets[m + 1]``.  A parent
    always has smaller logistic weight than its child, so syndromes can be
    filled in one weight level at a time.
    """

    length: int
    lw_max: int
    parent: np.ndarray
    part: np.ndarray
    offsets: np.ndarray

    def __len__(self):
        return len(self.parent)

    def ranks(self, node: int) -> ErrorPattern:
        out = []
        while node > 0:
            out.append(int(self.part[node]))
            node = int(self.parent[node])
        return tuple(out[::-1])


def orb_table(length: int, lw_max: int) -> OrbTable:
    # parts never exceed lw_max, so longer lengths share one table
    return _orb_table(min(length, lw_max), lw_max)


@lru_cache(maxsize=8)
def _orb_table(cap: int, lw_max: int) -> OrbTable:
    part_dt = np.int16 if lw_max < 2**15 else np.int32
    level_parts = [np.zeros(1, dtype=part_dt)]
    parents = [np.array([-1], dtype=np.int64)]
    offsets = [0, 1]
    for m in range(1, lw_max + 1):
        par_blocks, part_blocks = [], []
        for p in range(min(m, cap), 0, -1):
            x = m - p
            src = level_parts[x]  # largest parts, non-increasing along the level
            start = int(np.searchsorted(-src, -(p - 1), side="left"))
            if start == len(src):
                continue
            par_blocks.append(offsets[x] + np.arange(start, len(src)))
            part_blocks.append(np.full(len(src) - start, p, dtype=part_dt))
        if par_blocks:
            parents.append(np.concatenate(par_blocks))
            level_parts.append(np.concatenate(part_blocks))
        else:
            parents.append(np.zeros(0, dtype=np.int64))
            level_parts.append(np.zeros(0, dtype=part_dt))
        offsets.append(offsets[-1] + len(parents[-1]))
    parent = np.concatenate(parents).astype(np.int32)
    part = np.concatenate(level_parts)
    offs = np.asarray(offsets, dtype=np.int64)
    for a in (parent, part, offs):
        a.flags.writeable = False
    return OrbTable(cap, lw_max, parent, part, offs)
