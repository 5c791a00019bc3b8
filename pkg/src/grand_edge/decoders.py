"""GRAND and ORBGRAND, with and without erasure decoding by Gaussian elimination.

Every decoder reports ``queries``, the number of codebook membership checks
it made.  The EDGE variants replace the plain syndrome check by
:func:`edge_check`: the non-erased part is guessed, the erased bits are then
solved for from the stored elimination matrix.

For speed the search loops do not call :func:`edge_check` pattern by
pattern.  Syndromes of all candidates at one weight level are formed at once
by XOR-ing packed columns, in exactly the order of the reference pattern
streams, and the first hit wins.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import gf2
from .channel import ReceivedFrame
from .codebook import LinearCode, is_codeword, recover_message
from .patterns import HardSchedule, OrbSchedule, budget, hard_levels, orb_table


class Status(str, enum.Enum):
    SUCCESS = "success"
    ABANDONED = "abandoned"
    ERASURE_OVERFLOW = "erasure_overflow"
    RANK_DEFICIENT = "rank_deficient"


@dataclass(frozen=True)
class DecodeResult:
    status: Status
    codeword: np.ndarray | None
    message: np.ndarray | None
    queries: int

    @property
    def success(self) -> bool:
        return self.status is Status.SUCCESS


class EdgeFailure(Exception):
    status: Status


class ErasureOverflow(EdgeFailure):
    """More erasures than parity checks: no unique solution."""

    status = Status.ERASURE_OVERFLOW


class RankDeficient(EdgeFailure):
    """The erased columns of H are linearly dependent."""

    status = Status.RANK_DEFICIENT


@dataclass(frozen=True, eq=False)
class EdgeContext:
    """Per-frame state of the erasure solver.

    ``H_c`` holds the columns of H at non-erased positions (ascending) and
    ``E`` the row operations that bring the erased columns ``H_e`` to RREF.
    """

    n: int
    r_c: np.ndarray
    r_e: np.ndarray
    H_c: np.ndarray
    E: np.ndarray
    q: np.ndarray
    keep: np.ndarray
    full_rank: bool

    @property
    def e(self) -> int:
        return len(self.q)


def edge_init(r, H, q, *, allow_rank_deficient: bool = False) -> EdgeContext:
    """Split ``r`` and ``H`` on the erased positions ``q`` and eliminate ``H_e``.

    Raises :class:`ErasureOverflow` if there are more erasures than rows of
    H, and :class:`RankDeficient` if ``H_e`` does not have full column rank
    (unless ``allow_rank_deficient`` is set, in which case the context is
    returned with ``full_rank=False``).
    """
    r = gf2.as_bits(r)
    H = gf2.as_bits(H)
    n = H.shape[1]
    if r.shape != (n,):
        raise ValueError(f"received word must have length {n}")
    q = np.asarray(q, dtype=np.intp)
    if q.size and (np.any(np.diff(q) <= 0) or q[0] < 0 or q[-1] >= n):
        raise ValueError("erasure set must be strictly increasing indices in [0, n)")
    m, e = H.shape[0], len(q)
    if e > m:
        raise ErasureOverflow(f"{e} erasures exceed {m} parity checks")

    keep = np.ones(n, dtype=bool)
    keep[q] = False
    H_c = H[:, keep]
    if e == 0:
        E = np.eye(m, dtype=np.uint8)
        full_rank = True
    else:
        red = gf2.rref_with_elimination(H[:, q])
        E = red.elimination
        full_rank = red.rank == e
        if not full_rank and not allow_rank_deficient:
            raise RankDeficient(f"rank {red.rank} < {e} erasures")
    return EdgeContext(
        n=n,
        r_c=r[keep].copy(),
        r_e=np.zeros(e, dtype=np.uint8),
        H_c=H_c,
        E=E,
        q=q,
        keep=keep,
        full_rank=full_rank,
    )


def edge_check(ctx: EdgeContext, r_c_trial) -> tuple[bool, np.ndarray | None]:
    """Solve for the erased bits given a guess of the non-erased ones.

    Returns ``(True, word)`` with the full length-n word when the trailing
    ``n - k - e`` entries of the reduced erasure syndrome vanish, else
    ``(False, None)``.
    """
    r_c_trial = gf2.as_bits(r_c_trial)
    if r_c_trial.shape != ctx.r_c.shape:
        raise ValueError(f"expected {len(ctx.r_c)} non-erased bits")
    s = gf2.apply_elimination(ctx.E, gf2.matvec(ctx.H_c, r_c_trial))
    if s[ctx.e :].any():
        return False, None
    word = np.empty(ctx.n, dtype=np.uint8)
    word[ctx.keep] = r_c_trial
    word[ctx.q] = s[: ctx.e]
    return True, word


# --- bulk search ---------------------------------------------------------


def _hits(syn: np.ndarray, mask: np.uint64) -> np.ndarray:
    return np.flatnonzero((syn & mask) == 0)


def _search_hard(base, cols, mask, length, max_weight):
    """Walk the Hamming-weight stream; return (flips or None, queries)."""
    queries = 0
    for w, combos in enumerate(hard_levels(length, max_weight)):
        if w == 0:
            syn = np.array([base], dtype=np.uint64)
        else:
            syn = base ^ np.bitwise_xor.reduce(cols[combos], axis=1)
        hits = _hits(syn, mask)
        if hits.size:
            i = int(hits[0])
            return tuple(int(p) for p in combos[i]), queries + i + 1
        queries += len(combos)
    return None, queries


def _search_orb(base, cols_by_rank, mask, length, lw_max):
    """Walk the logistic-weight stream; return (rank set or None, queries)."""
    table = orb_table(length, lw_max)
    if (base & mask) == 0:
        return (), 1
    syn = np.empty(len(table), dtype=np.uint64)
    syn[0] = base
    offs, parent, part = table.offsets, table.parent, table.part
    for m in range(1, lw_max + 1):
        a, b = offs[m], offs[m + 1]
        if a == b:
            continue
        level = syn[parent[a:b]] ^ cols_by_rank[part[a:b] - 1]
        syn[a:b] = level
        hits = _hits(level, mask)
        if hits.size:
            node = int(a + hits[0])
            return table.ranks(node), node + 1
    return None, len(table)


def _full_mask(m: int) -> np.uint64:
    return np.uint64((1 << m) - 1)


def _finish(code: LinearCode, word: np.ndarray, queries: int) -> DecodeResult:
    return DecodeResult(Status.SUCCESS, word, recover_message(code, word), queries)


# --- decoders --------------------------------------------------------------


def grand_decode(hard, code: LinearCode, max_weight: int = 3) -> DecodeResult:
    """Hard-decision GRAND with a Hamming-weight abandonment threshold."""
    hard = gf2.as_bits(hard)
    if hard.shape != (code.n,):
        raise ValueError(f"expected {code.n} hard decisions")
    cols = code.parity_columns
    base = gf2.pack_vector(gf2.matvec(code.parity_check, hard))
    max_weight = min(max_weight, code.n)
    flips, queries = _search_hard(base, cols, _full_mask(code.redundancy), code.n, max_weight)
    if flips is None:
        return DecodeResult(Status.ABANDONED, None, None, queries)
    word = hard.copy()
    word[list(flips)] ^= 1
    return _finish(code, word, queries)


def orbgrand_decode(frame: ReceivedFrame, code: LinearCode, lw_max: int = 104) -> DecodeResult:
    """ORBGRAND over all n positions, ignoring any erasure flags."""
    sched = OrbSchedule.from_llr(frame.llr, lw_max)
    perm = sched.rank_to_index
    base = gf2.pack_vector(gf2.matvec(code.parity_check, frame.hard))
    cols = code.parity_columns[perm]
    ranks, queries = _search_orb(base, cols, _full_mask(code.redundancy), code.n, lw_max)
    if ranks is None:
        return DecodeResult(Status.ABANDONED, None, None, queries)
    word = frame.hard.copy()
    word[perm[np.asarray(ranks, dtype=np.intp) - 1]] ^= 1
    return _finish(code, word, queries)


def _edge_setup(frame: ReceivedFrame, code: LinearCode):
    ctx = edge_init(frame.hard, code.parity_check, frame.q)
    reduced = gf2.matmul(ctx.E, ctx.H_c)
    cols = gf2.pack_columns(reduced)
    base = gf2.pack_vector(gf2.matvec(reduced, ctx.r_c))
    m = code.redundancy
    mask = np.uint64(((1 << m) - 1) ^ ((1 << ctx.e) - 1))
    return ctx, cols, base, mask


def _edge_finish(code, ctx, positions, queries):
    trial = ctx.r_c.copy()
    trial[list(positions)] ^= 1
    ok, word = edge_check(ctx, trial)
    assert ok, "bulk search and edge_check disagree"
    return _finish(code, word, queries)


def grand_edge_decode(frame: ReceivedFrame, code: LinearCode, max_weight: int = 3) -> DecodeResult:
    """GRAND guessing on non-erased bits, erased bits restored by elimination.

    With no erasures this is step for step the same as :func:`grand_decode`.
    """
    try:
        ctx, cols, base, mask = _edge_setup(frame, code)
    except (ErasureOverflow, RankDeficient) as exc:
        return DecodeResult(exc.status, None, None, 0)
    length = len(ctx.r_c)
    flips, queries = _search_hard(base, cols, mask, length, min(max_weight, length))
    if flips is None:
        return DecodeResult(Status.ABANDONED, None, None, queries)
    return _edge_finish(code, ctx, flips, queries)


def orbgrand_edge_decode(frame: ReceivedFrame, code: LinearCode, lw_max: int = 104) -> DecodeResult:
    """ORBGRAND-EDGE: reliability ranks are taken over the non-erased positions only."""
    try:
        ctx, cols, base, mask = _edge_setup(frame, code)
    except (ErasureOverflow, RankDeficient) as exc:
        return DecodeResult(exc.status, None, None, 0)
    sched = OrbSchedule.from_llr(frame.llr[ctx.keep], lw_max)
    perm = sched.rank_to_index
    ranks, queries = _search_orb(base, cols[perm], mask, len(ctx.r_c), lw_max)
    if ranks is None:
        return DecodeResult(Status.ABANDONED, None, None, queries)
    return _edge_finish(code, ctx, perm[np.asarray(ranks, dtype=np.intp) - 1], queries)


def hard_budget(length: int, max_weight: int) -> int:
    return budget(HardSchedule(length, min(max_weight, length)))


def check_result(code: LinearCode, result: DecodeResult) -> bool:
    """True when a success result is a codeword carrying its own message."""
    if not result.success:
        return result.codeword is None
    return is_codeword(code, result.codeword) and np.array_equal(
        result.message, recover_message(code, result.codeword)
    )
