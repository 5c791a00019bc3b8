"""Dense GF(2) linear algebra on numpy uint8 arrays.

Vectors are 1-D ``uint8`` arrays and matrices 2-D ``uint8`` arrays with
entries in {0, 1}.  The guessing loops in :mod:`grand_edge.decoders` work on
column syndromes packed into ``uint64`` words, see :func:`pack_columns`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

WORD_BITS = 64


def as_bits(x) -> np.ndarray:
    """Coerce ``x`` to a uint8 bit array, rejecting anything outside {0, 1}."""
    a = np.asarray(x)
    if a.dtype == np.bool_:
        return a.astype(np.uint8)
    a = a.astype(np.uint8)
    if a.size and a.max() > 1:
        raise ValueError("bit arrays may only hold 0 and 1")
    return a


def matvec(M, v) -> np.ndarray:
    """Return ``M @ v`` over GF(2)."""
    M = np.asarray(M, dtype=np.uint8)
    v = np.asarray(v, dtype=np.uint8)
    if M.ndim != 2 or v.ndim != 1 or M.shape[1] != v.shape[0]:
        raise ValueError(f"cannot multiply {M.shape} matrix by length-{v.shape} vector")
    # int32 accumulation: uint8 would wrap before the mod for > 255 columns
    return ((M.astype(np.int32) @ v.astype(np.int32)) & 1).astype(np.uint8)


def matmul(A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.uint8)
    B = np.asarray(B, dtype=np.uint8)
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    return ((A.astype(np.int32) @ B.astype(np.int32)) & 1).astype(np.uint8)


@dataclass(frozen=True)
class RrefResult:
    """Reduced row-echelon form together with the row operations that produced it.

    ``elimination @ M == rref`` over GF(2).
    """

    rref: np.ndarray
    elimination: np.ndarray
    rank: int
    pivot_cols: tuple[int, ...]


def rref_with_elimination(M) -> RrefResult:
    """Row-reduce ``M`` to RREF using only row swaps and row additions.

    Columns are scanned left to right and the pivot is the topmost row at or
    below the current pivot row holding a 1.  The same operations are applied
    to an identity matrix, which ends up as the elimination matrix.
    """
    M = as_bits(M)
    if M.ndim != 2:
        raise ValueError("expected a 2-D bit matrix")
    rows, cols = M.shape
    aug = np.zeros((rows, cols + rows), dtype=np.uint8)
    aug[:, :cols] = M
    aug[:, cols:] = np.eye(rows, dtype=np.uint8)

    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        below = np.flatnonzero(aug[r:, c])
        if below.size == 0:
            continue
        p = r + below[0]
        if p != r:
            aug[[r, p]] = aug[[p, r]]
        hits = np.flatnonzero(aug[:, c])
        hits = hits[hits != r]
        if hits.size:
            aug[hits] ^= aug[r]
        pivots.append(c)
        r += 1

    rref = aug[:, :cols].copy()
    elim = aug[:, cols:].copy()
    rref.flags.writeable = False
    elim.flags.writeable = False
    return RrefResult(rref, elim, len(pivots), tuple(pivots))


def apply_elimination(E, s) -> np.ndarray:
    """Replay stored row operations on a syndrome: ``E @ s`` over GF(2)."""
    return matvec(E, s)


def rank(M) -> int:
    M = as_bits(M)
    if M.size == 0:
        return 0
    return rref_with_elimination(M).rank


def pack_columns(M) -> np.ndarray:
    """Pack each column of ``M`` (at most 64 rows) into a uint64, row i -> bit i."""
    M = np.asarray(M, dtype=np.uint8)
    rows = M.shape[0]
    if rows > WORD_BITS:
        raise ValueError(f"cannot pack {rows} rows into a {WORD_BITS}-bit word")
    weights = np.left_shift(np.uint64(1), np.arange(rows, dtype=np.uint64))
    return np.bitwise_or.reduce(M.astype(np.uint64) * weights[:, None], axis=0)


def pack_vector(v) -> np.uint64:
    v = np.asarray(v, dtype=np.uint8)
    return pack_columns(v[:, None])[0]


def unpack_word(word, nbits: int) -> np.ndarray:
    """Inverse of :func:`pack_vector`."""
    shifts = np.arange(nbits, dtype=np.uint64)
    return ((np.uint64(word) >> shifts) & np.uint64(1)).astype(np.uint8)
