"""Reference decoders: ordered statistics decoding and exhaustive ML."""

from __future__ import annotations

import numpy as np

from . import gf2
from .channel import ReceivedFrame, modulate_bpsk
from .codebook import LinearCode, recover_message
from .decoders import DecodeResult, Status
from .patterns import lex_combinations

ML_MAX_K = 20


def osd_decode(frame: ReceivedFrame, code: LinearCode, order: int = 2) -> DecodeResult:
    """Order-``order`` OSD scored by soft correlation ``sum y_i (1 - 2 c_i)``.

    The most reliable independent basis is found by row-reducing the
    column-permuted generator; RREF pivots land on the first k linearly
    independent columns in reliability order, and the reduced matrix is
    systematic on them.  Every flip set of weight <= order on the basis is
    re-encoded; ``queries`` counts re-encodings.
    """
    y = np.asarray(frame.y, dtype=np.float64)
    perm = np.argsort(-np.abs(frame.llr), kind="stable")
    red = gf2.rref_with_elimination(code.generator[:, perm])
    basis = np.asarray(red.pivot_cols, dtype=np.intp)
    R = red.rref.astype(bool)  # k x n, identity on the basis columns

    y_p = y[perm]
    u0 = frame.hard[perm][basis].astype(bool)
    c0 = np.bitwise_xor.reduce(R[u0], axis=0) if u0.any() else np.zeros(code.n, dtype=bool)
    signed = y_p * (1.0 - 2.0 * c0)  # correlation contribution of c0 per position
    total = signed.sum()

    best_score, best_flips, queries = -np.inf, (), 0
    for w in range(min(order, code.k) + 1):
        combos = lex_combinations(code.k, w)
        if w == 0:
            scores = np.array([total])
        else:
            delta = np.bitwise_xor.reduce(R[combos], axis=1)
            scores = total - 2.0 * (delta @ signed)
        queries += len(combos)
        i = int(np.argmax(scores))
        if scores[i] > best_score:
            best_score, best_flips = scores[i], tuple(int(j) for j in combos[i])

    c_perm = c0.copy()
    for j in best_flips:
        c_perm ^= R[j]
    word = np.empty(code.n, dtype=np.uint8)
    word[perm] = c_perm
    return DecodeResult(Status.SUCCESS, word, recover_message(code, word), queries)


def all_codewords(code: LinearCode) -> np.ndarray:
    if code.k > ML_MAX_K:
        raise ValueError(f"exhaustive enumeration refused for k={code.k} > {ML_MAX_K}")
    msgs = (np.arange(2**code.k)[:, None] >> np.arange(code.k)) & 1
    return ((msgs @ code.generator.astype(np.int64)) & 1).astype(np.uint8)


def ml_oracle(frame: ReceivedFrame, code: LinearCode, metric: str = "hamming") -> np.ndarray:
    """Closest codeword by exhaustive search.

    ``hamming`` measures distance to the hard decisions, ``euclidean`` the
    squared distance between ``y`` and the BPSK image.  Ties go to the
    lexicographically smallest codeword.
    """
    words = all_codewords(code)
    if metric == "hamming":
        dist = (words != frame.hard).sum(axis=1)
    elif metric == "euclidean":
        dist = ((frame.y - modulate_bpsk(words)) ** 2).sum(axis=1)
    else:
        raise ValueError(f"unknown metric {metric!r}")
    best = words[dist == dist.min()]
    # lexsort uses the last key as primary; reverse so position 0 dominates
    first = np.lexsort(best.T[::-1])[0]
    return best[first].copy()


def soft_score(y, word) -> float:
    """Squared Euclidean distance between ``y`` and the BPSK image of ``word``."""
    return float(((np.asarray(y) - modulate_bpsk(word)) ** 2).sum())
