"""Systematic random linear codes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .gf2 import as_bits, matvec, pack_columns, rank


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An (n, k) binary linear code with ``G = [I_k | P]`` and ``H = [P^T | I_{n-k}]``."""

    n: int
    k: int
    generator: np.ndarray
    parity_check: np.ndarray
    seed: int | None = None

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @cached_property
    def parity_columns(self) -> np.ndarray:
        """Columns of H packed into uint64 words (used by the guessing loops)."""
        return pack_columns(self.parity_check)

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k}, seed={self.seed})"


def generate_rlc(n: int, k: int, seed: int) -> LinearCode:
    """Draw a systematic random linear code.

    The redundancy block ``P`` is k x (n-k) fair coin flips from
    ``numpy.random.default_rng(seed)``, so the same ``(n, k, seed)`` always
    gives the same code.
    """
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    P = rng.integers(0, 2, size=(k, n - k), dtype=np.uint8)
    G = np.hstack([np.eye(k, dtype=np.uint8), P])
    H = np.hstack([P.T, np.eye(n - k, dtype=np.uint8)])
    # systematic form makes both ranks full; kept as a guard
    assert rank(G) == k and rank(H) == n - k
    for m in (G, H):
        m.flags.writeable = False
    return LinearCode(n, k, G, H, seed)


@lru_cache(maxsize=16)
def cached_rlc(n: int, k: int, seed: int) -> LinearCode:
    return generate_rlc(n, k, seed)


def encode(code: LinearCode, u) -> np.ndarray:
    u = as_bits(u)
    if u.shape != (code.k,):
        raise ValueError(f"message must have length {code.k}, got {u.shape}")
    return matvec(code.generator.T, u)


def recover_message(code: LinearCode, c) -> np.ndarray:
    """Inverse of :func:`encode` on codewords: the systematic prefix."""
    return np.asarray(c, dtype=np.uint8)[: code.k].copy()


def syndrome(code: LinearCode, r) -> np.ndarray:
    r = as_bits(r)
    if r.shape != (code.n,):
        raise ValueError(f"word must have length {code.n}, got {r.shape}")
    return matvec(code.parity_check, r)


def is_codeword(code: LinearCode, r) -> bool:
    return not syndrome(code, r).any()
