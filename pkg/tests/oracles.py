"""Slow, independent reference implementations used only by the tests."""

import itertools

import numpy as np


def naive_matvec(M, v):
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            acc ^= int(a) & int(b)
        out.append(acc)
    return np.array(out, dtype=np.uint8)


def naive_matmul(A, B):
    return np.array([naive_matvec(A, col) for col in np.asarray(B).T], dtype=np.uint8).T.reshape(
        len(A), np.asarray(B).shape[1]
    )


def logged_rref(M):
    """Textbook GF(2) Gauss-Jordan on lists, returning (rref, ops).

    ``ops`` is the list of ("swap", i, j) / ("add", src, dst) steps so a
    vector can be pushed through the same elimination.
    """
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    ops = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if A[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            A[r], A[pivot] = A[pivot], A[r]
            ops.append(("swap", r, pivot))
        for i in range(rows):
            if i != r and A[i][c]:
                A[i] = [x ^ y for x, y in zip(A[i], A[r])]
                ops.append(("add", r, i))
        r += 1
        if r == rows:
            break
    return np.array(A, dtype=np.uint8), ops


def replay(ops, s):
    s = [int(x) for x in s]
    for kind, a, b in ops:
        if kind == "swap":
            s[a], s[b] = s[b], s[a]
        else:
            s[b] ^= s[a]
    return np.array(s, dtype=np.uint8)


def brute_hard_stream(length, max_weight):
    subsets = [
        tuple(i for i in range(length) if mask >> i & 1)
        for mask in range(2**length)
        if bin(mask).count("1") <= max_weight
    ]
    return sorted(subsets, key=lambda s: (len(s), s))


def brute_orb_sets(length, lw_max):
    out = set()
    for w in range(length + 1):
        for combo in itertools.combinations(range(1, length + 1), w):
            if sum(combo) <= lw_max:
                out.add(combo)
    return out


def all_messages(k):
    return [np.array([(m >> i) & 1 for i in range(k)], dtype=np.uint8) for m in range(2**k)]


def hamming(a, b):
    return int(np.sum(np.asarray(a) != np.asarray(b)))


def frame_from_y(y, sigma, q=()):
    from grand_edge.channel import ReceivedFrame, demodulate

    y = np.asarray(y, dtype=np.float64)
    hard, llr = demodulate(y, sigma)
    return ReceivedFrame(y, hard, llr, np.asarray(q, dtype=np.intp), sigma)


def naive_edge_guess(frame, code, patterns_for):
    """Pattern-by-pattern reference loop around edge_check.

    ``patterns_for(r_c_llr)`` returns an iterable of flip tuples over the
    non-erased positions.  Returns (word or None, queries, status string).
    """
    from grand_edge.decoders import EdgeFailure, edge_check, edge_init

    try:
        ctx = edge_init(frame.hard, code.parity_check, frame.q)
    except EdgeFailure as exc:
        return None, 0, exc.status.value
    queries = 0
    for flips in patterns_for(frame.llr[ctx.keep]):
        queries += 1
        trial = ctx.r_c.copy()
        trial[list(flips)] ^= 1
        ok, word = edge_check(ctx, trial)
        if ok:
            return word, queries, "success"
    return None, queries, "abandoned"
