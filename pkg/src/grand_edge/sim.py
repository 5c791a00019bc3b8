"""Monte-Carlo BLER / query-count sweeps over SNR, jamming probability and decoder."""

from __future__ import annotations

import csv
import json
import logging
import struct
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from pathlib import Path

import numpy as np

from .baselines import osd_decode
from .channel import ChannelParams, modulate_bpsk, receive, transmit
from .codebook import LinearCode, cached_rlc, encode
from .decoders import (
    Status,
    grand_decode,
    grand_edge_decode,
    orbgrand_decode,
    orbgrand_edge_decode,
)

log = logging.getLogger(__name__)

DECODERS = ("grand", "orbgrand", "grand-edge", "orbgrand-edge", "osd")
CHUNK = 64


@dataclass(frozen=True)
class SweepConfig:
    n: int = 128
    k: int = 105
    code_seed: int = 0
    decoders: tuple[str, ...] = ("grand", "grand-edge")
    snr_db: tuple[float, ...] = (8.0,)
    epsilon: tuple[float, ...] = (0.02,)
    trials: int = 1000
    master_seed: int = 0
    max_weight: int = 3
    lw_max: int = 104
    osd_order: int = 2
    jammer_snr_db: float = -100.0
    sigma_multiplier: float = 3.0
    min_block_errors: int | None = 100
    out: str | None = None
    workers: int = 1
    timing: bool = True
    series_dir: str | None = None
    series_x: str = "snr"

    def __post_init__(self):
        if self.trials <= 0:
            raise ValueError("trials must be positive")
        for name in ("decoders", "snr_db", "epsilon"):
            if not getattr(self, name):
                raise ValueError(f"{name} must not be empty")
        unknown = set(self.decoders) - set(DECODERS)
        if unknown:
            raise ValueError(f"unknown decoders: {sorted(unknown)}")
        if self.series_x not in ("snr", "epsilon"):
            raise ValueError("series_x must be 'snr' or 'epsilon'")

    def channel(self, snr_db: float, epsilon: float) -> ChannelParams:
        return ChannelParams(snr_db, epsilon, self.jammer_snr_db, self.sigma_multiplier)

    @property
    def code(self) -> LinearCode:
        return cached_rlc(self.n, self.k, self.code_seed)


@dataclass
class SweepRecord:
    decoder: str
    snr_db: float
    epsilon: float
    trials: int
    block_errors: int
    bler: float
    avg_queries: float
    avg_erasures: float
    overflow_count: int
    abandon_count: int
    rank_deficient_count: int
    wall_time: float


FIELDNAMES = [f.name for f in fields(SweepRecord)]


def _float_key(x: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", float(x)))[0]


def trial_rng(master_seed: int, snr_db: float, epsilon: float, trial: int) -> np.random.Generator:
    """Generator for one trial, keyed on the channel point and trial index.

    The decoder is deliberately not part of the key: every decoder at a
    given point sees the same frames, which is what makes row-for-row
    comparisons meaningful.
    """
    key = (_float_key(snr_db), _float_key(epsilon), trial)
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=key))


def decode_frame(decoder: str, frame, code: LinearCode, cfg: SweepConfig):
    if decoder == "grand":
        return grand_decode(frame.hard, code, cfg.max_weight)
    if decoder == "grand-edge":
        return grand_edge_decode(frame, code, cfg.max_weight)
    if decoder == "orbgrand":
        return orbgrand_decode(frame, code, cfg.lw_max)
    if decoder == "orbgrand-edge":
        return orbgrand_edge_decode(frame, code, cfg.lw_max)
    if decoder == "osd":
        return osd_decode(frame, code, cfg.osd_order)
    raise ValueError(f"unknown decoder {decoder!r}")


def run_trial(cfg: SweepConfig, decoder: str, snr_db: float, epsilon: float, trial: int):
    """One frame end to end; returns (block_error, status, queries, erasures)."""
    code = cfg.code
    params = cfg.channel(snr_db, epsilon)
    rng = trial_rng(cfg.master_seed, snr_db, epsilon, trial)
    u = rng.integers(0, 2, size=code.k, dtype=np.uint8)
    y = transmit(modulate_bpsk(encode(code, u)), params, rng)
    frame = receive(y, params)
    res = decode_frame(decoder, frame, code, cfg)
    error = res.status is not Status.SUCCESS or not np.array_equal(res.message, u)
    return error, res.status, res.queries, len(frame.q)


def _run_chunk(args):
    cfg, decoder, snr_db, epsilon, start, stop = args
    return [run_trial(cfg, decoder, snr_db, epsilon, t) for t in range(start, stop)]


def _trial_stream(cfg, decoder, snr_db, epsilon, pool):
    chunks = [
        (cfg, decoder, snr_db, epsilon, s, min(s + CHUNK, cfg.trials))
        for s in range(0, cfg.trials, CHUNK)
    ]
    if pool is None:
        for c in chunks:
            yield from _run_chunk(c)
        return
    # waves of one chunk per worker keep early stopping cheap
    wave = max(cfg.workers, 1)
    for i in range(0, len(chunks), wave):
        for out in pool.map(_run_chunk, chunks[i : i + wave]):
            yield from out


def run_point(cfg: SweepConfig, decoder: str, snr_db: float, epsilon: float, pool=None) -> SweepRecord:
    """Simulate one (decoder, SNR, epsilon) point.

    Trials are consumed in index order, so the early stop at
    ``cfg.min_block_errors`` lands on the same trial whatever the worker
    count.
    """
    t0 = time.perf_counter()
    trials = errors = queries = erasures = 0
    counts = {s: 0 for s in Status}
    for error, status, q, e in _trial_stream(cfg, decoder, snr_db, epsilon, pool):
        trials += 1
        errors += error
        queries += q
        erasures += e
        counts[status] += 1
        if cfg.min_block_errors and errors >= cfg.min_block_errors:
            break
    wall = round(time.perf_counter() - t0, 6) if cfg.timing else 0.0
    return SweepRecord(
        decoder=decoder,
        snr_db=float(snr_db),
        epsilon=float(epsilon),
        trials=trials,
        block_errors=int(errors),
        bler=errors / trials,
        avg_queries=queries / trials,
        avg_erasures=erasures / trials,
        overflow_count=counts[Status.ERASURE_OVERFLOW],
        abandon_count=counts[Status.ABANDONED],
        rank_deficient_count=counts[Status.RANK_DEFICIENT],
        wall_time=wall,
    )


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """Run decoders x SNR x epsilon (decoder-major) and write the CSV if ``cfg.out`` is set."""
    if cfg.out is not None:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        # fail before spending minutes simulating
        with open(cfg.out, "w", newline=""):
            pass
    records = []
    pool = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        for dec in cfg.decoders:
            for snr in cfg.snr_db:
                for eps in cfg.epsilon:
                    rec = run_point(cfg, dec, snr, eps, pool)
                    log.info(
                        "%s snr=%g eps=%g trials=%d bler=%.3g avg_queries=%.4g",
                        dec, snr, eps, rec.trials, rec.bler, rec.avg_queries,
                    )
                    records.append(rec)
    finally:
        if pool is not None:
            pool.shutdown()
    if cfg.out is not None:
        write_csv(records, cfg.out)
        meta = Path(cfg.out).with_suffix(".meta.json")
        meta.write_text(json.dumps(asdict(cfg), indent=2) + "\n")
    if cfg.series_dir is not None:
        write_series(records, cfg.series_dir, cfg.series_x)
    return records


def write_csv(records, dest) -> None:
    """Write records to a path or an open text stream."""
    if hasattr(dest, "write"):
        _write_rows(records, dest)
        return
    with open(dest, "w", newline="") as f:
        _write_rows(records, f)


def _write_rows(records, f) -> None:
    w = csv.writer(f, lineterminator="\n")
    w.writerow(FIELDNAMES)
    for rec in records:
        w.writerow([getattr(rec, name) for name in FIELDNAMES])


def read_csv(path) -> list[SweepRecord]:
    types = {f.name: f.type for f in fields(SweepRecord)}
    conv = {"str": str, "float": float, "int": int}
    with open(path, newline="") as f:
        return [
            SweepRecord(**{k: conv[types[k]](v) for k, v in row.items()})
            for row in csv.DictReader(f)
        ]


def write_series(records, directory, x: str = "snr") -> list[Path]:
    """Two-column whitespace files, one per curve.

    With ``x="snr"`` a curve is a (decoder, epsilon) pair over SNR; with
    ``x="epsilon"`` a (decoder, SNR) pair over epsilon.
    """
    xattr, fixed, tag = ("snr_db", "epsilon", "eps") if x == "snr" else ("epsilon", "snr_db", "snr")
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    curves: dict[tuple[str, float], list[SweepRecord]] = {}
    for rec in records:
        curves.setdefault((rec.decoder, getattr(rec, fixed)), []).append(rec)
    written = []
    for (dec, value), recs in curves.items():
        for col in ("bler", "avg_queries"):
            p = out / f"{dec}_{tag}{value:g}_{col}.dat"
            lines = [f"# {xattr} {col}"]
            lines += [f"{getattr(r, xattr)!r} {getattr(r, col)!r}" for r in recs]
            p.write_text("\n".join(lines) + "\n")
            written.append(p)
    return written
