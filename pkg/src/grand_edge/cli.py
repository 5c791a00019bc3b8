"""Command-line front end: ``grand-edge-sim`` / ``python -m grand_edge``."""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from .sim import DECODERS, SweepConfig, run_sweep, write_csv


def parse_values(text: str) -> tuple[float, ...]:
    """Parse ``"8,9,10"`` or ``"6:10:0.5"`` (inclusive stop), or a mix of both."""
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if ":" in item:
            parts = [float(p) for p in item.split(":")]
            if len(parts) == 2:
                parts.append(1.0)
            start, stop, step = parts
            if step <= 0:
                raise argparse.ArgumentTypeError(f"range step must be positive: {item!r}")
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            values.extend(round(start + i * step, 10) for i in range(count))
        else:
            values.append(float(item))
    if not values:
        raise argparse.ArgumentTypeError(f"no values in {text!r}")
    return tuple(values)


def parse_decoders(text: str) -> tuple[str, ...]:
    names = tuple(d.strip() for d in text.split(",") if d.strip())
    bad = [d for d in names if d not in DECODERS]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"decoders must be among {','.join(DECODERS)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="grand-edge-sim",
        description="BLER and average-query sweeps for GRAND / ORBGRAND with and "
        "without erasure decoding, over BPSK-AWGN with a Bernoulli jammer.",
        epilog="SNR is Es/sigma^2 in dB with unit BPSK symbol energy "
        "(noise variance 10^(-snr/10)); it is not Eb/N0. "
        "Lists accept '8,9,10' or 'start:stop:step' with an inclusive stop.",
    )
    p.add_argument("--n", type=int, default=128, help="code length")
    p.add_argument("--k", type=int, default=105, help="message length")
    p.add_argument("--code-seed", type=int, default=0, help="seed of the random linear code")
    p.add_argument("--seed", type=int, default=0, help="master seed for messages and channel")
    p.add_argument("--decoders", type=parse_decoders, default=("grand", "grand-edge"),
                   help=f"comma-separated subset of {','.join(DECODERS)}")
    p.add_argument("--snr", type=parse_values, default=(8.0,), help="channel SNR values in dB")
    p.add_argument("--epsilon", type=parse_values, default=(0.02,),
                   help="per-bit jamming probabilities")
    p.add_argument("--trials", type=int, default=1000, help="trials per point (upper bound)")
    p.add_argument("--min-block-errors", type=int, default=100,
                   help="stop a point after this many block errors; 0 disables")
    p.add_argument("--max-weight", type=int, default=3, help="GRAND Hamming-weight threshold")
    p.add_argument("--lw-max", type=int, default=104, help="ORBGRAND logistic-weight threshold")
    p.add_argument("--osd-order", type=int, default=2)
    p.add_argument("--jammer-snr", type=float, default=-100.0, help="signal-to-jammer ratio in dB")
    p.add_argument("--sigma-mult", type=float, default=3.0,
                   help="erasure threshold in channel-noise standard deviations")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.add_argument("--no-timing", action="store_true",
                   help="write wall_time as 0 so reruns give byte-identical CSV")
    p.add_argument("--series-dir", default=None,
                   help="also write two-column .dat files per curve into this directory")
    p.add_argument("--series-x", choices=("snr", "epsilon"), default="snr",
                   help="x axis of the .dat series")
    p.add_argument("--out", default=None, help="CSV output path (default: stdout)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def config_from_args(args) -> SweepConfig:
    return SweepConfig(
        n=args.n,
        k=args.k,
        code_seed=args.code_seed,
        decoders=args.decoders,
        snr_db=args.snr,
        epsilon=args.epsilon,
        trials=args.trials,
        master_seed=args.seed,
        max_weight=args.max_weight,
        lw_max=args.lw_max,
        osd_order=args.osd_order,
        jammer_snr_db=args.jammer_snr,
        sigma_multiplier=args.sigma_mult,
        min_block_errors=args.min_block_errors or None,
        out=args.out,
        workers=args.workers,
        timing=not args.no_timing,
        series_dir=args.series_dir,
        series_x=args.series_x,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(message)s")
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        records = run_sweep(cfg)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 1
    if cfg.out is None:
        write_csv(records, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
