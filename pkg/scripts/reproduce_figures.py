#!/usr/bin/env python3
"""Desk-scale sweeps behind the GRAND-EDGE / ORBGRAND-EDGE / OSD comparison plots.

    python scripts/reproduce_figures.py snr-grand --trials 2000 --workers 8
    python scripts/reproduce_figures.py all --out-dir results/

Each preset writes ``<out-dir>/<preset>.csv`` (plus ``.meta.json`` and
two-column ``.dat`` series under ``<out-dir>/<preset>/``).  SNR and epsilon
grids are choices made here; change them with ``--snr`` / ``--epsilon``.
"""

import argparse
import logging
from pathlib import Path

from grand_edge.cli import parse_values
from grand_edge.sim import SweepConfig, run_sweep

EPS_GRID = (0.0, 0.01, 0.02, 0.05, 0.1, 0.15, 0.2)

PRESETS = {
    # BLER / queries against SNR for several jamming probabilities
    "snr-grand": dict(decoders=("grand", "grand-edge"), snr_db=(4, 5, 6, 7, 8, 9, 10),
                      epsilon=(0.02, 0.05, 0.1)),
    "snr-orbgrand": dict(decoders=("orbgrand", "orbgrand-edge"), snr_db=(4, 5, 6, 7, 8, 9, 10),
                         epsilon=(0.02, 0.05, 0.1)),
    # the same against epsilon at fixed SNR
    "eps-grand": dict(decoders=("grand", "grand-edge"), snr_db=(6, 8, 10), epsilon=EPS_GRID),
    "eps-orbgrand": dict(decoders=("orbgrand", "orbgrand-edge"), snr_db=(6, 8, 10),
                         epsilon=EPS_GRID),
    "osd": dict(decoders=("osd", "orbgrand-edge"), snr_db=(4, 6, 8, 10),
                epsilon=(0.02, 0.05, 0.1)),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("preset", choices=[*PRESETS, "all"])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--min-block-errors", type=int, default=100)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--code-seed", type=int, default=0)
    ap.add_argument("--osd-order", type=int, default=2)
    ap.add_argument("--snr", type=parse_values, default=None, help="override the preset SNR grid")
    ap.add_argument("--epsilon", type=parse_values, default=None, help="override the preset epsilon grid")
    ap.add_argument("--out-dir", default="results")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    out_dir = Path(args.out_dir)
    names = list(PRESETS) if args.preset == "all" else [args.preset]
    for name in names:
        grid = dict(PRESETS[name])
        if args.snr is not None:
            grid["snr_db"] = args.snr
        if args.epsilon is not None:
            grid["epsilon"] = args.epsilon
        cfg = SweepConfig(
            n=128,
            k=105,
            code_seed=args.code_seed,
            decoders=grid["decoders"],
            snr_db=tuple(float(s) for s in grid["snr_db"]),
            epsilon=tuple(float(e) for e in grid["epsilon"]),
            trials=args.trials,
            master_seed=args.seed,
            osd_order=args.osd_order,
            min_block_errors=args.min_block_errors or None,
            workers=args.workers,
            out=str(out_dir / f"{name}.csv"),
            series_dir=str(out_dir / name),
            series_x="epsilon" if name.startswith("eps-") else "snr",
        )
        run_sweep(cfg)
        print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
