"""BPSK over AWGN with a Bernoulli bit-level jammer, plus 3-sigma erasure flagging.

SNR convention: ``snr_db = 10 log10(Es / sigma^2)`` with unit symbol energy,
so the channel noise variance is ``10 ** (-snr_db / 10)``.  The jammer SNR
uses the same convention; -100 dB gives a jammer variance of 1e10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ChannelParams:
    snr_db: float
    epsilon: float = 0.0
    jammer_snr_db: float = -100.0
    sigma_multiplier: float = 3.0

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")
        if self.sigma_multiplier <= 0:
            raise ValueError("sigma_multiplier must be positive")

    @property
    def sigma(self) -> float:
        return float(np.sqrt(10.0 ** (-self.snr_db / 10.0)))

    @property
    def jammer_sigma(self) -> float:
        return float(np.sqrt(10.0 ** (-self.jammer_snr_db / 10.0)))


@dataclass(frozen=True)
class ReceivedFrame:
    """Channel output as seen by the decoders.

    ``q`` holds the flagged (erased) positions in increasing order.  Hard
    decisions and LLRs are computed for every position, erased or not.
    """

    y: np.ndarray
    hard: np.ndarray
    llr: np.ndarray
    q: np.ndarray
    sigma: float

    @property
    def n(self) -> int:
        return len(self.y)


def modulate_bpsk(c) -> np.ndarray:
    """0 -> +1.0, 1 -> -1.0."""
    return 1.0 - 2.0 * np.asarray(c, dtype=np.float64)


def transmit(x, params: ChannelParams, rng: np.random.Generator) -> np.ndarray:
    """Add channel noise to every sample and jammer noise to each sample with probability epsilon.

    The three draws (noise, jam indicator, jam amplitude) always consume the
    same amount of randomness, so a seeded generator reproduces the output
    regardless of ``epsilon``.
    """
    x = np.asarray(x, dtype=np.float64)
    noise = rng.normal(0.0, params.sigma, size=x.shape)
    jammed = rng.random(size=x.shape) < params.epsilon
    jam = rng.normal(0.0, params.jammer_sigma, size=x.shape)
    return x + noise + np.where(jammed, jam, 0.0)


def detect_erasures(y, sigma: float, multiplier: float = 3.0) -> np.ndarray:
    """Indices whose distance to the nearest BPSK point exceeds ``multiplier * sigma``.

    A sample exactly on the boundary counts as non-jammed.
    """
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    y = np.asarray(y, dtype=np.float64)
    dist = np.minimum(np.abs(y - 1.0), np.abs(y + 1.0))
    return np.flatnonzero(dist > multiplier * sigma)


def demodulate(y, sigma: float) -> tuple[np.ndarray, np.ndarray]:
    """Hard decisions and LLRs (positive favours bit 0)."""
    y = np.asarray(y, dtype=np.float64)
    hard = (y < 0).astype(np.uint8)
    with np.errstate(divide="ignore", invalid="ignore"):
        llr = 2.0 * y / sigma**2
    if sigma == 0:
        llr = np.where(y == 0, 0.0, llr)
    return hard, llr


def _normal_cdf(x: float, std: float) -> float:
    return 0.5 * math.erfc(-x / (std * math.sqrt(2.0)))


def flag_probability(params: ChannelParams) -> float:
    """Per-bit probability that an armed detector flags a sample.

    With the symbol at +1 and total additive offset ``d``, the sample is
    clean iff ``d`` lies in ``[-t, t]`` or ``[-2 - t, -2 + t]`` where
    ``t = multiplier * sigma``.  The offset is N(0, sigma^2) unjammed and
    N(0, sigma^2 + sigma_j^2) jammed.
    """
    t = params.sigma_multiplier * params.sigma
    if t >= 1.0:
        intervals = [(-2.0 - t, t)]
    else:
        intervals = [(-2.0 - t, -2.0 + t), (-t, t)]

    def flagged(std):
        inside = sum(_normal_cdf(b, std) - _normal_cdf(a, std) for a, b in intervals)
        return 1.0 - inside

    clean_std = params.sigma
    jam_std = math.hypot(params.sigma, params.jammer_sigma)
    return params.epsilon * flagged(jam_std) + (1.0 - params.epsilon) * flagged(clean_std)


def receive(y, params: ChannelParams) -> ReceivedFrame:
    """Front end of the receiver: erasure flagging followed by demodulation.

    The detector is only armed when the jammer can be active
    (``epsilon > 0``); with no jammer every sample goes to the decoder.
    """
    y = np.asarray(y, dtype=np.float64)
    sigma = params.sigma
    if params.epsilon > 0 and sigma > 0:
        q = detect_erasures(y, sigma, params.sigma_multiplier)
    elif params.epsilon > 0:
        # noiseless channel: anything off the constellation was jammed
        q = np.flatnonzero(np.minimum(np.abs(y - 1.0), np.abs(y + 1.0)) > 0)
    else:
        q = np.zeros(0, dtype=np.intp)
    hard, llr = demodulate(y, sigma)
    return ReceivedFrame(y, hard, llr, q, sigma)
