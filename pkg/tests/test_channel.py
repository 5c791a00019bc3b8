import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy.stats import norm

from grand_edge.channel import (
    ChannelParams,
    demodulate,
    detect_erasures,
    modulate_bpsk,
    receive,
    transmit,
)


def test_modulate():
    assert modulate_bpsk([0, 1, 0]).tolist() == [1.0, -1.0, 1.0]
    assert modulate_bpsk(np.zeros(5, dtype=np.uint8)).tolist() == [1.0] * 5


@given(arrays(np.uint8, st.integers(1, 64), elements=st.integers(0, 1)))
def test_noiseless_round_trip(c):
    hard, _ = demodulate(modulate_bpsk(c), 1.0)
    assert np.array_equal(hard, c)


def test_sigma_conventions():
    p = ChannelParams(snr_db=10.0)
    assert p.sigma == pytest.approx(math.sqrt(0.1))
    assert p.jammer_sigma**2 == pytest.approx(1e10)


def test_noiseless_limit_is_exact(rng):
    x = modulate_bpsk(rng.integers(0, 2, 100))
    y = transmit(x, ChannelParams(snr_db=math.inf, epsilon=0.0), rng)
    assert np.array_equal(y, x)


def test_full_jamming_is_always_flagged(rng):
    p = ChannelParams(snr_db=8.0, epsilon=1.0)
    y = transmit(np.ones(10_000), p, rng)
    assert np.median(np.abs(y)) > 1e4
    flagged = len(detect_erasures(y, p.sigma, p.sigma_multiplier)) / 10_000
    assert flagged > 0.999


def test_jam_rate_matches_epsilon(rng):
    eps, n = 0.05, 1_000_000
    p = ChannelParams(snr_db=8.0, epsilon=eps)
    y = transmit(np.ones(n), p, rng)
    # a jam adds ~1e5-scale noise; nothing else moves a sample that far
    jammed = np.mean(np.abs(y - 1.0) > 50.0)
    # correct for jams that land within 50 of the signal: P(|N(0, 1e10)| < 50)
    hit = 1 - 2 * norm.cdf(-50.0 / p.jammer_sigma)
    expect = eps * (1 - hit)
    assert abs(jammed - expect) < 3 * math.sqrt(expect * (1 - expect) / n)


def unjammed_flag_prob(s):
    # flagged iff |noise| > 3s and the sample misses the ball around the other point
    ball_hi = min(-2 + 3 * s, -3 * s)
    inside_other = max(norm.cdf(ball_hi / s) - norm.cdf((-2 - 3 * s) / s), 0.0)
    return 2 * norm.sf(3.0) - inside_other


@pytest.mark.parametrize("snr_db", [8.0, 14.0])
def test_unjammed_flag_rate_is_gaussian_tail(rng, snr_db):
    n = 1_000_000
    p = ChannelParams(snr_db=snr_db)
    y = transmit(modulate_bpsk(rng.integers(0, 2, n)), p, rng)
    rate = len(detect_erasures(y, p.sigma, 3.0)) / n
    expect = unjammed_flag_prob(p.sigma)
    if snr_db >= 14.0:
        # balls far apart: the plain two-sided 3-sigma tail
        assert abs(expect - 0.0027) < 1e-4
    assert abs(rate - expect) < 3 * math.sqrt(expect * (1 - expect) / n)


def test_transmit_reproducible():
    p = ChannelParams(snr_db=5.0, epsilon=0.3)
    a = transmit(np.ones(64), p, np.random.default_rng(1))
    b = transmit(np.ones(64), p, np.random.default_rng(1))
    assert np.array_equal(a, b)


def test_detect_examples():
    assert detect_erasures([1.0], 0.5).size == 0
    assert detect_erasures([1.0 + 3 * 0.5], 0.5).size == 0  # boundary counts as clean
    assert detect_erasures([-1.0 - 3 * 0.5], 0.5).size == 0
    assert detect_erasures([317.2], 0.5).tolist() == [0]
    assert detect_erasures([0.0], 0.3).tolist() == [0]  # 1.0 from both points
    with pytest.raises(ValueError):
        detect_erasures([1.0], 0.0)


@given(arrays(np.float64, st.integers(0, 200), elements=st.floats(-1e6, 1e6)))
def test_detect_sorted_unique(y):
    q = detect_erasures(y, 0.4)
    assert np.all(np.diff(q) > 0)
    assert np.all((q >= 0) & (q < len(y)))


def test_demodulate_examples():
    hard, llr = demodulate([0.8], 1.0)
    assert hard.tolist() == [0] and llr.tolist() == pytest.approx([1.6])
    hard, llr = demodulate([-2.0], math.sqrt(0.5))
    assert hard.tolist() == [1] and llr.tolist() == pytest.approx([-8.0])


def test_llr_sign_agrees_with_hard(rng):
    for _ in range(20):
        p = ChannelParams(snr_db=float(rng.uniform(0, 10)), epsilon=0.1)
        y = transmit(modulate_bpsk(rng.integers(0, 2, 256)), p, rng)
        hard, llr = demodulate(y, p.sigma)
        assert np.array_equal(hard == 1, llr < 0)


def test_receive_arms_detector_only_with_jammer(rng):
    y = transmit(np.ones(5000), ChannelParams(snr_db=3.0), rng)
    assert receive(y, ChannelParams(snr_db=3.0)).q.size == 0
    assert receive(y, ChannelParams(snr_db=3.0, epsilon=0.01)).q.size > 0


def test_invalid_params():
    with pytest.raises(ValueError):
        ChannelParams(snr_db=1.0, epsilon=1.5)
    with pytest.raises(ValueError):
        ChannelParams(snr_db=1.0, sigma_multiplier=0.0)


@pytest.mark.parametrize("snr_db,eps", [(8.0, 0.0), (14.0, 0.0), (8.0, 0.5), (3.0, 0.1), (-2.0, 0.2)])
def test_flag_probability_against_monte_carlo(rng, snr_db, eps):
    from grand_edge.channel import flag_probability

    n = 400_000
    p = ChannelParams(snr_db=snr_db, epsilon=eps)
    y = transmit(modulate_bpsk(rng.integers(0, 2, n)), p, rng)
    rate = len(detect_erasures(y, p.sigma, 3.0)) / n
    expect = flag_probability(p)
    if eps == 0.0:
        assert expect == pytest.approx(unjammed_flag_prob(p.sigma), abs=1e-12)
    assert abs(rate - expect) < 4 * math.sqrt(expect * (1 - expect) / n) + 1e-12
