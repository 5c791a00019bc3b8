"""Universal error-and-erasure decoding: GRAND / ORBGRAND with Gaussian-elimination erasure recovery."""

from .baselines import ml_oracle, osd_decode
from .channel import (
    ChannelParams,
    ReceivedFrame,
    demodulate,
    detect_erasures,
    modulate_bpsk,
    receive,
    transmit,
)
from .codebook import LinearCode, encode, generate_rlc, is_codeword, recover_message
from .decoders import (
    DecodeResult,
    EdgeContext,
    ErasureOverflow,
    RankDeficient,
    Status,
    edge_check,
    edge_init,
    grand_decode,
    grand_edge_decode,
    orbgrand_decode,
    orbgrand_edge_decode,
)
from .gf2 import RrefResult, apply_elimination, matvec, rref_with_elimination
from .patterns import (
    HardSchedule,
    OrbSchedule,
    budget,
    hard_patterns,
    logistic_weight,
    orb_patterns,
)
from .sim import SweepConfig, SweepRecord, run_point, run_sweep

__version__ = "0.1.0"
