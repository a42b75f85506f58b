"""Fully quantum hash: a message-driven quantum walk on a cycle followed by
ancilla-controlled random unitaries, simulated exactly on a statevector."""
from .dqc1_hash import (
    HashParams,
    HashValue,
    apply_dqc1_layer,
    extract_hash,
    generate_params,
    hadamard_test,
    hash_message,
)
from .random_unitary import Ensemble, sample_coe, sample_cue
from .walk import CoinAngles, coin_operator, pad_message, run_walk

__version__ = "0.1.0"

__all__ = [
    "CoinAngles",
    "Ensemble",
    "HashParams",
    "HashValue",
    "apply_dqc1_layer",
    "coin_operator",
    "extract_hash",
    "generate_params",
    "hadamard_test",
    "hash_message",
    "pad_message",
    "run_walk",
    "sample_coe",
    "sample_cue",
]
