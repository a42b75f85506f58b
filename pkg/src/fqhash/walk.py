"""Message-controlled discrete-time quantum walk on a cycle.

Each pair of message bits, read left to right, selects one of four coin
operators.  A walk step applies the selected coin to the coin qubit and then
the conditional cyclic shift.  The walker starts at ``|x=0, coin=0>``.
"""
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import statevector as sv
from .errors import EmptyMessage, InputSyntax, UnpaddedMessage

PAIRS = ("00", "01", "10", "11")


@dataclass(frozen=True)
class CoinAngles:
    """Coin rotation angles in radians for the pairs 00, 01, 10, 11."""

    theta: tuple

    def __post_init__(self):
        theta = tuple(float(t) for t in self.theta)
        if len(theta) != 4:
            raise ValueError(f"need exactly 4 coin angles, got {len(theta)}")
        if not all(0.0 < t < np.pi / 2 for t in theta):
            raise ValueError("coin angles must lie strictly inside (0, pi/2)")
        if len(set(theta)) != 4:
            raise ValueError("coin angles must be pairwise distinct")
        object.__setattr__(self, "theta", theta)

    def __getitem__(self, pair):
        if isinstance(pair, str):
            pair = PAIRS.index(pair)
        return self.theta[pair]


def validate_bits(bits):
    bits = str(bits)
    if not bits:
        raise EmptyMessage("message must contain at least one bit")
    bad = set(bits) - {"0", "1"}
    if bad:
        raise InputSyntax(f"message contains non-binary symbols {sorted(bad)}")
    return bits


def bits_from_hex(text):
    """Expand a hex string to bits, four per digit, most significant first."""
    text = text.strip()
    if text[:2].lower() == "0x":
        text = text[2:]
    if not text:
        raise EmptyMessage("empty hex message")
    try:
        return "".join(format(int(ch, 16), "04b") for ch in text)
    except ValueError:
        raise InputSyntax(f"invalid hex message {text!r}") from None


def bits_from_bytes(data):
    """Expand bytes to bits, most significant bit of each byte first."""
    if not data:
        raise EmptyMessage("empty byte message")
    bits = np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
    return (bits + ord("0")).tobytes().decode("ascii")


def pad_message(m):
    """Append a single '0' to odd-length messages."""
    m = validate_bits(m)
    return m + "0" if len(m) % 2 else m


def coin_operator(angles, pair):
    """Real reflection coin ``[[cos t, sin t], [sin t, -cos t]]`` for ``pair``."""
    t = angles[pair]
    c, s = np.cos(t), np.sin(t)
    return np.array([[c, s], [s, -c]])


def pair_indices(m):
    """Coin index (0..3) for each consecutive bit pair of a padded message."""
    m = validate_bits(m)
    if len(m) % 2:
        raise UnpaddedMessage(f"message length {len(m)} is odd; call pad_message first")
    b = np.frombuffer(m.encode("ascii"), dtype=np.uint8) - ord("0")
    return 2 * b[0::2] + b[1::2]


@lru_cache(maxsize=256)
def step_operators(angles, n_pos):
    """Dense one-step propagators ``S_c (C_k x I)`` on position+coin, k = 0..3.

    The shift rows come from the same index permutation that
    :func:`statevector.apply_cyclic_shift` uses.  All entries are real.
    """
    dim = 1 << (n_pos + 1)
    dest = sv._shift_permutation(n_pos + 1, tuple(range(n_pos)), n_pos)
    eye = np.eye(dim >> 1)
    ops = np.empty((4, dim, dim))
    for k in range(4):
        ops[k, dest, :] = np.kron(coin_operator(angles, k), eye)
    ops.setflags(write=False)
    return ops


def walk_amplitudes(m, angles, n_pos):
    """Final position+coin amplitudes (length ``2**(n_pos+1)``, real)."""
    ops = step_operators(angles, n_pos)
    v = np.zeros(1 << (n_pos + 1))
    v[0] = 1.0
    for k in pair_indices(m).tolist():
        v = ops[k] @ v
    return v


def run_walk(m, angles, n_pos, q_anc=0):
    """Run the walk for a padded message and return the full statevector.

    The result lives on ``n_pos + 1 + q_anc`` qubits with the ancilla
    register left in ``|0...0>``.
    """
    v = walk_amplitudes(m, angles, n_pos)
    state = sv.init_basis_state(n_pos + 1 + q_anc, 0)
    state[: v.shape[0]] = v
    return state
