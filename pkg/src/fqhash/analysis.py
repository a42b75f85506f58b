"""Quality harness: sensitivity, collision, avalanche and reliability runs.

Every trial derives its own seeds from ``(master_seed, trial)``, so results do
not depend on execution order or on how trials are split across workers.
"""
import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .dqc1_hash import generate_params, hash_message, subseed
from .errors import ConditionInapplicable
from .walk import validate_bits

# sub-seed tags within one trial
_PARAMS, _MESSAGE, _SHOTS = 0, 1, 2


def hamming(a, b):
    """Bitwise Hamming distance between equal-length bitstrings."""
    if len(a) != len(b):
        raise ValueError("bitstrings differ in length")
    x = np.frombuffer(a.encode("ascii"), dtype=np.uint8)
    y = np.frombuffer(b.encode("ascii"), dtype=np.uint8)
    return int(np.count_nonzero(x != y))


def avalanche_pct(a, b):
    return 100.0 * hamming(a, b) / len(a)


def flip_bit(m, i):
    return m[:i] + ("1" if m[i] == "0" else "0") + m[i + 1 :]


def random_bits(rng, n):
    return "".join("1" if b else "0" for b in rng.integers(0, 2, size=n))


@dataclass
class HashConfig:
    n_pos: int = 5
    q_anc: int = 5
    ensemble: str = "cue"
    dim: int = 2

    def params(self, seed):
        return generate_params(self.n_pos, self.q_anc, self.ensemble, self.dim, seed)


class _Report:
    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def _csv(self, header, rows):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()


@dataclass
class SensitivityReport(_Report):
    messages: list
    hexes: list
    bits: list
    hamming: list
    inapplicable: dict = field(default_factory=dict)

    def distances(self):
        """Upper-triangle pairwise distances, skipping inapplicable conditions."""
        n = len(self.hamming)
        return [
            self.hamming[i][j]
            for i in range(n)
            for j in range(i + 1, n)
            if self.hamming[i][j] is not None
        ]

    def to_csv(self):
        rows = []
        for i, h in enumerate(self.hexes):
            d = [x for j, x in enumerate(self.hamming[i]) if j != i and x is not None]
            rows.append([i + 1, h or "", sum(d) / len(d) if d else ""])
        return self._csv(["condition", "hex", "hamming"], rows)

    def summary(self):
        d = self.distances()
        L = len(next(b for b in self.bits if b))
        distinct = len({b for b in self.bits if b})
        mean = 100.0 * np.mean(d) / L if d else float("nan")
        return f"distinct={distinct} mean_hamming_pct={mean:.2f}"


@dataclass
class CollisionReport(_Report):
    trials: int
    collisions: int
    rate: float
    per_trial: list = field(default_factory=list)

    def to_csv(self):
        return self._csv(["trial", "collision"], [[i, int(c)] for i, c in enumerate(self.per_trial)])

    def summary(self):
        return f"collisions={self.collisions} rate={self.rate}"


@dataclass
class AvalancheReport(_Report):
    per_trial: list
    mean: float
    sem: float
    max: float

    def to_csv(self):
        return self._csv(["trial", "avalanche_pct"], [[i, a] for i, a in enumerate(self.per_trial)])

    def summary(self):
        return f"mean={self.mean:.2f} sem={self.sem:.2f} max={self.max:.2f}"


@dataclass
class ReliabilityReport(_Report):
    messages: int
    regenerations: int
    identical: int
    reliability: float

    def summary(self):
        return f"reliability={self.reliability}"


def sensitivity_messages(m, rng):
    """The five message variants: original, 0->1, 1->0, delete first, insert."""
    out = {1: m}
    zeros = [i for i, b in enumerate(m) if b == "0"]
    ones = [i for i, b in enumerate(m) if b == "1"]
    out[2] = flip_bit(m, int(rng.choice(zeros))) if zeros else ConditionInapplicable(2, "no '0' bit")
    out[3] = flip_bit(m, int(rng.choice(ones))) if ones else ConditionInapplicable(3, "no '1' bit")
    out[4] = m[1:]
    pos = int(rng.integers(0, len(m) + 1))
    out[5] = m[:pos] + str(int(rng.integers(0, 2))) + m[pos:]
    return out


def run_sensitivity(m, params, seed=0, strict=True):
    """Hash the five sensitivity variants of ``m`` under one params set.

    With ``strict=False`` an impossible condition (no '0' or no '1' to flip)
    is recorded in ``inapplicable`` instead of raising.
    """
    m = validate_bits(m)
    if len(m) < 2:
        raise ValueError("sensitivity needs a message of at least 2 bits")
    variants = sensitivity_messages(m, np.random.default_rng(seed))
    messages, bits, skipped = [], [], {}
    for cond in range(1, 6):
        v = variants[cond]
        if isinstance(v, ConditionInapplicable):
            if strict:
                raise v
            skipped[str(cond)] = v.reason
            messages.append(None)
            bits.append(None)
            continue
        messages.append(v)
        bits.append(hash_message(v, params).bits)
    n = len(bits)
    ham = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if bits[i] is not None and bits[j] is not None:
                ham[i][j] = hamming(bits[i], bits[j])
    hexes = [None if b is None else format(int(b, 2), f"0{-(-len(b) // 4)}X") for b in bits]
    return SensitivityReport(messages, hexes, bits, ham, skipped)


def _trial_rngs(master_seed, trial):
    params_seed = subseed(master_seed, trial, _PARAMS)
    rng = np.random.default_rng(subseed(master_seed, trial, _MESSAGE))
    return params_seed, rng


def collision_trial(master_seed, trial, config, message_bits=32, flip=True):
    params_seed, rng = _trial_rngs(master_seed, trial)
    params = config.params(params_seed)
    m = random_bits(rng, message_bits)
    m2 = flip_bit(m, int(rng.integers(message_bits))) if flip else m
    return hash_message(m, params).bits == hash_message(m2, params).bits


def run_collision(trials=1000, config=None, master_seed=0, message_bits=32, flip=True):
    """Count trials where a one-bit flip leaves the hash unchanged.

    Each trial draws fresh params and a fresh random message.  ``flip=False``
    hashes the same message twice, a sanity mode that must always collide.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    config = config or HashConfig()
    hits = [collision_trial(master_seed, t, config, message_bits, flip) for t in range(trials)]
    n = sum(hits)
    return CollisionReport(trials, n, n / trials, hits)


def avalanche_trial(master_seed, trial, config, message_bits=8):
    params_seed, rng = _trial_rngs(master_seed, trial)
    params = config.params(params_seed)
    m = random_bits(rng, message_bits)
    m2 = flip_bit(m, int(rng.integers(message_bits)))
    return avalanche_pct(hash_message(m, params).bits, hash_message(m2, params).bits)


def summarize_avalanche(values):
    values = np.asarray(values, dtype=float)
    sem = float(values.std(ddof=1) / math.sqrt(values.size))
    return AvalancheReport(values.tolist(), float(values.mean()), sem, float(values.max()))


def run_avalanche(trials=1000, config=None, master_seed=0, message_bits=8):
    """Mean, SEM and max avalanche percentage over independent trials."""
    if trials < 2:
        raise ValueError("avalanche needs at least 2 trials for the SEM")
    config = config or HashConfig()
    return summarize_avalanche(
        [avalanche_trial(master_seed, t, config, message_bits) for t in range(trials)]
    )


def run_reliability(n_messages=100, regenerations=100, config=None, master_seed=0,
                    shots=0, max_bits=64):
    """Fraction of regenerated hashes equal to each message's first hash.

    Messages have random lengths in ``[1, max_bits]``.  In shot mode every
    regeneration draws its own measurement seed, as a repeated physical run
    would.
    """
    if n_messages < 1 or regenerations < 1:
        raise ValueError("n_messages and regenerations must be >= 1")
    config = config or HashConfig()
    same = 0
    for t in range(n_messages):
        params_seed, rng = _trial_rngs(master_seed, t)
        params = config.params(params_seed)
        m = random_bits(rng, int(rng.integers(1, max_bits + 1)))
        first = hash_message(m, params, shots, subseed(master_seed, t, _SHOTS, 0)).bits
        for r in range(regenerations):
            again = hash_message(m, params, shots, subseed(master_seed, t, _SHOTS, r + 1)).bits
            same += again == first
    total = n_messages * regenerations
    return ReliabilityReport(n_messages, regenerations, same, same / total)


def birthday_bound(L):
    """Exponent ``k`` such that ~``2**k`` tries find an L-bit collision at 50%."""
    if L < 2:
        raise ValueError("hash length must be >= 2")
    return {"tries_exponent": L // 2}
