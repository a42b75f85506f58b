"""DQC1 layer over the walk output and hash assembly.

Every ancilla qubit runs one Hadamard test: H, controlled random unitary
onto a few position qubits, H.  The joint ancilla distribution is sorted by
descending probability and the basis labels are concatenated into the hash.
"""
from dataclasses import dataclass, field

import numpy as np

from . import random_unitary as ru
from . import statevector as sv
from .errors import DimensionExceedsRegister, DimensionUnsupported, DirtyAncilla
from .walk import CoinAngles, pad_message, run_walk

# sub-seed component tags mixed into the master seed
_ANGLES, _UNITARY, _TARGETS = 0, 1, 2
_ANGLE_SEPARATION = 1e-6


def subseed(master_seed, *key):
    """Deterministic 64-bit seed for component ``key`` of ``master_seed``."""
    ss = np.random.SeedSequence(int(master_seed), spawn_key=tuple(int(k) for k in key))
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass
class HashParams:
    n_pos: int
    q_anc: int
    ensemble: ru.Ensemble
    dim: int
    angles: CoinAngles
    unitaries: list
    targets: list
    master_seed: int = 0
    rng_algorithm: str = ru.RNG_ALGORITHM

    def __post_init__(self):
        self.ensemble = ru.Ensemble.parse(self.ensemble)
        if not isinstance(self.angles, CoinAngles):
            self.angles = CoinAngles(tuple(self.angles))
        self.unitaries = [np.asarray(u, dtype=complex) for u in self.unitaries]
        self.targets = [tuple(int(t) for t in ts) for ts in self.targets]
        k = self.dim.bit_length() - 1
        if self.dim < 2 or 1 << k != self.dim:
            raise DimensionUnsupported(f"dim={self.dim} is not a power of two >= 2")
        if k > self.n_pos:
            raise DimensionExceedsRegister(
                f"dim={self.dim} needs {k} target qubits but the position register has {self.n_pos}"
            )
        if self.q_anc < 1:
            raise ValueError("q_anc must be >= 1")
        if len(self.unitaries) != self.q_anc or len(self.targets) != self.q_anc:
            raise ValueError("need exactly one unitary and one target list per ancilla")
        for u, ts in zip(self.unitaries, self.targets):
            if u.shape != (self.dim, self.dim):
                raise ValueError(f"unitary shape {u.shape} does not match dim={self.dim}")
            if len(ts) != k or len(set(ts)) != k or not all(0 <= t < self.n_pos for t in ts):
                raise ValueError(f"target list {ts} must hold {k} distinct position qubits")

    @property
    def hash_length(self):
        return self.q_anc * (1 << self.q_anc)

    @property
    def total_qubits(self):
        return self.n_pos + 1 + self.q_anc

    @property
    def ancilla_qubits(self):
        return list(range(self.n_pos + 1, self.total_qubits))


@dataclass(frozen=True)
class HashValue:
    bits: str
    q_anc: int = field(default=0, compare=False)

    @property
    def length(self):
        return len(self.bits)

    @property
    def hex(self):
        width = -(-len(self.bits) // 4)
        return format(int(self.bits, 2), f"0{width}X")

    def blocks(self):
        """Basis labels in hash order, as integers."""
        q = self.q_anc
        return [int(self.bits[i : i + q], 2) for i in range(0, len(self.bits), q)]

    def __str__(self):
        return self.hex


def generate_params(n_pos=5, q_anc=5, ensemble="cue", dim=2, master_seed=0):
    """Draw a complete hash instance from ``master_seed``.

    Angles, each unitary and each target list use independent sub-seeds, so
    changing ``q_anc`` does not disturb the angles or the earlier unitaries.
    """
    ensemble = ru.Ensemble.parse(ensemble)
    k = dim.bit_length() - 1
    if k > n_pos:
        raise DimensionExceedsRegister(
            f"dim={dim} needs {k} target qubits but the position register has {n_pos}"
        )
    rng = np.random.default_rng(subseed(master_seed, _ANGLES))
    while True:
        theta = rng.uniform(0.0, np.pi / 2, size=4)
        gaps = np.abs(theta[:, None] - theta[None, :])[np.triu_indices(4, 1)]
        if theta.min() > 0.0 and gaps.min() > _ANGLE_SEPARATION:
            break
    unitaries = [ru.sample(ensemble, dim, subseed(master_seed, _UNITARY, j)) for j in range(q_anc)]
    targets = []
    for j in range(q_anc):
        trng = np.random.default_rng(subseed(master_seed, _TARGETS, j))
        targets.append(tuple(int(t) for t in trng.choice(n_pos, size=k, replace=False)))
    return HashParams(
        n_pos=n_pos,
        q_anc=q_anc,
        ensemble=ensemble,
        dim=dim,
        angles=CoinAngles(tuple(theta)),
        unitaries=unitaries,
        targets=targets,
        master_seed=int(master_seed),
    )


def apply_dqc1_layer(state, params, order=None):
    """Run one Hadamard test per ancilla, in index order unless ``order`` is given."""
    anc = params.ancilla_qubits
    if sv.ancilla_marginal(state, anc)[0] < 1 - 1e-9:
        raise DirtyAncilla("ancilla register must start in |0...0>")
    for j in order if order is not None else range(params.q_anc):
        a = anc[j]
        state = sv.apply_single_qubit(state, sv.HADAMARD, a)
        state = sv.apply_controlled_unitary(state, params.unitaries[j], a, params.targets[j])
        state = sv.apply_single_qubit(state, sv.HADAMARD, a)
    return state


def hadamard_test(psi, unitary, imaginary=False):
    """Estimate ``<psi|U|psi>`` with one clean ancilla, exactly.

    Returns ``2 P(0) - 1``, which is ``Re<psi|U|psi>``; with
    ``imaginary=True`` an S-dagger follows the first Hadamard and the same
    expression gives ``Im<psi|U|psi>``.
    """
    psi = np.asarray(psi, dtype=complex)
    n = sv.n_qubits(psi)
    state = np.zeros(2 * psi.shape[0], dtype=complex)
    state[: psi.shape[0]] = psi
    state = sv.apply_single_qubit(state, sv.HADAMARD, n)
    if imaginary:
        state = sv.apply_single_qubit(state, sv.S_DAGGER, n)
    state = sv.apply_controlled_unitary(state, unitary, n, list(range(n)))
    state = sv.apply_single_qubit(state, sv.HADAMARD, n)
    return 2 * sv.ancilla_marginal(state, [n])[0] - 1


def extract_hash(dist, q_anc):
    """Concatenate ancilla labels sorted by descending probability.

    Ties go to the smaller basis index.  Labels are ``q_anc``-bit,
    most significant bit first.
    """
    p = np.asarray(dist, dtype=float)
    if p.shape != (1 << q_anc,):
        raise ValueError(f"distribution must have {1 << q_anc} entries, got {p.shape}")
    order = np.lexsort((np.arange(p.shape[0]), -p))
    return HashValue("".join(format(int(i), f"0{q_anc}b") for i in order), q_anc)


def ancilla_distribution(m, params):
    """Exact ancilla distribution for message ``m`` (padded internally)."""
    state = run_walk(pad_message(m), params.angles, params.n_pos, params.q_anc)
    state = apply_dqc1_layer(state, params)
    return sv.ancilla_marginal(state, params.ancilla_qubits)


def hash_message(m, params, shots=0, shot_seed=0):
    """Hash a bitstring.  ``shots=0`` uses the exact ancilla distribution."""
    dist = ancilla_distribution(m, params)
    if shots:
        dist = sv.sample_distribution(dist, shots, shot_seed)
    return extract_hash(dist, params.q_anc)
