"""Dense statevector kernels for small qubit registers.

States are plain one-dimensional ``complex128`` numpy arrays of length
``2**n_qubits``.  Qubit 0 is the least significant bit of the basis index.
For the hash circuit the register layout is::

    [position: n_pos qubits][coin: 1 qubit][ancilla: q_anc qubits]
     low bits                                          high bits

Every ``apply_*`` function returns a new array and leaves its input alone.
"""
from functools import lru_cache

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexClash,
    InvalidBasisState,
    InvalidShots,
    ResourceLimit,
)

MAX_QUBITS = 24

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
S_DAGGER = np.array([[1, 0], [0, -1j]], dtype=complex)


def n_qubits(state):
    """Number of qubits encoded by ``state``."""
    size = state.shape[0]
    n = size.bit_length() - 1
    if size <= 0 or 1 << n != size:
        raise DimensionMismatch(f"state length {size} is not a power of two")
    return n


def _check_qubits(n, indices):
    for k in indices:
        if not 0 <= k < n:
            raise InvalidBasisState(f"qubit index {k} outside [0, {n})")
    if len(set(indices)) != len(indices):
        raise IndexClash(f"repeated qubit index in {list(indices)}")


def _axis(n, qubit):
    # C-order reshape to (2,)*n puts the most significant qubit on axis 0.
    return n - 1 - qubit


def init_basis_state(total_qubits, basis_index):
    """Computational basis state ``|basis_index>`` on ``total_qubits`` qubits."""
    if total_qubits > MAX_QUBITS:
        raise ResourceLimit(f"{total_qubits} qubits exceeds the {MAX_QUBITS}-qubit guard")
    if total_qubits < 0:
        raise InvalidBasisState("negative qubit count")
    dim = 1 << total_qubits
    if not 0 <= basis_index < dim:
        raise InvalidBasisState(f"basis index {basis_index} outside [0, {dim})")
    state = np.zeros(dim, dtype=complex)
    state[basis_index] = 1.0
    return state


def apply_single_qubit(state, gate, target):
    """Apply a 2x2 ``gate`` to qubit ``target``."""
    gate = np.asarray(gate)
    if gate.shape != (2, 2):
        raise DimensionMismatch(f"single-qubit gate must be 2x2, got {gate.shape}")
    n = n_qubits(state)
    _check_qubits(n, [target])
    view = state.reshape(-1, 2, 1 << target)
    out = np.einsum("ab,ibj->iaj", gate, view)
    return out.reshape(-1)


def apply_controlled_unitary(state, gate, control, targets):
    """Apply ``gate`` to ``targets`` on the branch where ``control`` is 1.

    ``targets[0]`` is the least significant bit of the gate's row/column
    index, so a 4x4 gate on ``targets=[2, 0]`` sees qubit 2 as its low bit.
    """
    gate = np.asarray(gate)
    targets = list(targets)
    d = 1 << len(targets)
    if gate.shape != (d, d):
        raise DimensionMismatch(
            f"gate shape {gate.shape} does not match {len(targets)} target qubits"
        )
    if control in targets:
        raise IndexClash(f"control qubit {control} is also a target")
    n = n_qubits(state)
    _check_qubits(n, [control, *targets])

    out = state.copy()
    tensor = out.reshape((2,) * n)
    sel = [slice(None)] * n
    sel[_axis(n, control)] = 1
    branch = tensor[tuple(sel)]  # view; control axis removed

    # axes of the branch (n-1 dims) after dropping the control axis
    def branch_axis(q):
        a = _axis(n, q)
        return a - 1 if a > _axis(n, control) else a

    # most significant target first so targets[0] lands last (lowest bit)
    src = [branch_axis(q) for q in reversed(targets)]
    moved = np.moveaxis(branch, src, range(n - 1 - len(targets), n - 1))
    shape = moved.shape
    flat = moved.reshape(-1, d)
    flat = flat @ gate.T
    branch[...] = np.moveaxis(flat.reshape(shape), range(n - 1 - len(targets), n - 1), src)
    return out


@lru_cache(maxsize=64)
def _shift_permutation(n, position_qubits, coin):
    idx = np.arange(1 << n, dtype=np.int64)
    x = np.zeros_like(idx)
    for k, q in enumerate(position_qubits):
        x |= ((idx >> q) & 1) << k
    c = (idx >> coin) & 1
    size = 1 << len(position_qubits)
    x_new = np.where(c == 0, (x + 1) % size, (x - 1) % size)
    dest = idx.copy()
    for k, q in enumerate(position_qubits):
        dest &= ~(1 << q)
        dest |= ((x_new >> k) & 1) << q
    dest.setflags(write=False)
    return dest


def apply_cyclic_shift(state, position_qubits, coin):
    """Conditional shift on a cycle of ``N = 2**len(position_qubits)`` nodes.

    Coin 0 moves the walker ``x -> x+1 mod N``, coin 1 moves it
    ``x -> x-1 mod N``.  ``position_qubits[0]`` is the low bit of ``x``.
    Implemented as an index permutation, so it is exact.
    """
    position_qubits = tuple(position_qubits)
    n = n_qubits(state)
    _check_qubits(n, [*position_qubits, coin])
    dest = _shift_permutation(n, position_qubits, coin)
    out = np.empty_like(state)
    out[dest] = state
    return out


def ancilla_marginal(state, ancilla):
    """Exact outcome distribution of measuring the ``ancilla`` qubits.

    ``probs[a]`` sums ``|amplitude|**2`` over every other qubit, where bit
    ``k`` of ``a`` is the value of ``ancilla[k]``.
    """
    ancilla = list(ancilla)
    n = n_qubits(state)
    _check_qubits(n, ancilla)
    probs = (state.real**2 + state.imag**2).reshape((2,) * n)
    keep = [_axis(n, q) for q in reversed(ancilla)]
    drop = tuple(a for a in range(n) if a not in keep)
    reduced = probs.sum(axis=drop) if drop else probs
    # remaining axes are in increasing original-axis order; reorder to `keep`
    order = sorted(keep)
    reduced = np.transpose(reduced, [order.index(a) for a in keep])
    return np.ascontiguousarray(reduced).reshape(-1)


def sample_distribution(dist, shots, rng_seed):
    """Empirical frequencies from ``shots`` multinomial draws of ``dist``."""
    if shots < 1:
        raise InvalidShots("shots must be >= 1; use the exact distribution for shots=0")
    p = np.clip(np.asarray(dist, dtype=float), 0.0, None)
    p = p / p.sum()
    rng = np.random.default_rng(rng_seed)
    counts = rng.multinomial(int(shots), p)
    return counts / shots
