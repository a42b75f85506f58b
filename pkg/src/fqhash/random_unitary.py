"""Seeded samplers for the circular unitary and orthogonal ensembles."""
import enum

import numpy as np

from .errors import DimensionUnsupported

SUPPORTED_DIMS = (2, 4, 8, 16, 32)

# Named in every params file so a hash instance can be replayed exactly.
RNG_ALGORITHM = "numpy-PCG64/SeedSequence"


class Ensemble(str, enum.Enum):
    CUE = "cue"
    COE = "coe"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown ensemble {value!r}; expected 'cue' or 'coe'") from None


def _check_dim(dim):
    if dim not in SUPPORTED_DIMS:
        raise DimensionUnsupported(f"dim={dim} not in {SUPPORTED_DIMS}")


def haar_unitary(dim, rng):
    """Haar-random unitary from a Ginibre matrix and a phase-fixed QR.

    Without rescaling the columns of Q by the phases of ``diag(R)`` the
    result is biased by the QR routine's sign convention.
    """
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def sample_cue(dim, seed):
    """Sample a ``dim x dim`` unitary from the CUE (Haar measure)."""
    _check_dim(dim)
    return haar_unitary(dim, np.random.default_rng(seed))


def sample_coe(dim, seed):
    """Sample a symmetric unitary ``W.T @ W`` with ``W`` drawn from the CUE."""
    _check_dim(dim)
    w = haar_unitary(dim, np.random.default_rng(seed))
    u = w.T @ w
    # enforce exact symmetry; the product is symmetric only up to rounding
    return (u + u.T) / 2


def sample(ensemble, dim, seed):
    ensemble = Ensemble.parse(ensemble)
    if ensemble is Ensemble.CUE:
        return sample_cue(dim, seed)
    return sample_coe(dim, seed)
