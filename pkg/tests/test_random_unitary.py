import numpy as np
import pytest

from fqhash.errors import DimensionUnsupported
from fqhash.random_unitary import Ensemble, haar_unitary, sample, sample_coe, sample_cue


def unitarity_error(u):
    return np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0])))


@pytest.mark.parametrize("dim", [2, 4, 8, 16, 32])
def test_cue_unitary(dim):
    for seed in range(20):
        assert unitarity_error(sample_cue(dim, seed)) < 1e-10


@pytest.mark.parametrize("dim", [2, 4, 8, 16, 32])
def test_coe_symmetric_unitary(dim):
    for seed in range(20):
        u = sample_coe(dim, seed)
        assert np.max(np.abs(u - u.T)) < 1e-12
        assert unitarity_error(u) < 1e-10


@pytest.mark.parametrize("fn", [sample_cue, sample_coe])
@pytest.mark.parametrize("dim", [1, 3, 64])
def test_unsupported_dim(fn, dim):
    with pytest.raises(DimensionUnsupported):
        fn(dim, 0)


def test_deterministic():
    for ens in ("cue", "coe"):
        assert np.array_equal(sample(ens, 8, 123), sample(ens, 8, 123))


def test_distinct_seeds_differ():
    a, b = sample_coe(2, 1), sample_coe(2, 2)
    assert np.max(np.abs(a - b)) > 1e-6


def test_ensemble_parse():
    assert Ensemble.parse("CUE") is Ensemble.CUE
    assert Ensemble.parse(Ensemble.COE) is Ensemble.COE
    with pytest.raises(ValueError):
        Ensemble.parse("cse")


def _second_moments(dim, n=2000):
    sq = np.array([np.abs(sample_cue(dim, s)) ** 2 for s in range(n)])
    return sq.mean(axis=0), sq.std(axis=0, ddof=1) / np.sqrt(n)


@pytest.mark.parametrize("dim", [2, 4])
def test_haar_second_moment(dim):
    mean, se = _second_moments(dim)
    assert np.all(np.abs(mean - 1 / dim) < 5 * se)


def test_haar_first_moment():
    u00 = np.array([sample_cue(2, s)[0, 0] for s in range(2000)])
    assert abs(u00.mean()) < 5 / np.sqrt(2 * 2000)


def test_phase_fix_matters():
    """Bare QR of a Ginibre matrix is not Haar; the phase-fixed sampler is.

    LAPACK returns R with a real diagonal, which pins the column phases of Q
    and shows up as a non-zero mean of U_00 and E|Tr U|^2 != 1.
    """
    rng = np.random.default_rng(0)
    raw = []
    for _ in range(2000):
        z = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2)
        raw.append(np.linalg.qr(z)[0])
    fixed = [haar_unitary(2, np.random.default_rng(s)) for s in range(2000)]
    bound = 5 / np.sqrt(2 * 2000)
    for us, haar in ((np.array(fixed), True), (np.array(raw), False)):
        mean00 = abs(us[:, 0, 0].mean())
        trace2 = np.mean(np.abs(np.trace(us, axis1=1, axis2=2)) ** 2)
        assert bool(mean00 < bound) is haar
        assert bool(abs(trace2 - 1) < 0.1) is haar
