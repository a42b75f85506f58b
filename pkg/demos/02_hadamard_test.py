"""
One clean qubit: the Hadamard test
==================================

An ancilla prepared in |0>, a Hadamard, a controlled-U and another Hadamard
leave P(0) = (1 + Re<psi|U|psi>) / 2.  Inserting S-dagger after the first
Hadamard turns the same readout into the imaginary part.
"""
import numpy as np

from fqhash.dqc1_hash import hadamard_test
from fqhash.random_unitary import sample_coe, sample_cue

rng = np.random.default_rng(3)
psi = rng.standard_normal(8) + 1j * rng.standard_normal(8)
psi /= np.linalg.norm(psi)

for name, u in (("CUE", sample_cue(8, 1)), ("COE", sample_coe(8, 1))):
    exact = np.vdot(psi, u @ psi)
    re, im = hadamard_test(psi, u), hadamard_test(psi, u, imaginary=True)
    print(f"{name}: <psi|U|psi> = {exact:.6f}   circuit gives {re:.6f}{im:+.6f}j")

# %%
# Symmetric unitaries from the COE really are symmetric.
u = sample_coe(16, 5)
print("max |U - U^T| =", np.max(np.abs(u - u.T)))
