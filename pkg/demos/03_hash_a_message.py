"""
Hashing a message and probing sensitivity
=========================================

A hash instance fixes four coin angles, one random unitary per ancilla and
the position qubits each unitary acts on.  We hash the 17-bit message used in
the sensitivity tables under five variants of it.
"""
from fqhash import analysis, generate_params, hash_message, params_io

params = generate_params(n_pos=5, q_anc=5, ensemble="cue", dim=2, master_seed=2024)
print("hash length:", params.hash_length, "bits; instance", params_io.digest(params)[:16])

h = hash_message("01100010110101001", params)
print(h.hex)

# %%
# Every 5-bit label appears exactly once: the hash is a ranking of the 32
# ancilla outcomes.
print(h.blocks())

# %%
rep = analysis.run_sensitivity("01100010110101001", params, seed=1)
labels = ["original", "0 -> 1", "1 -> 0", "drop first", "insert"]
for label, msg, hx in zip(labels, rep.messages, rep.hexes):
    print(f"{label:>10}  {msg:<19} {hx}")
print(rep.summary())

# %%
# The 384-bit variant only adds one ancilla qubit.
big = generate_params(5, 6, "coe", 2, 2024)
print(hash_message("01100010110101001", big).hex)
