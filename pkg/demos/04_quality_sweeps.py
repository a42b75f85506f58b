"""
Collision, avalanche and reliability sweeps
===========================================

Each trial draws a fresh hash instance and a random message, flips one bit
and compares the two hashes.  Trial counts here are small so the script runs
in seconds; the CLI runs the full sweeps (``fqh avalanche --trials 1000``).
"""
import sys

from fqhash import analysis

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 100

print("ensemble dim  collisions  avalanche mean / sem / max")
for ens in ("cue", "coe"):
    for dim in (2, 4, 8, 16, 32):
        cfg = analysis.HashConfig(n_pos=5, q_anc=5, ensemble=ens, dim=dim)
        col = analysis.run_collision(trials, cfg, master_seed=1)
        av = analysis.run_avalanche(trials, cfg, master_seed=1)
        print(f"{ens:>8} {dim:3d}  {col.collisions:10d}  {av.mean:6.2f} / {av.sem:.2f} / {av.max:.2f}")

# %%
rel = analysis.run_reliability(20, 20, master_seed=1)
rel_shot = analysis.run_reliability(20, 20, master_seed=1, shots=1024)
print(f"reliability exact={rel.reliability}  1024 shots={rel_shot.reliability:.3f}")
print("birthday exponent for 160 / 384 bits:", analysis.birthday_bound(160), analysis.birthday_bound(384))
