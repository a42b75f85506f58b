"""
Message-driven walk on a cycle
==============================

Two message bits pick one of four reflection coins; each step applies the coin
and then moves the walker one node clockwise (coin 0) or anticlockwise
(coin 1).  Here we follow the walker on a 32-node cycle.
"""
import numpy as np

from fqhash.walk import CoinAngles, pad_message, walk_amplitudes

angles = CoinAngles((0.35, np.pi / 4, 0.9, 1.3))
n_pos = 5
N = 1 << n_pos

# %%
# One Hadamard step ('01' selects the pi/4 coin) splits the walker between
# nodes 1 and 31.
amps = walk_amplitudes("01", angles, n_pos)
probs = amps[:N] ** 2 + amps[N:] ** 2
print("after '01':", {x: round(p, 3) for x, p in enumerate(probs) if p > 1e-12})

# %%
# A longer message spreads the walker.  Position parity equals the number of
# steps, so only every other node is occupied.
m = pad_message("01100010110101001")
amps = walk_amplitudes(m, angles, n_pos)
probs = amps[:N] ** 2 + amps[N:] ** 2
print(f"{len(m) // 2} steps, occupied nodes:", np.flatnonzero(probs > 1e-12).tolist())
for x in range(N):
    print(f"{x:2d} {'#' * int(round(200 * probs[x]))}")

# %%
# Flipping one bit changes a single coin, and the final state moves away.
flipped = "1" + m[1:]
delta = np.linalg.norm(walk_amplitudes(flipped, angles, n_pos) - amps)
print(f"L2 distance after flipping the first bit: {delta:.3f}")
