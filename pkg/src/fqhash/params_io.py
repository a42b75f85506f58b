"""JSON params files.

Matrices are stored row-major as ``[re, im]`` pairs.  Python's ``repr`` of a
float is the shortest string that parses back to the same double, so the
round trip is bit-exact.
"""
import hashlib
import json

import numpy as np

from .dqc1_hash import HashParams

SCHEMA_VERSION = 1


def params_to_dict(params):
    return {
        "schema_version": SCHEMA_VERSION,
        "n_pos": params.n_pos,
        "q_anc": params.q_anc,
        "ensemble": params.ensemble.value,
        "dim": params.dim,
        "angles": list(params.angles.theta),
        "unitaries": [
            [[[float(z.real), float(z.imag)] for z in row] for row in u] for u in params.unitaries
        ],
        "targets": [list(t) for t in params.targets],
        "master_seed": params.master_seed,
        "rng_algorithm": params.rng_algorithm,
        "hash_length": params.hash_length,
    }


def params_from_dict(d):
    version = d.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported params schema_version {version!r}")
    unitaries = [np.array([[complex(re, im) for re, im in row] for row in u]) for u in d["unitaries"]]
    params = HashParams(
        n_pos=int(d["n_pos"]),
        q_anc=int(d["q_anc"]),
        ensemble=d["ensemble"],
        dim=int(d["dim"]),
        angles=tuple(d["angles"]),
        unitaries=unitaries,
        targets=d["targets"],
        master_seed=int(d["master_seed"]),
        rng_algorithm=d["rng_algorithm"],
    )
    if "hash_length" in d and d["hash_length"] != params.hash_length:
        raise ValueError("hash_length does not match q_anc")
    return params


def dumps(params):
    """Canonical text form: sorted keys, one top-level field per line."""
    d = params_to_dict(params)
    lines = [f"  {json.dumps(k)}: {json.dumps(d[k], separators=(',', ':'))}" for k in sorted(d)]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def loads(text):
    return params_from_dict(json.loads(text))


def save(params, path):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(dumps(params))


def load(path):
    with open(path, encoding="ascii") as fh:
        return loads(fh.read())


def digest(params):
    """SHA-256 of the canonical params text, identifying the hash instance."""
    return hashlib.sha256(dumps(params).encode("ascii")).hexdigest()
