import io
import json

import numpy as np
import pytest

from fqhash import params_io
from fqhash.cli import main
from fqhash.dqc1_hash import generate_params, hash_message


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def params_file(tmp_path):
    path = tmp_path / "p.json"
    code, out = run("gen-params", "--seed", "7", "--out", str(path))
    assert code == 0 and "L=160" in out
    return path


def test_params_round_trip_bit_exact():
    for ens, dim in (("cue", 2), ("coe", 8)):
        p = generate_params(5, 6, ens, dim, 31)
        q = params_io.loads(params_io.dumps(p))
        assert params_io.dumps(q) == params_io.dumps(p)
        assert q.angles == p.angles and q.targets == p.targets
        for a, b in zip(p.unitaries, q.unitaries):
            assert a.tobytes() == b.tobytes()


def test_params_file_schema(params_file):
    d = json.loads(params_file.read_text())
    assert d["schema_version"] == 1 and d["hash_length"] == 160
    assert d["rng_algorithm"] == "numpy-PCG64/SeedSequence"
    assert np.array(d["unitaries"]).shape == (5, 2, 2, 2)


def test_params_rejects_bad_schema():
    with pytest.raises(ValueError):
        params_io.loads('{"schema_version": 99}')


def test_gen_params_384(tmp_path):
    code, out = run("gen-params", "--qanc", "6", "--out", str(tmp_path / "p.json"))
    assert code == 0 and "L=384" in out


def test_gen_params_dim_too_large(capsys):
    code, _ = run("gen-params", "--dim", "64")
    assert code == 2
    assert "DimensionExceedsRegister" in capsys.readouterr().err


def test_hash_hex(params_file):
    code, out = run("hash", "--params", str(params_file), "--message", "01100010110101001")
    assert code == 0
    assert out.endswith("\n") and len(out.strip()) == 40 and out.strip() == out.strip().upper()
    expected = hash_message("01100010110101001", params_io.load(params_file)).hex
    assert out.strip() == expected


def test_hash_deterministic(params_file):
    args = ("hash", "--params", str(params_file), "--message-hex", "DEADBEEF")
    assert run(*args) == run(*args)


def test_hash_json(params_file):
    code, out = run("hash", "--params", str(params_file), "--message", "0110", "--format", "json")
    doc = json.loads(out)
    assert set(doc) == {"hex", "bits", "L", "params_digest"}
    assert doc["L"] == 160 and int(doc["hex"], 16) == int(doc["bits"], 2)
    assert doc["params_digest"] == params_io.digest(params_io.load(params_file))


def test_hash_message_file(params_file, tmp_path):
    f = tmp_path / "msg.bin"
    f.write_bytes(b"\xa5")
    _, a = run("hash", "--params", str(params_file), "--message-file", str(f))
    _, b = run("hash", "--params", str(params_file), "--message", "10100101")
    assert a == b


def test_hash_error_codes(params_file, tmp_path):
    assert run("hash", "--params", str(params_file), "--message", "01x1")[0] == 5
    assert run("hash", "--params", str(params_file), "--message-file", str(tmp_path / "nope"))[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("hash", "--params", str(bad), "--message", "01")[0] == 4
    assert run("hash", "--params", str(tmp_path / "missing.json"), "--message", "01")[0] == 4


def test_seed_env_fallback(monkeypatch):
    monkeypatch.setenv("FQH_SEED", "12")
    _, a = run("hash", "--message", "0110")
    _, b = run("hash", "--message", "0110", "--seed", "12")
    assert a == b


def test_collision_cli(tmp_path):
    out_path = tmp_path / "c.csv"
    code, out = run("collision", "--trials", "5", "--qpos", "3", "--qanc", "3", "--out", str(out_path))
    assert code == 0 and out.startswith("collisions=")
    assert out_path.read_text().splitlines()[0] == "trial,collision"


def test_avalanche_cli_json(tmp_path):
    out_path = tmp_path / "a.json"
    code, out = run("avalanche", "--trials", "6", "--dim", "8", "--out", str(out_path))
    assert code == 0 and out.startswith("mean=")
    assert len(json.loads(out_path.read_text())["per_trial"]) == 6


def test_reliability_cli():
    code, out = run("reliability", "--trials", "3", "--regenerations", "3")
    assert code == 0 and out.strip() == "reliability=1.0"


def test_check_flag_rejects_single_shot_reliability():
    code, out = run("reliability", "--trials", "2", "--regenerations", "5", "--shots", "1", "--check")
    assert code == 6


def test_sensitivity_cli(params_file, tmp_path):
    code, out = run("sensitivity", "--params", str(params_file), "--message", "01100010110101001")
    assert code == 0 and out.startswith("distinct=")
    code, out = run("sensitivity", "--params", str(params_file), "--message", "1111")
    assert code == 0
    code, _ = run("sensitivity", "--params", str(params_file), "--message", "1111", "--strict")
    assert code == 6


def test_analysis_cli_deterministic():
    args = ("avalanche", "--trials", "4", "--seed", "9")
    assert run(*args) == run(*args)


def test_hash_one_mebibyte_file(params_file, tmp_path):
    f = tmp_path / "big.bin"
    f.write_bytes(np.random.default_rng(1).bytes(1 << 20))
    code, out = run("hash", "--params", str(params_file), "--message-file", str(f))
    assert code == 0 and len(out.splitlines()) == 1 and len(out.strip()) == 40
