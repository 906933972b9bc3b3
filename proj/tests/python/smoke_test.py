"""Python smoke tests: module surface and CLI behave end to end.

Run directly (``python3 smoke_test.py``) or under pytest. The _core extension
directory and the lamd binary come from LEAKYAMD_MODULE_DIR / LEAKYAMD_CLI.
"""

import json
import os
import subprocess
import sys

MODULE_DIR = os.environ.get("LEAKYAMD_MODULE_DIR")
PKG_DIR = os.environ.get("LEAKYAMD_PACKAGE_DIR")
CLI = os.environ.get("LEAKYAMD_CLI")

for path in (MODULE_DIR, PKG_DIR):
    if path and path not in sys.path:
        sys.path.insert(0, path)

import leakyamd  # noqa: E402


def test_amd_roundtrip():
    p = leakyamd.AmdParams.create(7, 1)
    word = leakyamd.amd_encode([2], 3, p)
    assert word == [2, 3, 5]
    assert leakyamd.amd_decode([2, 3, 5], p) == [2]
    assert leakyamd.amd_decode([2, 3, 4], p) is None  # REJECT


def test_strong_code_roundtrip_and_certification():
    inst = leakyamd.LvStrongInstance.create(5, 1, 4)
    word = leakyamd.lv_strong_encode([2], 1, [1], inst)
    assert word == [2, 3, 2, 2]
    assert leakyamd.lv_strong_decode(word, inst) == [2]
    report = leakyamd.empirical_delta_strong(inst)
    assert report["pass"]
    assert report["worst"] == "2/5"


def test_weak_code_reports_its_true_optimum():
    inst = leakyamd.LvWeakInstance.create(11, 2, "3/2")
    assert inst.gmat.to_list() == [[1, 2], [2, 3]]
    word = leakyamd.lv_weak_encode([2, 3], inst)
    assert word == [2, 3, 5]
    assert leakyamd.lv_weak_decode(word, inst) == [2, 3]
    report = leakyamd.empirical_delta_weak(inst, 1)
    assert report["worst"] == "9/10"
    assert not report["pass"]


def test_secrecy_check_is_exactly_zero():
    inst = leakyamd.Wt2Instance.create(5, 4, 2)
    assert str(leakyamd.wt2_secrecy_check(inst)) == "0/1"


def test_sharing_roundtrip():
    scheme = leakyamd.RobustRampScheme.create(11, 1, 5, 6, 1)
    shares = leakyamd.rr_share([7], 2, [4], [1], scheme)
    assert len(shares) == 6
    assert leakyamd.rr_recover(shares, [1, 2, 3, 4, 5], scheme) == [7]
    shares[0] = None
    assert leakyamd.rr_recover(shares, [1, 2, 3, 4, 5], scheme) is None
    assert leakyamd.rr_recover(shares, [2, 3, 4, 5, 6], scheme) == [7]


def test_cap_guard():
    inst = leakyamd.LvStrongInstance.create(5, 1, 4)
    try:
        leakyamd.empirical_delta_strong(inst, cap=10)
    except leakyamd.CapExceeded:
        pass
    else:
        raise AssertionError("expected CapExceeded")


def _run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_cli_encode_decode():
    out = _run("encode", "--family", "amd", "--q", "7", "--d", "1", "--r", "3", "--msg", "2")
    assert out.returncode == 0 and out.stdout.strip() == "2,3,5"
    out = _run("decode", "--family", "amd", "--q", "7", "--d", "1", "--word", "2,3,4")
    assert out.returncode == 2 and out.stdout.strip() == "REJECT"
    out = _run("encode", "--family", "amd", "--q", "5", "--d", "3", "--r", "1", "--msg", "1,2,3")
    assert out.returncode == 1


def test_cli_share_recover_roundtrip():
    shares = _run("share", "--family", "ramp", "--q", "11", "--t", "1", "--r", "3", "--N", "4",
                  "--msg", "1,2", "--seed", "9")
    assert shares.returncode == 0
    recover = subprocess.run(
        [CLI, "recover", "--family", "ramp", "--q", "11", "--t", "1", "--r", "3", "--N", "4",
         "--shares", "-"],
        input=shares.stdout, capture_output=True, text=True)
    assert recover.returncode == 0 and recover.stdout.strip() == "1,2"
    short = subprocess.run(
        [CLI, "recover", "--family", "ramp", "--q", "11", "--t", "1", "--r", "3", "--N", "4",
         "--shares", "-", "--subset", "1,2"],
        input=shares.stdout, capture_output=True, text=True)
    assert short.returncode == 1  # r-1 shares is a usage error


def test_cli_attack_report_is_deterministic():
    args = ("attack", "--family", "lv-strong", "--q", "5", "--k", "1", "--n", "4", "--seed", "3")
    a, b = _run(*args), _run(*args)
    assert a.returncode == 0 and b.returncode == 0
    ja, jb = json.loads(a.stdout), json.loads(b.stdout)
    ja.pop("wall_clock_ms"), jb.pop("wall_clock_ms")
    assert ja == jb
    assert ja["attack"]["worst"] == "2/5"
    assert ja["config"]["prng"] == "splitmix64"


def test_cli_cap_exit_code():
    out = _run("attack", "--family", "lv-strong", "--q", "5", "--k", "1", "--n", "4",
               "--cap", "10")
    assert out.returncode == 3


def test_cli_wt2_encode_and_secrecy():
    out = _run("encode", "--family", "wt2", "--q", "5", "--n", "2", "--k", "1",
               "--msg", "3", "--r", "2")
    assert out.returncode == 0 and out.stdout.strip() == "0,3"
    out = _run("secrecy-check", "--q", "5", "--n", "4", "--k", "2")
    assert out.returncode == 0
    assert json.loads(out.stdout)["max_sd"] == "0/1"


def test_cli_csv_table():
    out = _run("attack", "--family", "lv-strong", "--q", "5", "--k", "1", "--n", "4",
               "--format", "csv")
    lines = out.stdout.strip().splitlines()
    assert lines[0] == "message,read_set,success"
    assert len(lines) == 26  # header + 5 messages x 5 read sets
    assert any(line.endswith("2/5") for line in lines[1:])


def test_bounds_surface():
    assert str(leakyamd.bounds.amd_weak_min_delta(7, 13)) == "1/2"
    lhs, rhs, ok = leakyamd.bounds.strong_rho_bound_check(4, 1, 0.25, 0.4, 5)
    assert ok and lhs == 1.0 and 1.4 < rhs < 1.5
    out = _run("bounds", "--M", "7", "--G", "13")
    rows = json.loads(out.stdout)["values"]
    assert out.returncode == 0
    assert {"name": "weak-amd-min-delta", "value": "1/2"} in rows


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
