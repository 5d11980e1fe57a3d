import json

import pytest

from conftest import DATA, ZONE_LEDGER
from motiftrans.cli import main
from motiftrans.graph_io import gen_uniform, serialize_edge_list

EXAMPLE = str(DATA / "two_zone_example.tsv")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def random_input(tmp_path):
    path = tmp_path / "g.tsv"
    path.write_text(serialize_edge_list(gen_uniform(200, 5000, 10**6, 42)))
    return str(path)


def test_discover_two_zone_example(capsys):
    code, out, _ = run(capsys, "discover", "--input", EXAMPLE, "--delta", "3600", "--lmax", "3",
                       "--omega", "3", "--threads", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["zones"] == 3
    multi = {c: n for c, n in doc["terminals"].items() if len(c) > 2}
    assert multi == {c: v[3] for c, v in ZONE_LEDGER.items()}


def test_discover_empty_file(capsys, tmp_path):
    path = tmp_path / "empty.tsv"
    path.write_text("")
    code, out, _ = run(capsys, "discover", "--input", str(path))
    assert code == 0
    assert "#terminals" in out


def test_discover_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "discover", "--input", str(tmp_path / "nope.tsv"))
    assert code == 1 and err


def test_discover_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.tsv"
    path.write_text("1 2 3\nx y z\n")
    assert run(capsys, "discover", "--input", str(path))[0] == 2
    assert run(capsys, "discover", "--input", str(path), "--lenient")[0] == 0


def test_usage_errors(capsys):
    assert run(capsys, "discover", "--omega", "1", "--input", EXAMPLE)[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys)[0] == 1


def test_discover_output_file_deterministic(capsys, tmp_path, random_input):
    outs = []
    for threads in (1, 2, 4, 8):
        target = tmp_path / f"out{threads}.tsv"
        assert run(capsys, "discover", "-i", random_input, "-o", str(target),
                   "--threads", str(threads))[0] == 0
        outs.append(target.read_bytes())
    assert len(set(outs)) == 1


def test_verify_ok(capsys, random_input):
    code, out, _ = run(capsys, "verify", "-i", random_input, "--omega", "2", "--threads", "2")
    assert code == 0
    assert out.rstrip().endswith("OK")


def test_verify_single_zone(capsys, random_input):
    code, out, _ = run(capsys, "verify", "-i", random_input, "--delta", "100000")
    assert code == 0 and out.startswith("zones\t1\n")


def test_verify_detects_corruption(capsys, random_input):
    code, out, _ = run(capsys, "verify", "-i", random_input, "--omega", "2", "--corrupt-boundary")
    assert code == 4
    assert "MISMATCH\tterminals" in out


def test_zones(capsys):
    code, out, _ = run(capsys, "zones", "-i", EXAMPLE, "--delta", "3600", "--lmax", "3", "--omega", "3")
    assert code == 0
    assert out.splitlines() == [
        "index\tkind\tstart\tend\tedges",
        "G1\tgrowth\t3600\t36000\t13",
        "B1\tboundary\t25200\t36000\t5",
        "G2\tgrowth\t25200\t57601\t14",
    ]


def test_gen_deterministic(capsys):
    a = run(capsys, "gen", "--nodes", "100", "--edges", "1000", "--span", "86400", "--seed", "7")
    b = run(capsys, "gen", "--nodes", "100", "--edges", "1000", "--span", "86400", "--seed", "7")
    assert a[0] == 0 and a[1] == b[1]
    assert len(a[1].splitlines()) == 1000
    assert run(capsys, "gen", "--nodes", "1")[0] == 1


def test_report_roundtrip(capsys, tmp_path):
    stats_path = tmp_path / "stats.json"
    assert run(capsys, "discover", "-i", EXAMPLE, "--delta", "3600", "--lmax", "3", "--omega", "3",
               "--format", "json", "-o", str(stats_path))[0] == 0
    code, out, _ = run(capsys, "report", "-i", str(stats_path))
    assert code == 0 and "Total Evolved" in out
    code, out, _ = run(capsys, "report", "-i", str(stats_path), "--tree", "01", "--depth", "2")
    assert code == 0 and out.startswith("01\n")
    code, out, _ = run(capsys, "report", "-i", str(stats_path), "--tree", "01", "--dot")
    assert code == 0 and out.startswith("digraph")
    assert run(capsys, "report", "-i", str(stats_path), "--tree", "zz!")[0] == 1


def test_report_bad_input(capsys, tmp_path):
    path = tmp_path / "junk.tsv"
    path.write_text("#terminals\ncode\tcount\n0101\tmany\n")
    assert run(capsys, "report", "-i", str(path))[0] == 2
