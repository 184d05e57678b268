"""End-to-end command line coverage."""

import json

from spectra_forge import cli
from spectra_forge.graphs import Graph


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_spectrum_table(capsys):
    code, out = run(capsys, "spectrum", "--group", "cyclic:4", "--set", "1,3",
                    "--kind", "diff")
    assert code == 0
    assert "[2]^1, [0]^2, [-2]^1" in out
    assert "parity: even" in out


def test_spectrum_json_and_csv(capsys):
    code, out = run(capsys, "spectrum", "--group", "cyclic:4", "--set", "1,3",
                    "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["class"]["parity"] == "even"
    code, out = run(capsys, "spectrum", "--group", "cyclic:4", "--set", "1,3",
                    "--format", "csv")
    assert out.splitlines()[0] == "re,im,multiplicity"


def test_spectrum_mirror_graph(capsys):
    code, out = run(capsys, "spectrum", "--group", "cyclic:4", "--set", "1,3",
                    "--tkind", "Se")
    assert code == 0
    assert "[5]^1, [1]^2, [-1]^4, [-3]^1" in out
    assert "parity: odd" in out


def test_build_round_trip(capsys, tmp_path):
    code, out = run(capsys, "build", "--group", "cyclic:4", "--set", "1,3",
                    "--tkind", "e", "--format", "json")
    assert code == 0
    g = Graph.from_json(out)
    assert g.n == 8 and g.to_json() == out.strip()


def test_build_dot(capsys):
    code, out = run(capsys, "build", "--group", "cyclic:4", "--set", "1,3",
                    "--format", "dot")
    assert code == 0 and out.startswith("graph")


def test_ring_selectors(capsys):
    code, out = run(capsys, "spectrum", "--ring", "zpk:2^2*gf:3", "--set", "units")
    assert code == 0
    assert "[4]^1, [2]^2, [0]^6, [-2]^2, [-4]^1" in out
    code, out = run(capsys, "spectrum", "--ring", "gf:9", "--set", "pk:2")
    assert code == 0
    assert "[4]^1, [1]^4, [-2]^4" in out
    code, out = run(capsys, "spectrum", "--group", "cyclic:8", "--set", "gcd:1,4")
    assert code == 0


def test_compare(capsys):
    code, out = run(
        capsys, "compare",
        "--group", "cyclic:16", "--set", "1,2,4,5,9,10,12,13", "--kind", "diff",
        "--group2", "prod:(cyclic:4,cyclic:4)",
        "--set2", "1,2,4,6,9,10,13,15", "--kind2", "diff",
    )
    assert code == 0 and "isospectral: True" in out
    code, out = run(
        capsys, "compare",
        "--group", "cyclic:16", "--set", "1,2,4,5,9,10,12,13", "--kind", "diff",
        "--kind2", "sum",
    )
    assert code == 0 and "isospectral: False" in out


def test_verify_json_lines(capsys):
    code, out = run(capsys, "verify", "--suite", "all", "--seed", "7", "--trials", "4")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines() if line.strip()]
    assert rows and all(r["outcome"] in ("pass", "xfail", "skip") for r in rows)
    assert all(r["seed"] == 7 for r in rows)


def test_verify_deterministic(capsys):
    _, out1 = run(capsys, "verify", "--seed", "3", "--trials", "4")
    _, out2 = run(capsys, "verify", "--seed", "3", "--trials", "4")
    assert out1 == out2


def test_verify_suite_filter(capsys):
    code, out = run(capsys, "verify", "--suite", "prop-cayley-structure",
                    "--seed", "7", "--trials", "4")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines() if line.strip()]
    assert rows and all(r["claim"].startswith("prop-cayley-structure") for r in rows)


def test_pair_command(capsys):
    code, out = run(capsys, "pair", "--ring", "zpk:2^2*gf:3")
    assert code == 0
    assert "even pair spectrum (shared): {[8]^1, [4]^2, [0]^18, [-4]^2, [-8]^1}" in out
    assert "[9]^1, [5]^2, [1]^6, [-3]^2, [-7]^1" in out.replace(", [-1]^12", "")
    assert "xfail" in out    # the documented odd-pair erratum is surfaced


def test_pair_hypothesis_violation(capsys):
    code = cli.main(["pair", "--ring", "gf:3"])
    assert code == cli.EXIT_HYPOTHESIS


def test_report_command(capsys):
    code, out = run(capsys, "report", "--group", "cyclic:16",
                    "--set", "1,2,4,5,9,10,12,13")
    assert code == 0
    assert "directed: True" in out and "twin classes" in out


def test_parse_errors(capsys):
    assert cli.main(["spectrum", "--group", "cyclic:x", "--set", "1"]) == cli.EXIT_PARSE_ERROR
    assert cli.main(["spectrum", "--group", "cyclic:4", "--set", "units"]) == cli.EXIT_PARSE_ERROR
    assert cli.main(["spectrum", "--set", "1"]) == cli.EXIT_PARSE_ERROR
    assert cli.main(["nonsense"]) == cli.EXIT_PARSE_ERROR


def test_outputs_deterministic(capsys):
    _, a = run(capsys, "spectrum", "--ring", "zpk:2^2*gf:3", "--set", "units",
               "--tkind", "Se", "--kind", "sum")
    _, b = run(capsys, "spectrum", "--ring", "zpk:2^2*gf:3", "--set", "units",
               "--tkind", "Se", "--kind", "sum")
    assert a == b


def test_out_file(tmp_path, capsys):
    target = tmp_path / "spec.csv"
    code = cli.main(["spectrum", "--group", "cyclic:4", "--set", "1,3",
                     "--format", "csv", "--out", str(target)])
    assert code == 0
    assert target.read_text().startswith("re,im,multiplicity")
