"""Command-line surface: exit codes, output shapes, and determinism."""

import json

import pytest

import posetkit as pk
from posetkit.cli import run_command


@pytest.fixture(autouse=True)
def restore_default_profile():
    yield
    pk.limits.set_profile("default")


def write_poset(tmp_path, p, name="p"):
    path = tmp_path / f"{name}.poset"
    path.write_text(pk.emit_poset(p, name))
    return str(path)


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_writes_a_parseable_document(tmp_path, capsys):
    out = tmp_path / "c.poset"
    code, stdout, _ = run(capsys, "gen", "chain", "5", "-o", str(out))
    assert code == 0
    assert f"wrote {out}: 5 elements" in stdout
    assert pk.parse_poset(out.read_text()).is_chain()


def test_gen_rejects_bad_parameters(tmp_path, capsys):
    out = tmp_path / "x.poset"
    assert run(capsys, "gen", "chain", "-o", str(out))[0] == 2
    assert run(capsys, "gen", "chain", "five", "-o", str(out))[0] == 2
    assert run(capsys, "gen", "catalog", "nosuch", "2", "-o", str(out))[0] == 2


def test_dim_reports_a_certificate(tmp_path, capsys):
    path = write_poset(tmp_path, pk.two_plus_two())
    code, stdout, _ = run(capsys, "dim", path, "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["dimension"] == 2
    exts = [pk.LinearOrder(tuple(e)) for e in payload["realizer"]]
    assert pk.Realizer(tuple(exts)).verify(pk.two_plus_two())


def test_dim_oracle_cap_is_a_usage_error(tmp_path, capsys):
    path = write_poset(tmp_path, pk.chain_of("abcdefgh"))
    code, _, stderr = run(capsys, "dim", path, "--oracle")
    assert code == 2
    assert "capped" in stderr
    small = write_poset(tmp_path, pk.two_plus_two(), name="small")
    code, stdout, _ = run(capsys, "dim", small, "--oracle")
    assert code == 0 and "dimension 2" in stdout


def test_dim_interval_and_ferrers(tmp_path, capsys):
    path = write_poset(tmp_path, pk.two_plus_two())
    code, stdout, _ = run(capsys, "dim", path, "--interval")
    assert code == 0 and "2" in stdout
    rpath = tmp_path / "r.inc"
    rpath.write_text(pk.emit_incidence(pk.random_incidence(3, 3, 0.5, seed=2)))
    code, stdout, _ = run(capsys, "dim", str(rpath), "--ferrers", "--json")
    assert code == 0
    payload = json.loads(stdout)
    assert payload["dimension"] >= 1 and len(payload["cover"]) == payload["dimension"]


def test_lattice_commands_report_sizes(tmp_path, capsys):
    path = write_poset(tmp_path, pk.two_plus_two())
    code, stdout, _ = run(capsys, "macneille", path)
    assert code == 0 and "6 closed sets" in stdout
    code, stdout, _ = run(capsys, "segments", path)
    assert code == 0 and "9 closed sets" in stdout
    rpath = tmp_path / "r.inc"
    rpath.write_text("incidence r\nrows a b\ncols x y\npairs\na x\n")
    code, stdout, _ = run(capsys, "galois", str(rpath))
    assert code == 0 and "closed sets" in stdout


def test_split_output_parses_back(tmp_path, capsys):
    path = write_poset(tmp_path, pk.chain_of("ab"))
    code, stdout, _ = run(capsys, "split", path, "--open")
    assert code == 0
    q = pk.parse_poset(stdout)
    assert set(q.elements) == {"(a,0)", "(b,0)", "(a,1)", "(b,1)"}
    assert q.leq("(a,0)", "(b,1)") and q.incomparable("(a,0)", "(a,1)")


def test_dual_and_product(tmp_path, capsys):
    path = write_poset(tmp_path, pk.chain_of("ab"))
    code, stdout, _ = run(capsys, "dual", path)
    assert code == 0 and pk.parse_poset(stdout).leq("b", "a")
    other = write_poset(tmp_path, pk.chain_of("xy"), name="q")
    code, stdout, _ = run(capsys, "product", path, other)
    assert code == 0
    grid = pk.parse_poset(stdout)
    assert len(grid) == 4 and grid.leq("(a,x)", "(b,y)")


def test_embed_exit_codes(tmp_path, capsys):
    small = write_poset(tmp_path, pk.chain_of("ab"), name="small")
    host = write_poset(tmp_path, pk.two_plus_two(), name="host")
    code, stdout, _ = run(capsys, "embed", small, host)
    assert code == 0 and "->" in stdout
    big = write_poset(tmp_path, pk.chain_of("abc"), name="big")
    code, stdout, _ = run(capsys, "embed", big, host)
    assert code == 1


def test_ext_pipeline(tmp_path, capsys):
    path = write_poset(tmp_path, pk.two_plus_two())
    code, stdout, _ = run(capsys, "ext", path, "--nonseparating")
    assert code == 0
    ext_file = tmp_path / "ell.poset"
    ext_file.write_text(stdout)
    assert pk.parse_poset(stdout).is_chain()
    code, stdout, _ = run(capsys, "ext", path, "--conjugate", str(ext_file))
    assert code == 0
    flipped = pk.parse_poset(stdout)
    assert flipped.is_chain()


def test_ext_nonseparating_absent_is_failure(tmp_path, capsys):
    path = write_poset(tmp_path, pk.three_irreducible_b())
    code, _, stderr = run(capsys, "ext", path, "--nonseparating")
    assert code == 1
    assert "no non-separating extension" in stderr


def test_spectrum_and_factorize(tmp_path, capsys):
    chain = write_poset(tmp_path, pk.chain_of("abcd"))
    code, stdout, _ = run(capsys, "spectrum", chain)
    assert code == 0 and "spectrum with 3 prime ideals" in stdout
    code, stdout, _ = run(capsys, "factorize", chain)
    assert code == 0 and "chains 1" in stdout
    anti = write_poset(tmp_path, pk.antichain_of("ab"), name="anti")
    assert run(capsys, "spectrum", anti)[0] == 2
    assert run(capsys, "factorize", anti)[0] == 2


def test_verify_exit_codes(capsys):
    code, stdout, _ = run(capsys, "verify", "--suite", "identities",
                          "--max-size", "3", "--trials", "2", "--seed", "1")
    assert code == 0
    assert "passed" in stdout and "failed 0" in stdout
    code, _, stderr = run(capsys, "verify", "--suite", "nosuch",
                          "--max-size", "3", "--trials", "0", "--seed", "1")
    assert code == 2


def test_verify_report_artifacts(tmp_path, capsys):
    code, _, _ = run(capsys, "verify", "--suite", "galois", "--max-size", "3",
                     "--trials", "2", "--seed", "7", "--report", str(tmp_path / "out"))
    assert code == 0
    assert (tmp_path / "out" / "galois.csv").exists()
    assert (tmp_path / "out" / "galois.png").exists()
    header = (tmp_path / "out" / "galois.csv").read_text().splitlines()[0]
    assert header == "instance,identity,document"


def test_verify_json_is_deterministic(capsys):
    argv = ("verify", "--suite", "splits", "--max-size", "3",
            "--trials", "3", "--seed", "5", "--json")
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["suite"] == "splits" and payload["failed"] == 0


def test_export_hasse_and_figure(tmp_path, capsys):
    path = write_poset(tmp_path, pk.binary_tree(1))
    code, stdout, _ = run(capsys, "export", path, "--hasse")
    assert code == 0 and stdout.startswith("digraph")
    figure = tmp_path / "tree.png"
    code, stdout, _ = run(capsys, "export", path, "--figure", str(figure))
    assert code == 0 and figure.exists()


def test_profile_flag_tightens_caps(tmp_path, capsys):
    out = tmp_path / "big.poset"
    assert run(capsys, "gen", "chain", "40", "-o", str(out))[0] == 0
    code, _, stderr = run(capsys, "gen", "chain", "40", "-o", str(out), "--profile", "strict")
    assert code == 2 and "cap" in stderr


def test_missing_file_is_a_usage_error(tmp_path, capsys):
    assert run(capsys, "dim", str(tmp_path / "absent.poset"))[0] == 2


def test_bad_argv_returns_parser_code(capsys):
    # missing required positional argument
    code = run_command(["dim"])
    capsys.readouterr()
    assert code == 2
    code = run_command(["nosuchcommand"])
    capsys.readouterr()
    assert code == 2
