import json

import pytest

from posetcheck import format_poset_text
from posetcheck.cli import main
from posetcheck.gadgets import bowtie, crossed_chains_pair

BOWTIE_TEXT = "elements: 1 2 3 4\n1 < 3\n1 < 4\n2 < 3\n2 < 4\n"
CHAIN_TEXT = "elements: a b\na < b\n"


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_validate_ok(tmp_path, capsys):
    path = _write(tmp_path, "p.poset", BOWTIE_TEXT)
    assert main(["validate", path]) == 0
    assert "valid" in capsys.readouterr().out


def test_validate_rejects_cycle(tmp_path):
    path = _write(tmp_path, "bad.poset", "elements: a b\na < b\nb < a\n")
    assert main(["validate", path]) == 1


def test_validate_format_error(tmp_path):
    path = _write(tmp_path, "bad.poset", "no header here\n")
    assert main(["validate", path]) == 2


def test_invariants_output(tmp_path, capsys):
    path = _write(tmp_path, "p.poset", BOWTIE_TEXT)
    assert main(["invariants", path]) == 0
    out = capsys.readouterr().out
    assert "width=2" in out and "depth=2" in out


def test_chains_output(tmp_path, capsys):
    path = _write(tmp_path, "p.poset", BOWTIE_TEXT)
    assert main(["chains", path]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "width=2" and len(lines) == 3


def test_hasse_writes_dot(tmp_path):
    path = _write(tmp_path, "p.poset", BOWTIE_TEXT)
    out = str(tmp_path / "p.dot")
    assert main(["hasse", path, "-o", out]) == 0
    assert "->" in (tmp_path / "p.dot").read_text()


def test_embed_found_and_witness(tmp_path, capsys):
    q, p = crossed_chains_pair()
    qp = _write(tmp_path, "q.poset", format_poset_text(q))
    pp = _write(tmp_path, "p.poset", format_poset_text(p))
    assert main(["embed", qp, pp, "--witness", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["embeds"] is True
    assert len(payload["witness"]) == 8


def test_embed_not_found(tmp_path):
    qp = _write(tmp_path, "q.poset", BOWTIE_TEXT)
    pp = _write(tmp_path, "p.poset", CHAIN_TEXT)
    assert main(["embed", qp, pp]) == 1


def test_embed_oracle_agrees(tmp_path):
    qp = _write(tmp_path, "q.poset", CHAIN_TEXT)
    pp = _write(tmp_path, "p.poset", BOWTIE_TEXT)
    assert main(["embed", qp, pp, "--oracle"]) == 0


def test_hom_requires_meet_semilattice(tmp_path):
    qp = _write(tmp_path, "q.poset", CHAIN_TEXT)
    pp = _write(tmp_path, "p.poset", BOWTIE_TEXT)
    assert main(["hom", qp, pp]) == 2
    assert main(["hom", qp, pp, "--oracle"]) == 0


def test_hom_on_semilattice_target(tmp_path):
    qp = _write(tmp_path, "q.poset", CHAIN_TEXT)
    pp = _write(tmp_path, "p.poset",
                "elements: x y z\nx < y\nx < z\n")
    assert main(["hom", qp, pp]) == 0


def test_iso_exit_codes(tmp_path):
    a = _write(tmp_path, "a.poset", BOWTIE_TEXT)
    b = _write(tmp_path, "b.poset", "elements: p q r s\np < r\np < s\nq < r\nq < s\n")
    c = _write(tmp_path, "c.poset", CHAIN_TEXT)
    assert main(["iso", a, b]) == 0
    assert main(["iso", a, c]) == 1


def test_mc_exit_codes(tmp_path):
    path = _write(tmp_path, "p.poset", BOWTIE_TEXT)
    yes = "exists x. exists y. (!(x <= y) & !(y <= x))"
    no = "exists x. exists y. exists z. (x <= y & !(y <= x) & y <= z & !(z <= y))"
    assert main(["mc", path, "-e", yes]) == 0
    assert main(["mc", path, "-e", no]) == 1
    assert main(["mc", path, "-e", "exists x. (x <="]) == 2


def test_gadget_bowtie(tmp_path):
    out = str(tmp_path / "bow.poset")
    assert main(["gadget", "bowtie", "-o", out]) == 0
    assert main(["validate", out]) == 0


def test_gadget_grid_and_pattern(tmp_path):
    grid_out = str(tmp_path / "grid.poset")
    assert main(["gadget", "grid", "--size", "2", "-o", grid_out]) == 0
    pat_out = str(tmp_path / "pat.poset")
    assert main(["gadget", "pattern", "--k", "2", "-o", pat_out]) == 0
    assert main(["validate", grid_out]) == 0
    assert main(["validate", pat_out]) == 0


def test_gadget_degree_sat(tmp_path):
    cnf = _write(tmp_path, "f.cnf", "p cnf 3 2\n1 -2 0\n-1 3 0\n")
    prefix = str(tmp_path / "deg")
    assert main(["gadget", "degree-sat", "--cnf", cnf, "-o", prefix]) == 0
    assert main(["validate", prefix + ".q.poset"]) == 0
    assert main(["validate", prefix + ".p.poset"]) == 0


def test_gadget_rejects_out_of_class(tmp_path):
    cnf = _write(tmp_path, "f.cnf", "p cnf 2 1\n1 1 2 0\n")
    assert main(["gadget", "degree-sat", "--cnf", cnf,
                 "-o", str(tmp_path / "x")]) == 2


def test_compile_dump(tmp_path, capsys):
    path = _write(tmp_path, "p.poset", BOWTIE_TEXT)
    assert main(["compile-dump", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == 1
    assert "relations" in payload


def test_usage_errors():
    assert main(["nonsense"]) == 2
    assert main(["embed"]) == 2


def test_missing_file_is_io_error(tmp_path):
    assert main(["validate", str(tmp_path / "absent.poset")]) == 2
