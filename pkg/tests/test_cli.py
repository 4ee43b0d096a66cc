import pytest

from hexcover import cli, seeds
from hexcover.cdc import find_6cdc, format_cdc
from hexcover.circulant import mobius_ladder
from hexcover.graph6 import encode_graph6
from hexcover.named import heawood, petersen, prism


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def g6(g):
    return encode_graph6(g).decode() + "\n"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_oracle_on_petersen(capsys, files):
    code, out, err = run(capsys, "oracle", files("p.g6", g6(petersen())))
    assert code == cli.EXIT_FINDING
    assert out == ""
    assert "no 6-CDC" in err


def test_oracle_then_verify_prism(capsys, files):
    graph = files("prism.g6", g6(prism()))
    code, out, _ = run(capsys, "oracle", graph)
    assert code == 0
    assert out == format_cdc(prism(), find_6cdc(prism())[0].renumbered())
    code, out, err = run(capsys, "verify", graph, files("prism.cdc", out))
    assert code == 0 and out == ""
    for name in ("edge-coverage", "no-shared-path", "three-per-vertex", "mu-bounds", "sigma-bounds"):
        assert f"{name:<22}pass" in err


def test_verify_reports_broken_cover(capsys, files):
    cdc = find_6cdc(prism())[0]
    text = format_cdc(prism(), cdc).splitlines()
    broken = "6 9 3\n" + "\n".join([text[1], text[1], text[2]]) + "\n"
    code, _, err = run(capsys, "verify", files("g.g6", g6(prism())), files("bad.cdc", broken))
    assert code == cli.EXIT_FINDING
    assert "edge-coverage         FAIL" in err


def test_verify_header_mismatch_is_usage_error(capsys, files):
    text = format_cdc(prism(), find_6cdc(prism())[0])
    code, _, err = run(capsys, "verify", files("h.g6", g6(heawood())), files("p.cdc", text))
    assert code == cli.EXIT_USAGE and "header" in err


def test_generate_heawood_with_ham(capsys):
    code, out, err = run(capsys, "generate", "--girth", "6", "--max-n", "14", "--with-ham")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines[1].startswith("ham ")
    assert "graphs=1" in err and "time:" in err and "time:" not in out


def test_generate_records_with_cdc(capsys):
    code, out, _ = run(capsys, "generate", "--girth", "3", "--max-n", "12", "--with-cdc")
    assert code == 0
    assert out.splitlines()[0] == g6(prism()).strip()
    assert out.splitlines()[1] == "6 9 3"


def test_generate_edges_format(capsys):
    code, out, _ = run(capsys, "generate", "--girth", "3", "--max-n", "6", "--format", "edges")
    assert code == 0 and out.splitlines()[0] == "6 9"


@pytest.mark.parametrize("argv", [
    ["generate", "--girth", "7", "--max-n", "10"],
    ["generate", "--girth", "3"],
    ["generate", "--girth", "3", "--max-n", "2"],
    ["generate", "--girth", "3", "--max-n", "8", "--format", "xml"],
    ["crosscheck", "--max-n", "30"],
    ["circulant", "circulant", "10"],
    ["circulant", "mobius", "7"],
    ["oracle", "/nonexistent/file.g6"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == cli.EXIT_USAGE


def test_bad_graph6_input(capsys, files):
    code, _, err = run(capsys, "oracle", files("x.g6", "E{Sw\n!!\n"))
    assert code == cli.EXIT_USAGE and ":2:" in err


def test_circulant_mobius_with_mcsd(capsys):
    code, out, _ = run(capsys, "circulant", "mobius", "8", "--mcsd")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == g6(mobius_ladder(8)).strip()
    assert len(lines) == 2 + 12
    assert {line.split()[2] for line in lines[2:]} <= {"1", "4", "7"}


def test_circulant_torus_without_mcsd(capsys):
    code, out, err = run(capsys, "circulant", "torus", "8", "--mcsd")
    assert code == cli.EXIT_FINDING and len(out.splitlines()) == 1
    assert "no minimal chordal" in err


def test_families_command(capsys):
    code, _, err = run(capsys, "circulant", "families", "12", "--stream")
    assert code == 0 and "except K_4 has a 6-CDC: pass" in err


def test_reduce_and_iso(capsys, files, tmp_path):
    _, out, _ = run(capsys, "generate", "--girth", "3", "--max-n", "18", "--with-cdc")
    lines = out.splitlines()
    k = lines.index("18 27 9")  # CDC header of the last record
    graph = files("k.g6", lines[k - 1] + "\n")
    cdc = files("k.cdc", "\n".join(lines[k:]) + "\n")
    code, out, err = run(capsys, "reduce", graph, cdc)
    assert code == 0 and "terminal: B_3[0]" in err
    assert out.splitlines()[0] == g6(prism()).strip()
    base = files("base.g6", out.splitlines()[0] + "\n")
    code, out, _ = run(capsys, "iso", base, files("prism.g6", g6(prism().relabel([5, 4, 3, 2, 1, 0]))))
    assert code == 0 and len(out.split()) == 6
    assert run(capsys, "iso", base, graph)[0] == cli.EXIT_FINDING


def test_crosscheck_command(capsys, corpus_dir):
    code, out, err = run(capsys, "crosscheck", "--max-n", "10", "--cache-dir", str(corpus_dir))
    assert code == 0 and out == ""
    assert "check generator equals oracle: pass" in err


def test_derive_seeds_anchor_failure_exits_3(capsys, tmp_path, monkeypatch, catalog):
    monkeypatch.setattr(seeds, "build_catalog", lambda: catalog)
    out = tmp_path / "cat.txt"
    out.write_text("garbage\n")
    code, _, err = run(capsys, "derive-seeds", "--out", str(out))
    assert code == (0 if catalog.ok else cli.EXIT_INTERNAL)
    assert (tmp_path / "cat.txt.bak").read_text() == "garbage\n"
    assert out.read_text() == seeds.format_catalog(catalog)
    assert "moved to" in err


def test_internal_error_exit_code(capsys, monkeypatch):
    from hexcover import generator

    def boom(*a, **k):
        raise AssertionError("invariant broken")

    monkeypatch.setattr(generator, "generate", boom)
    code, _, err = run(capsys, "generate", "--girth", "3", "--max-n", "6")
    assert code == cli.EXIT_INTERNAL and "invariant broken" in err


def test_custom_catalog_option(capsys, files, catalog):
    path = files("cat.txt", seeds.format_catalog(catalog))
    code, out, _ = run(capsys, "generate", "--girth", "3", "--max-n", "12", "--catalog", path)
    assert code == 0 and len(out.splitlines()) == 2
