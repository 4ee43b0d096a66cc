import pytest

from hexcover import seeds
from hexcover.canon import are_isomorphic
from hexcover.cdc import find_6cdc, verify_6cdc
from hexcover.circulant import mobius_ladder, torus_2layer
from hexcover.config import configs_equivalent, deficiency, enumerate_seed_configs, restrict, seed_embeddings
from hexcover.graph import girth
from hexcover.hamilton import is_hamiltonian_cycle
from hexcover.named import heawood, prism
from hexcover.seeds import (
    CatalogFormatError,
    build_cycle_adjacency_graph,
    degenerate_substitution,
    derive_I,
    format_catalog,
    load_catalog,
    parse_catalog,
    triangle_correspondence,
    uses_exemption,
)


def instances(cat):
    return [(e, k, b) for e in cat.entries for k, b in enumerate(e.B)]


def test_packaged_catalog_is_reproducible(catalog, fresh_catalog):
    assert format_catalog(fresh_catalog) == format_catalog(catalog)


def test_catalog_roundtrip(catalog):
    text = format_catalog(catalog)
    assert text.startswith(seeds.HEADER + "\n")
    assert format_catalog(parse_catalog(text)) == text


@pytest.mark.parametrize("mangle", [
    lambda t: "",
    lambda t: t.replace(seeds.HEADER, "hexcover-catalog v0"),
    lambda t: t.replace("end entry", "end", 1),
    lambda t: t[: len(t) // 2],
])
def test_parse_rejects_damaged_catalog(catalog, mangle):
    with pytest.raises(CatalogFormatError):
        parse_catalog(mangle(format_catalog(catalog)))


def test_corrupt_catalog_is_moved_aside(tmp_path, monkeypatch, catalog):
    path = tmp_path / "catalog.txt"
    path.write_text("not a catalog\n")
    monkeypatch.setattr(seeds, "build_catalog", lambda: catalog)
    with pytest.raises(CatalogFormatError):
        load_catalog(path, rebuild=False)
    load_catalog(path)
    assert (tmp_path / "catalog.txt.bak").read_text() == "not a catalog\n"
    assert path.read_text() == format_catalog(catalog)


def test_entry_names(catalog):
    assert [e.name for e in catalog.entries] == ["3", "4b", "4a", "4c", "5a", "5b", "5c", "6e", "6a", "6b", "6c", "6d"]


def test_seed_deficiency_and_I_deficiency(catalog):
    for e in catalog.entries:
        assert deficiency(e.seed.host) == 2 * e.girth
        if e.I is not None:
            assert deficiency(e.I.graph) == 2 * e.girth
            assert girth(e.I.graph) == e.girth
            assert e.I.graph.n > e.seed.host.n


def test_I_is_self_similar(catalog):
    for e in catalog.entries:
        if e.I is None:
            continue
        assert configs_equivalent(e.I.config, e.seed) is not None
        for emb in seed_embeddings(e.I.graph, e.girth):
            sub = restrict(e.I.config, e.seed.host, emb)
            if uses_exemption(e.girth, e.seed) and sub.has_complete_cycle():
                continue
            assert configs_equivalent(sub, e.seed) is not None


def test_derive_I_small_girths_agree_with_catalog(catalog):
    for name in ("3", "4a"):
        e = catalog.entry(name)
        inst, outcome = derive_I(e.girth, e.seed)
        assert not outcome.bound_reached
        assert are_isomorphic(inst.graph, e.I.graph)
        assert inst.config == e.I.config


def test_base_instances_are_valid(catalog):
    for e, k, b in instances(catalog):
        assert b.graph.is_cubic()
        assert girth(b.graph) == e.girth
        assert verify_6cdc(b.graph, b.cdc.cycles).ok
        assert is_hamiltonian_cycle(b.graph, b.hamiltonian)
        assert b.type in ("i", "ii", "iii")


def test_textual_identifications(catalog):
    assert are_isomorphic(catalog.entry("3").B[0].graph, prism())
    for name in ("4a", "4c"):
        assert are_isomorphic(catalog.entry(name).B[0].graph, torus_2layer(8))
    b4 = [b.graph for b in catalog.entry("4b").B if not b.degenerate]
    assert any(are_isomorphic(h, torus_2layer(8)) for h in b4)
    assert any(are_isomorphic(h, mobius_ladder(8)) for h in b4)
    assert are_isomorphic(catalog.entry("6b").B[0].graph, heawood())
    assert catalog.entry("5b").I is None and not catalog.entry("5b").B


def test_degenerate_start_closes_to_m8(catalog):
    e = catalog.entry("4b")
    start = [b for b in e.B if b.degenerate]
    assert len(start) == 1 and are_isomorphic(start[0].graph, mobius_ladder(6))
    closed = degenerate_substitution(e)
    assert are_isomorphic(closed.host, mobius_ladder(8))


def test_complete_cycle_bases_have_triangle_correspondence(catalog):
    for b in catalog.entry("6e").B:
        d = build_cycle_adjacency_graph(b.graph, b.cdc)
        assert d.is_regular(6)
        assert triangle_correspondence(b.graph, b.cdc)


def test_heawood_cycle_adjacency():
    g = heawood()
    cdc = find_6cdc(g)[0]
    d = build_cycle_adjacency_graph(g, cdc)
    assert len(d.adj) == 7 and d.is_regular(6)


def test_configuration_counts_match_catalog(catalog):
    for g in (3, 4, 5, 6):
        assert len(catalog.by_girth(g)) == len(enumerate_seed_configs(g).configs)
