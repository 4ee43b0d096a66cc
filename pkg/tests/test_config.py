import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexcover.cdc import find_6cdc
from hexcover.circulant import mobius_ladder
from hexcover.config import (
    CycleConfiguration,
    config_certificate,
    configs_equivalent,
    deficiency,
    enumerate_seed_configs,
    equivalences,
    format_config,
    fragments,
    parse_config,
    seed_embeddings,
    seed_graph,
    validate_config,
)
from hexcover.named import heawood, prism
from hexcover.splice import labeling_from_cdc

SEEDS = {g: enumerate_seed_configs(g) for g in (3, 4, 5, 6)}
ALL = [(g, i) for g in SEEDS for i in range(len(SEEDS[g].configs))]


@pytest.mark.parametrize("g,count,degenerate", [(3, 1, 0), (4, 3, 1), (5, 3, 0), (6, 5, 0)])
def test_seed_configuration_counts(g, count, degenerate):
    assert len(SEEDS[g].configs) == count
    assert len(SEEDS[g].degenerate) == degenerate


@pytest.mark.parametrize("g", [3, 4, 5, 6])
def test_seed_shape(g):
    s = seed_graph(g)
    assert (s.n, s.m) == (2 * g, 2 * g)
    assert deficiency(s) == 2 * g


def test_only_one_girth6_config_holds_a_hexagon():
    assert [c.has_complete_cycle() for c in SEEDS[6].configs].count(True) == 1


@pytest.mark.parametrize("g,i", ALL)
def test_seed_configs_are_valid_and_distinct(g, i):
    cfg = SEEDS[g].configs[i]
    assert validate_config(cfg) == []
    for j, other in enumerate(SEEDS[g].configs):
        assert (configs_equivalent(cfg, other) is not None) == (i == j)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_relabeled_config_is_equivalent(gi, data):
    g, i = gi
    cfg = SEEDS[g].configs[i]
    labels = cfg.labels()
    perm = data.draw(st.permutations(labels))
    other = cfg.relabeled(dict(zip(labels, perm)))
    assert config_certificate(other) == config_certificate(cfg)
    corr = configs_equivalent(cfg, other)
    assert corr is not None
    back = configs_equivalent(other, cfg)
    assert back is not None


@pytest.mark.parametrize("g,i", ALL)
def test_equivalences_are_distinct(g, i):
    cfg = SEEDS[g].configs[i]
    found = list(equivalences(cfg, cfg))
    assert found
    assert len(set(found)) == len(found)


@pytest.mark.parametrize("g,i", ALL)
def test_config_text_roundtrip(g, i):
    cfg = SEEDS[g].configs[i]
    text = format_config(cfg)
    assert format_config(parse_config(text)) == text
    assert config_certificate(parse_config(text)) == config_certificate(cfg)


@pytest.mark.parametrize("text", ["", "x\n", "4\n0 1 2\n", "4\n0 1 a b\n"])
def test_parse_config_rejects(text):
    with pytest.raises(ValueError):
        parse_config(text)


@pytest.mark.parametrize("host", [prism(), heawood(), mobius_ladder(8)], ids=["prism", "heawood", "M8"])
def test_cdc_configuration_has_closed_hexagons(host):
    cdc = find_6cdc(host)[0]
    cfg = CycleConfiguration.of(host, labeling_from_cdc(host, cdc))
    assert validate_config(cfg) == []
    for label in cfg.labels():
        frs = fragments(cfg, label)
        assert len(frs) == 1 and frs[0].ends is None and frs[0].length == 6


def test_seed_copies_in_heawood():
    embs = seed_embeddings(heawood(), 6)
    assert len(embs) == 28  # one placement per hexagon
    assert len({frozenset(e[:6]) for e in embs}) == 28
