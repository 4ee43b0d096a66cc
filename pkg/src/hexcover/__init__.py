"""Cubic graphs with 6-cycle double covers: seeds, substitution, oracles."""

from .canon import are_isomorphic, canonical_form, find_isomorphism
from .cdc import CDC, check_structure_theorems, find_6cdc, format_cdc, has_6cdc, parse_cdc, verify_6cdc
from .circulant import circulant, find_mcsd, mobius_ladder, torus_2layer, verify_theorem2
from .generator import generate, reduce_to_base, replay
from .graph import Graph, build_graph, girth
from .graph6 import decode_graph6, encode_graph6
from .hamilton import hamiltonian_cycle, is_hamiltonian_cycle
from .kernels import IMPLEMENTATION
from .seeds import build_catalog, load_catalog, parse_catalog

__version__ = "0.1.0"


def default_catalog():
    """The catalog shipped with the package."""
    from .cli import packaged_catalog

    return parse_catalog(packaged_catalog())
