"""Properly coloured f-factors in edge-coloured graphs.

The core decision procedure builds a gadget graph whose perfect matchings
correspond to properly coloured f-factors, and extracts a palette-system
certificate from a Tutte set of the gadget when no factor exists.
"""

from .certificates import (Negative, PaletteSystem, Positive, InfeasibleDegree, Rule,
                           check_certificate, find_pc_factor, normalize_violating)
from .errors import PcFactorError
from .formats import load_graph, parse_ecg, parse_hypergraph
from .gadgets import build_gf, build_gfc
from .graph import ColouredGraph, Graph, is_pc_factor
from .matching import maximum_matching, perfect_matching

__version__ = "0.1.0"
