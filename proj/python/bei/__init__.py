"""Binomial edge ideals of graphs."""

import json

from ._bei import (
    CapExceeded,
    Graph,
    ParseError,
    complete_graph,
    cm_check,
    cutsets,
    cycle_graph,
    depth,
    girth,
    initial_ideal,
    is_accessible,
    is_unmixed,
    parse_graphs,
    path_graph,
    theorem_ids,
)
from . import _bei


def _graph(g):
    return Graph.from_graph6(g) if isinstance(g, str) else g


def analyze(graph, field="QQ", face_budget=None, lattice_budget=None, accessibility_prefilter=True):
    """The same report as `bei analyze`, as a dict.  `graph` may be a graph6 string."""
    return json.loads(_bei._analyze(_graph(graph), field, face_budget, lattice_budget, accessibility_prefilter))


def verify(theorem, corpus, field="QQ", threads=1):
    """Run a theorem verifier over graphs (or one text blob of graph6/edge lists)."""
    graphs = parse_graphs(corpus) if isinstance(corpus, str) else [_graph(g) for g in corpus]
    return json.loads(_bei._verify(theorem, graphs, field, threads))


__all__ = [
    "CapExceeded",
    "Graph",
    "ParseError",
    "analyze",
    "complete_graph",
    "cm_check",
    "cutsets",
    "cycle_graph",
    "depth",
    "girth",
    "initial_ideal",
    "is_accessible",
    "is_unmixed",
    "parse_graphs",
    "path_graph",
    "theorem_ids",
    "verify",
]
