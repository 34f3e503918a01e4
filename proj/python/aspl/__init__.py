"""Exact centrality metrics, relation checks and small-graph mining."""

from ._core import (
    DisconnectedGraphError,
    Graph,
    ParseError,
    audit_geodetic_equivalence,
    catalog,
    check,
    count_connected,
    enumerate_connected,
    generate,
    mine_exhaustive,
    mine_random,
    profile,
    restricted_radiality_sum,
)

__all__ = [
    "DisconnectedGraphError",
    "Graph",
    "ParseError",
    "audit_geodetic_equivalence",
    "catalog",
    "check",
    "count_connected",
    "enumerate_connected",
    "generate",
    "mine_exhaustive",
    "mine_random",
    "profile",
    "restricted_radiality_sum",
]
