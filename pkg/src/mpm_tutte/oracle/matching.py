"""Transversal-matroid rank by bipartite maximum matching."""

from __future__ import annotations

from collections.abc import Iterable

import networkx as nx
from networkx.algorithms import bipartite

from mpm_tutte.cyclic import interval_members
from mpm_tutte.errors import InvalidElementError
from mpm_tutte.models import SetSystem, SigmaIntervalSystem


def as_set_system(sys: SigmaIntervalSystem | SetSystem) -> SetSystem:
    """The member sets of a presentation."""
    if isinstance(sys, SetSystem):
        return sys
    return SetSystem(
        sys.n, tuple(frozenset(interval_members(sys.order, iv)) for iv in sys.intervals)
    )


def rank(sys: SigmaIntervalSystem | SetSystem, subset: Iterable[int]) -> int:
    """Size of a maximum matching of ``subset`` into the sets: the rank of ``subset``.

    Raises:
        InvalidElementError: If ``subset`` leaves the ground set.
    """
    system = as_set_system(sys)
    elements = frozenset(subset)
    stray = [e for e in elements if not 1 <= e <= system.n]
    if stray:
        raise InvalidElementError(f"Elements {sorted(stray)} are outside 1..{system.n}.")
    if not elements or not system.sets:
        return 0

    left = [("element", e) for e in sorted(elements)]
    graph = nx.Graph()
    graph.add_nodes_from(left, bipartite=0)
    graph.add_nodes_from((("set", j) for j in range(len(system.sets))), bipartite=1)
    graph.add_edges_from(
        (("element", e), ("set", j))
        for j, members in enumerate(system.sets)
        for e in members & elements
    )
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    return sum(1 for node in left if node in matching)
