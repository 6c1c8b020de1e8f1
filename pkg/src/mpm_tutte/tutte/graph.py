"""Computation graphs over initial-minor diagrams and the level-by-level Tutte sweep."""

from __future__ import annotations

import logging
from bisect import bisect_left
from dataclasses import dataclass, field

import networkx as nx

from mpm_tutte.diagram import EMPTY_DIAGRAM, greatest_element_minors
from mpm_tutte.errors import DimensionError, GraphInvariantError
from mpm_tutte.models import Diagram, EdgeLabel, ElementKind, PolyStep
from mpm_tutte.tutte.polynomial import BivariatePolynomial, poly_step

logger = logging.getLogger(__name__)

_EXPECTED_LABELS: dict[ElementKind, frozenset[EdgeLabel]] = {
    ElementKind.ISTHMUS: frozenset({EdgeLabel.CONTRACT}),
    ElementKind.LOOP: frozenset({EdgeLabel.DELETE}),
    ElementKind.ORDINARY: frozenset({EdgeLabel.CONTRACT, EdgeLabel.DELETE}),
}


@dataclass(slots=True)
class ComputationGraph:
    """A c/d edge-labelled DAG of initial minors, one vertex per distinct diagram.

    Vertices are ints carrying ``diagram``, ``level`` (its m + r) and ``kind``
    (classification of its greatest element; absent on the sink).
    """

    graph: nx.DiGraph
    root: int
    sink: int
    levels: list[list[int]] = field(default_factory=list)

    @property
    def nu(self) -> int:
        return self.graph.number_of_nodes()

    def diagram(self, vertex: int) -> Diagram:
        return self.graph.nodes[vertex]["diagram"]

    def children(self, vertex: int) -> dict[EdgeLabel, int]:
        return {data["label"]: w for _, w, data in self.graph.out_edges(vertex, data=True)}


class _VertexStore:
    """Canonical diagram keys kept sorted; lookups are binary searches."""

    def __init__(self, graph: nx.DiGraph) -> None:
        self._graph = graph
        self._keys: list[tuple[int, int, int, str, str]] = []
        self._ids: list[int] = []

    def find_or_add(self, diagram: Diagram) -> tuple[int, bool]:
        key = diagram.key
        at = bisect_left(self._keys, key)
        if at < len(self._keys) and self._keys[at] == key:
            return self._ids[at], False
        vertex = self._graph.number_of_nodes()
        self._graph.add_node(vertex, diagram=diagram, level=diagram.n)
        self._keys.insert(at, key)
        self._ids.insert(at, vertex)
        return vertex, True


def build_computation_graph(diagram: Diagram) -> ComputationGraph:
    """Expand initial minors of ``diagram`` breadth-first until only the empty diagram is left.

    A vertex whose greatest element is an isthmus gets one c-edge, a loop one
    d-edge, an ordinary element one of each. Children equal to an existing
    vertex's diagram reuse it.
    """
    if diagram.n == 0:
        diagram = EMPTY_DIAGRAM
    graph = nx.DiGraph()
    store = _VertexStore(graph)
    root, _ = store.find_or_add(diagram)
    levels: list[list[int]] = [[] for _ in range(diagram.n + 1)]
    levels[diagram.n].append(root)

    frontier = [root]
    while frontier:
        discovered: list[int] = []
        for vertex in frontier:
            current: Diagram = graph.nodes[vertex]["diagram"]
            if current.n == 0:
                continue
            kind, deletion, contraction = greatest_element_minors(current)
            graph.nodes[vertex]["kind"] = kind
            for label, child in ((EdgeLabel.CONTRACT, contraction), (EdgeLabel.DELETE, deletion)):
                if child is None:
                    continue
                target, created = store.find_or_add(child)
                graph.add_edge(vertex, target, label=label)
                if created:
                    levels[child.n].append(target)
                    discovered.append(target)
        logger.debug("Expanded %d vertices, discovered %d", len(frontier), len(discovered))
        frontier = discovered

    sink, _ = store.find_or_add(EMPTY_DIAGRAM)
    logger.info(
        "Computation graph for k=%d m=%d r=%d: nu=%d over %d levels",
        diagram.k,
        diagram.m,
        diagram.r,
        graph.number_of_nodes(),
        len(levels),
    )
    return ComputationGraph(graph=graph, root=root, sink=sink, levels=levels)


def tutte_from_graph(computation: ComputationGraph) -> BivariatePolynomial:
    """Evaluate t at the root by sweeping levels upward from the sink.

    Only the previous level's polynomials are kept alive.

    Raises:
        GraphInvariantError: If a vertex's out-edges do not match its classification,
            an edge skips a level, or the sink is not the only vertex on level 0.
    """
    if computation.levels[0] != [computation.sink] and computation.levels[0]:
        raise GraphInvariantError(f"Level 0 holds {computation.levels[0]}, expected the sink only.")
    values: dict[int, BivariatePolynomial] = {computation.sink: BivariatePolynomial.one()}

    for level in range(1, len(computation.levels)):
        current: dict[int, BivariatePolynomial] = {}
        for vertex in computation.levels[level]:
            current[vertex] = _vertex_value(computation, vertex, values)
        values = current

    return values[computation.root]


def _vertex_value(
    computation: ComputationGraph, vertex: int, below: dict[int, BivariatePolynomial]
) -> BivariatePolynomial:
    node = computation.graph.nodes[vertex]
    diagram: Diagram = node["diagram"]
    kind = node.get("kind")
    children = computation.children(vertex)
    if kind is None or frozenset(children) != _EXPECTED_LABELS[kind]:
        raise GraphInvariantError(
            f"Vertex {vertex} ({kind}) has out-edges {sorted(children)}."
        )
    missing = [w for w in children.values() if w not in below]
    if missing:
        raise GraphInvariantError(f"Vertex {vertex} points at {missing} outside the level below.")

    shape = (diagram.r, diagram.m)
    try:
        if kind is ElementKind.ISTHMUS:
            return poly_step(below[children[EdgeLabel.CONTRACT]], PolyStep.TIMES_X, shape=shape)
        if kind is ElementKind.LOOP:
            return poly_step(below[children[EdgeLabel.DELETE]], PolyStep.TIMES_Y, shape=shape)
        return poly_step(
            below[children[EdgeLabel.CONTRACT]],
            PolyStep.ADD,
            shape=shape,
            other=below[children[EdgeLabel.DELETE]],
        )
    except DimensionError as exc:
        raise GraphInvariantError(f"Vertex {vertex}: {exc}") from exc
