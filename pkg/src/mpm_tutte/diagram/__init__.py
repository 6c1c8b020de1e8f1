"""Diagrams (k, m, r, P, Q): construction, b-paths, duality and initial minors."""

from __future__ import annotations

from mpm_tutte.diagram.build import (
    anchored_elements,
    build_diagram,
    diagram_row_order,
    extend,
    lattice_path_diagram,
)
from mpm_tutte.diagram.minors import (
    EMPTY_DIAGRAM,
    classify_greatest_element,
    greatest_element_minors,
    initial_minor_diagram,
)
from mpm_tutte.diagram.paths import (
    count_bases,
    initial_minor_bound,
    label_sets,
    reflect_dual,
    rotate_half_turn,
)

__all__ = [
    "EMPTY_DIAGRAM",
    "anchored_elements",
    "build_diagram",
    "classify_greatest_element",
    "count_bases",
    "diagram_row_order",
    "extend",
    "greatest_element_minors",
    "initial_minor_bound",
    "initial_minor_diagram",
    "label_sets",
    "lattice_path_diagram",
    "reflect_dual",
    "rotate_half_turn",
]
