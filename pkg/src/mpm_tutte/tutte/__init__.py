"""Tutte polynomials: exact bivariate arithmetic, computation graphs and engines."""

from __future__ import annotations

from mpm_tutte.tutte.base import TutteEnginePort, TutteRun
from mpm_tutte.tutte.engines import engine_for, prepare, tutte, tutte_of_diagram
from mpm_tutte.tutte.graph import ComputationGraph, build_computation_graph, tutte_from_graph
from mpm_tutte.tutte.polynomial import BivariatePolynomial, poly_step

__all__ = [
    "BivariatePolynomial",
    "ComputationGraph",
    "TutteEnginePort",
    "TutteRun",
    "build_computation_graph",
    "engine_for",
    "poly_step",
    "prepare",
    "tutte",
    "tutte_from_graph",
    "tutte_of_diagram",
]
