"""Knot diagrams: PD codes, generators and (1,1) diagrams."""

from .builders import SlotGraph, braid_closure, pretzel_diagram, torus_braid_diagram
from .pd import DiagramError, PlanarDiagram, mirror, parse_pd, relabel, serialize_pd

__all__ = ["SlotGraph", "braid_closure", "pretzel_diagram", "torus_braid_diagram",
           "DiagramError", "PlanarDiagram", "mirror", "parse_pd", "relabel", "serialize_pd"]

from .oneone import OneOneDiagram, OneOneError, OneOneParams, alpha_arcs, build_one_one

__all__ += ["OneOneDiagram", "OneOneError", "OneOneParams", "alpha_arcs", "build_one_one"]
