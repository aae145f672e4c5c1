"""Comparing knot Floer and reduced Khovanov homology (the FK correspondence)."""

from .checker import FKReport, ThinnessReport, delta_thin, property_fk

__all__ = ["FKReport", "ThinnessReport", "delta_thin", "property_fk"]
