"""Classical knot invariants used as inputs and as independent oracles."""

from ..hfk.staircase import genus_from_hfk
from .alexander import alexander_fox, bareiss_determinant, fox_matrix, torus_alexander
from .determinant import determinant
from .jones import bracket_states, jones, jones_at_i
from .signature import checkerboard, faces, signature, symmetric_signature

__all__ = ["alexander_fox", "bareiss_determinant", "bracket_states", "checkerboard",
           "determinant", "faces", "fox_matrix", "genus_from_hfk", "jones", "jones_at_i",
           "signature", "symmetric_signature", "torus_alexander"]
