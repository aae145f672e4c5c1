"""Knot Floer homology of (1,1) knots and L-space staircases."""

from .engine import (BigonDomain, HFKError, HFKGenerator, HFKTable, OneOneComplex,
                     enumerate_bigons, gradings, hfk_table, one_one_complex, tau)
from .staircase import (StaircaseError, genus_from_hfk, staircase_complex,
                        staircase_exponents, staircase_from_alexander)

__all__ = ["BigonDomain", "HFKError", "HFKGenerator", "HFKTable", "OneOneComplex",
           "StaircaseError", "enumerate_bigons", "genus_from_hfk", "gradings", "hfk_table",
           "one_one_complex", "staircase_complex", "staircase_exponents",
           "staircase_from_alexander", "tau"]
