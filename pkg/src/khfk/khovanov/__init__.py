"""Khovanov homology, its reduced version and the Lee deformation."""

from .cube import KhovanovComplex, ResolutionState, ResourceLimit, khovanov_complex, resolve
from .homology import (default_jobs, delta_view, khovanov_chain_complex, khovanov_homology,
                       lee_complex, rank_table, s_invariant)
from .scan import scan_complex

__all__ = ["KhovanovComplex", "ResolutionState", "ResourceLimit", "default_jobs", "delta_view",
           "khovanov_chain_complex", "khovanov_complex", "khovanov_homology", "lee_complex",
           "rank_table", "resolve", "s_invariant", "scan_complex"]
