"""Bundled example diagrams.

Each entry pairs a PD file under ``khfk/data`` with whatever else is known
about the knot: a (1,1) description for the Floer engine, torus parameters
for the staircase, and flags used by the self-test.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Dict, Optional, Tuple

from .diagram import PlanarDiagram, parse_pd


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    description: str
    one_one: Optional[Tuple[int, int, int, int]] = None
    one_one_mirror: bool = False
    torus: Optional[Tuple[int, int]] = None
    slow: bool = False      # above the default cube budget; scanning only

    def diagram(self) -> PlanarDiagram:
        return load(self.name)


CORPUS: Dict[str, CorpusEntry] = {e.name: e for e in [
    CorpusEntry("unknot", "crossingless unknot", (1, 0, 0, 0)),
    CorpusEntry("unknot_kink", "unknot with one kink"),
    CorpusEntry("trefoil", "right-handed trefoil", (3, 1, 0, 2), torus=(2, 3)),
    CorpusEntry("trefoil_kink", "right-handed trefoil with an extra kink", (3, 1, 0, 2)),
    CorpusEntry("trefoil_left", "left-handed trefoil", (3, 1, 0, 1)),
    CorpusEntry("figure_eight", "figure-eight knot", (5, 2, 0, 1)),
    CorpusEntry("hopf", "positive Hopf link"),
    CorpusEntry("t2_5", "torus knot T(2,5)", (5, 1, 0, 2), torus=(2, 5)),
    CorpusEntry("knot_5_2", "twist knot 5_2", (7, 2, 0, 3)),
    CorpusEntry("t3_4", "torus knot T(3,4)", (5, 1, 2, 1), torus=(3, 4)),
    CorpusEntry("t4_5", "torus knot T(4,5)", (7, 1, 3, 1), torus=(4, 5), slow=True),
    CorpusEntry("t4_7", "torus knot T(4,7)", torus=(4, 7), slow=True),
    CorpusEntry("pretzel_m3_5_7", "(-3,5,7) pretzel knot", slow=True),
]}


def read_text(name: str) -> str:
    if name not in CORPUS:
        raise KeyError(f"no bundled diagram {name!r}; known: {', '.join(sorted(CORPUS))}")
    return resources.files("khfk.data").joinpath(f"{name}.pd").read_text(encoding="utf-8")


def load(name: str) -> PlanarDiagram:
    return parse_pd(read_text(name))
