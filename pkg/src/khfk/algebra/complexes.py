"""Bigraded, filtered chain complexes and their homology.

Conventions
-----------
A ``BigradedComplex`` carries a homological grading ``u`` and a filtration
grading ``f`` on a free basis. ``d_degree`` is the change of ``u`` under the
differential (-1 for chain complexes such as knot Floer, +1 for cochain
complexes such as Khovanov). ``upward`` selects the filtration direction:
downward filtrations have ``f(dx) <= f(x)``, upward ones ``f(dx) >= f(x)``.

Spectral sequence pages are numbered so that page 1 is the associated
graded chain group (the complex with its filtration-preserving part of
the differential), page 2 is its homology, and so on.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .laurent import LaurentPolynomial
from .snf import is_prime, rank_mod_p, rank_rational, smith_normal_form

Coefficients = Union[str, int]
Bigrading = Tuple[int, int]


class ComplexError(ValueError):
    """Raised for malformed complexes (bad gradings, d^2 != 0)."""


def parse_coefficients(coefficients: Coefficients) -> Tuple[str, Optional[int]]:
    """Normalize ``"Q"``, ``"Z"``, ``"Z/p"`` or a prime ``p``."""
    if isinstance(coefficients, int):
        if not is_prime(coefficients):
            raise ValueError(f"Z/{coefficients}: only prime moduli are supported")
        return "Zp", coefficients
    c = str(coefficients).strip().upper().replace("ℚ", "Q").replace("ℤ", "Z")
    if c in ("Q", "QQ"):
        return "Q", None
    if c in ("Z", "ZZ"):
        return "Z", None
    if c.startswith("Z/") or c.startswith("F"):
        p = int(c.split("/")[-1] if "/" in c else c[1:])
        return parse_coefficients(p)
    raise ValueError(f"unknown coefficient ring {coefficients!r}")


@dataclass(frozen=True)
class GradedGenerator:
    id: object
    u: int
    f: int


@dataclass(frozen=True)
class HomologyEntry:
    rank: int
    torsion: Tuple[int, ...] = ()


class HomologyTable:
    """Free ranks and torsion per bigrading ``(u, f)``."""

    def __init__(self, entries: Mapping[Bigrading, HomologyEntry] | None = None,
                 coefficients: str = "Q"):
        self.entries: Dict[Bigrading, HomologyEntry] = {
            k: v for k, v in (entries or {}).items() if v.rank or v.torsion}
        self.coefficients = coefficients

    @classmethod
    def from_ranks(cls, ranks: Mapping[Bigrading, int], coefficients: str = "Q"):
        return cls({k: HomologyEntry(r) for k, r in ranks.items() if r}, coefficients)

    def rank(self, u: int, f: int) -> int:
        e = self.entries.get((u, f))
        return e.rank if e else 0

    def ranks(self) -> Dict[Bigrading, int]:
        return {k: v.rank for k, v in self.entries.items() if v.rank}

    def torsion(self) -> Dict[Bigrading, Tuple[int, ...]]:
        return {k: v.torsion for k, v in self.entries.items() if v.torsion}

    @property
    def total_rank(self) -> int:
        return sum(v.rank for v in self.entries.values())

    def delta_ranks(self, f_weight: int, u_weight: int) -> Dict[int, int]:
        """Free ranks regrouped by ``f_weight * f + u_weight * u``."""
        out: Dict[int, int] = defaultdict(int)
        for (u, f), e in self.entries.items():
            if e.rank:
                out[f_weight * f + u_weight * u] += e.rank
        return dict(sorted(out.items()))

    def reflect(self) -> "HomologyTable":
        return HomologyTable({(-u, -f): e for (u, f), e in self.entries.items()},
                             self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, HomologyTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        body = ", ".join(f"{k}: {v.rank}{'+T' + str(v.torsion) if v.torsion else ''}"
                         for k, v in sorted(self.entries.items()))
        return f"HomologyTable({{{body}}}, {self.coefficients})"

    def to_records(self, f_name: str = "f") -> List[dict]:
        return [{"u": u, f_name: f, "rank": e.rank, "torsion": list(e.torsion)}
                for (u, f), e in sorted(self.entries.items())]


@dataclass
class SpectralPages:
    """Ranks of the pages of the filtration spectral sequence.

    ``pages[0]`` is page 1 (the chain groups of the associated graded
    complex); ``pages[i]`` is page ``i + 1``. ``survivors`` are the
    bigradings of basis elements of the final page.
    """
    pages: List[HomologyTable]
    survivors: List[Bigrading]
    differentials: Dict[int, List[Tuple[Bigrading, Bigrading]]] = field(default_factory=dict)

    def page(self, i: int) -> HomologyTable:
        return self.pages[min(i, len(self.pages)) - 1]

    @property
    def e_infinity(self) -> HomologyTable:
        return self.pages[-1]


class BigradedComplex:
    """Finite free complex with homogeneous generators.

    ``differential[i]`` maps generator index ``i`` to ``{j: coeff}``.
    Coefficients are ints (or Fractions for rational models).
    """

    def __init__(self, generators: Sequence[GradedGenerator],
                 differential: Mapping[int, Mapping[int, object]] | None = None,
                 d_degree: int = -1, upward: bool = False, validate: bool = True):
        if d_degree not in (-1, 1):
            raise ComplexError("d_degree must be +1 or -1")
        self.generators = tuple(generators)
        self.d_degree = d_degree
        self.upward = upward
        self.differential: Dict[int, Dict[int, object]] = {}
        for i, row in (differential or {}).items():
            r = {j: c for j, c in row.items() if c}
            if r:
                self.differential[i] = r
        if validate:
            self.validate()

    def __len__(self):
        return len(self.generators)

    def drop(self, i: int, j: int) -> int:
        """Filtration drop of an entry ``i -> j`` (nonnegative when filtered)."""
        df = self.generators[j].f - self.generators[i].f
        return df if self.upward else -df

    def validate(self, modulus: Optional[int] = None) -> None:
        ids = [g.id for g in self.generators]
        if len(set(ids)) != len(ids):
            raise ComplexError("generator ids are not unique")
        n = len(self.generators)
        for i, row in self.differential.items():
            gi = self.generators[i]
            for j in row:
                if not 0 <= j < n:
                    raise ComplexError(f"differential target {j} out of range")
                gj = self.generators[j]
                if gj.u - gi.u != self.d_degree:
                    raise ComplexError(f"d does not shift u by {self.d_degree}: {gi} -> {gj}")
                if self.drop(i, j) < 0:
                    raise ComplexError(f"d violates the filtration: {gi} -> {gj}")
        sq = self.d_squared(modulus)
        if sq:
            raise ComplexError(f"d^2 != 0 (e.g. entry {next(iter(sq.items()))})")

    def d_squared(self, modulus: Optional[int] = None) -> Dict[Tuple[int, int], object]:
        out: Dict[Tuple[int, int], object] = {}
        for i, row in self.differential.items():
            acc: Dict[int, object] = defaultdict(int)
            for j, c in row.items():
                for k, c2 in self.differential.get(j, {}).items():
                    acc[k] += c * c2
            for k, v in acc.items():
                if modulus:
                    v %= modulus
                if v:
                    out[(i, k)] = v
        return out

    def layers(self) -> Dict[int, Dict[int, Dict[int, object]]]:
        """Split d into homogeneous pieces ``d_n`` by filtration drop."""
        out: Dict[int, Dict[int, Dict[int, object]]] = defaultdict(lambda: defaultdict(dict))
        for i, row in self.differential.items():
            for j, c in row.items():
                out[self.drop(i, j)][i][j] = c
        return {n: {i: dict(r) for i, r in m.items()} for n, m in sorted(out.items())}

    def generator_counts(self) -> Dict[Bigrading, int]:
        return dict(Counter((g.u, g.f) for g in self.generators))

    def with_differential(self, differential, validate: bool = True) -> "BigradedComplex":
        return BigradedComplex(self.generators, differential, self.d_degree, self.upward, validate)

    def __repr__(self):
        return (f"BigradedComplex({len(self.generators)} generators, "
                f"{sum(len(r) for r in self.differential.values())} entries, "
                f"d_degree={self.d_degree}, upward={self.upward})")


# -- homology -------------------------------------------------------------

def _matrix_rank(rows: Dict[int, Dict[int, object]], kind: str, p: Optional[int]) -> int:
    if not rows:
        return 0
    if kind == "Zp":
        return rank_mod_p(rows, p)
    if kind == "Z":
        return smith_normal_form(rows)[1]
    return rank_rational(rows)


def _graded_pieces(C: BigradedComplex, layer0_only: bool):
    """Group generator indices by (u, f) or by u alone."""
    groups: Dict[object, List[int]] = defaultdict(list)
    for i, g in enumerate(C.generators):
        groups[(g.u, g.f) if layer0_only else g.u].append(i)
    return groups


def _homology_of_pieces(C: BigradedComplex, kind: str, p: Optional[int], bigraded: bool):
    groups = _graded_pieces(C, bigraded)
    # boundary maps out of each group, as row dicts restricted to the target group
    out_rank: Dict[object, int] = {}
    incoming: Dict[object, Dict[int, Dict[int, object]]] = defaultdict(dict)
    for key, idxs in groups.items():
        rows: Dict[int, Dict[int, object]] = {}
        for i in idxs:
            row = C.differential.get(i)
            if not row:
                continue
            g = C.generators[i]
            r = {}
            for j, c in row.items():
                if bigraded and C.generators[j].f != g.f:
                    continue
                if kind == "Zp":
                    c = c % p
                if c:
                    r[j] = c
            if r:
                rows[i] = r
        tgt = (g_u_shift(key, C.d_degree, bigraded))
        if rows:
            incoming[tgt] = rows
        out_rank[key] = _matrix_rank(rows, kind, p)
    entries: Dict[object, HomologyEntry] = {}
    for key, idxs in groups.items():
        inc = incoming.get(key, {})
        if kind == "Z" and inc:
            divisors, r_in = smith_normal_form(inc)
            tors = tuple(d for d in divisors if d > 1)
        else:
            r_in = _matrix_rank(inc, kind, p)
            tors = ()
        rank = len(idxs) - out_rank[key] - r_in
        if rank < 0:
            raise ComplexError("negative homology rank; d^2 != 0?")
        entries[key] = HomologyEntry(rank, tors)
    return entries


def g_u_shift(key, d_degree: int, bigraded: bool):
    if bigraded:
        u, f = key
        return (u + d_degree, f)
    return key + d_degree


def homology(C: BigradedComplex, coefficients: Coefficients = "Q") -> HomologyTable:
    """Homology of the associated graded complex, per bigrading (u, f).

    Only the filtration-preserving layer of the differential is used, so
    for a complex whose differential preserves ``f`` (such as the
    undeformed Khovanov complex) this is the honest bigraded homology.
    Over ``Z`` torsion is read off the Smith normal form of the incoming
    boundary map.
    """
    kind, p = parse_coefficients(coefficients)
    entries = _homology_of_pieces(C, kind, p, bigraded=True)
    label = {"Q": "Q", "Z": "Z", "Zp": f"Z/{p}"}[kind]
    return HomologyTable(entries, label)


def total_homology(C: BigradedComplex, coefficients: Coefficients = "Q") -> Dict[int, HomologyEntry]:
    """Homology of the full differential, graded by ``u`` only."""
    kind, p = parse_coefficients(coefficients)
    entries = _homology_of_pieces(C, kind, p, bigraded=False)
    return {u: e for u, e in sorted(entries.items()) if e.rank or e.torsion}


# -- filtered reduction ---------------------------------------------------

class _Field:
    def __init__(self, kind: str, p: Optional[int]):
        if kind == "Z":
            raise ValueError("filtered reduction needs field coefficients (Q or Z/p)")
        self.kind, self.p = kind, p

    def norm(self, c):
        if self.kind == "Zp":
            return int(c) % self.p
        return Fraction(c)

    def inv(self, c):
        if self.kind == "Zp":
            return pow(int(c), self.p - 2, self.p)
        return 1 / Fraction(c)

    def out(self, c):
        if self.kind == "Q" and isinstance(c, Fraction) and c.denominator == 1:
            return int(c)
        return c


def filtered_reduce(C: BigradedComplex, coefficients: Coefficients = "Q"
                    ) -> Tuple[BigradedComplex, SpectralPages]:
    """Cancel the differential layer by layer (filtered Gaussian elimination).

    Entries of the smallest filtration drop are cancelled first. After
    the drop-0 layer is exhausted the remaining complex is a filtered
    model of ``C`` with vanishing filtration-preserving differential; it
    is returned together with the ranks of every page and the bigradings
    of the surviving generators.
    """
    kind, p = parse_coefficients(coefficients)
    F = _Field(kind, p)
    gens = list(C.generators)
    out: Dict[int, Dict[int, object]] = defaultdict(dict)
    inc: Dict[int, Dict[int, object]] = defaultdict(dict)
    buckets: Dict[int, set] = defaultdict(set)
    for i, row in C.differential.items():
        for j, c in row.items():
            c = F.norm(c)
            if c:
                out[i][j] = c
                inc[j][i] = c
                buckets[C.drop(i, j)].add((i, j))
    alive = set(range(len(gens)))

    def snapshot() -> HomologyTable:
        return HomologyTable.from_ranks(Counter((gens[i].u, gens[i].f) for i in alive),
                                        {"Q": "Q", "Zp": f"Z/{p}"}[kind])

    pages = [snapshot()]
    differentials: Dict[int, List[Tuple[Bigrading, Bigrading]]] = {}
    model = None
    max_drop = max(buckets) if buckets else 0
    n = 0
    while True:
        if n > max_drop and not any(buckets.values()):
            break
        bucket = buckets.get(n, set())
        cancelled: List[Tuple[Bigrading, Bigrading]] = []
        while bucket:
            x, y = bucket.pop()
            c = out.get(x, {}).get(y)
            if c is None:
                continue
            cancelled.append(((gens[x].u, gens[x].f), (gens[y].u, gens[y].f)))
            cinv = F.inv(c)
            srcs = [(s, v) for s, v in inc[y].items() if s != x]
            tgts = [(t, v) for t, v in out[x].items() if t != y]
            for s, a in srcs:
                row = out[s]
                for t, b in tgts:
                    nv = F.norm(row.get(t, 0) - a * cinv * b)
                    if nv:
                        row[t] = nv
                        inc[t][s] = nv
                        drop = C.drop(s, t)
                        buckets[drop].add((s, t))
                        max_drop = max(max_drop, drop)
                    elif t in row:
                        del row[t]
                        del inc[t][s]
            for z in (x, y):
                for t in list(out.get(z, {})):
                    inc[t].pop(z, None)
                for s in list(inc.get(z, {})):
                    out[s].pop(z, None)
                out.pop(z, None)
                inc.pop(z, None)
                alive.discard(z)
        if cancelled:
            differentials[n + 1] = cancelled
        if n == 0:
            keep = sorted(alive)
            index = {old: new for new, old in enumerate(keep)}
            diff = {index[i]: {index[j]: F.out(c) for j, c in out.get(i, {}).items()}
                    for i in keep if out.get(i)}
            model = BigradedComplex([gens[i] for i in keep], diff, C.d_degree, C.upward,
                                    validate=False)
        pages.append(snapshot())
        n += 1
    if model is None:
        model = C
    # collapse repeated trailing pages while keeping page 2 explicit
    while len(pages) > 2 and pages[-1] == pages[-2]:
        pages.pop()
    survivors = sorted((gens[i].u, gens[i].f) for i in alive)
    return model, SpectralPages(pages, survivors, differentials)


# -- generating functions ---------------------------------------------------

def filtered_euler_characteristic(C: BigradedComplex, variable: str = "f") -> LaurentPolynomial:
    """Sum over generators of ``(-1)^u * variable^f``."""
    terms: Dict[Tuple[int], int] = defaultdict(int)
    for g in C.generators:
        terms[(g.f,)] += -1 if g.u % 2 else 1
    return LaurentPolynomial(terms, (variable,))


def table_euler_characteristic(T: HomologyTable, variable: str = "f") -> LaurentPolynomial:
    terms: Dict[Tuple[int], int] = defaultdict(int)
    for (u, f), e in T.entries.items():
        terms[(f,)] += (-1 if u % 2 else 1) * e.rank
    return LaurentPolynomial(terms, (variable,))


def poincare_polynomial(T: HomologyTable, variables: Sequence[str] = ("f", "u")) -> LaurentPolynomial:
    """Sum of ``rank * f^f u^u`` over free ranks; exponents ordered (f, u)."""
    return LaurentPolynomial({(f, u): e.rank for (u, f), e in T.entries.items() if e.rank},
                             tuple(variables))


def complex_from_table(T: HomologyTable | Mapping[Bigrading, int], d_degree: int = -1,
                       upward: bool = False) -> BigradedComplex:
    """Complex with trivial differential realizing a table of ranks."""
    ranks = T.ranks() if isinstance(T, HomologyTable) else dict(T)
    gens = []
    for (u, f), r in sorted(ranks.items()):
        for k in range(r):
            gens.append(GradedGenerator((u, f, k), u, f))
    return BigradedComplex(gens, {}, d_degree, upward)


def table_from_polynomial(P: LaurentPolynomial) -> HomologyTable:
    """Inverse of ``poincare_polynomial`` for nonnegative coefficients."""
    ranks = {}
    for (f, u), c in P.terms.items():
        if c < 0:
            raise ValueError("Poincaré polynomials have nonnegative coefficients")
        ranks[(u, f)] = c
    return HomologyTable.from_ranks(ranks)


def iter_bigradings(T: HomologyTable) -> Iterable[Bigrading]:
    return iter(sorted(T.entries))
