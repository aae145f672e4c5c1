"""Command-line interface: one JSON document per invocation.

Exit codes: 0 success, 2 unparseable or rejected input, 3 a violated
invariant or internal consistency check, 4 a resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__, reference
from .algebra import (ComplexError, HomologyTable, LaurentPolynomial, parse_polynomial,
                      poincare_polynomial, table_euler_characteristic)
from .corpus import CORPUS, load
from .diagram import (DiagramError, OneOneError, PlanarDiagram, braid_closure, mirror,
                      parse_pd, pretzel_diagram, relabel, serialize_pd, torus_braid_diagram)
from .fkcheck import delta_thin, property_fk
from .hfk import HFKTable, StaircaseError, hfk_table, staircase_from_alexander
from .invariants import alexander_fox, determinant, jones, signature, torus_alexander
from .khovanov import ResourceLimit, default_jobs, delta_view, khovanov_homology, s_invariant

SCHEMA = 1
EXIT_PARSE, EXIT_INVARIANT, EXIT_RESOURCE = 2, 3, 4

CONVENTIONS = {
    "pd": "X[a,b,c,d] lists arcs counterclockwise from the incoming under-strand",
    "khovanov": "bigrading (u, q); the differential raises u; Z-torsion is reported in the "
                "degree where the cokernel lives; Kh_r(unknot) sits at q = 0",
    "hfk": "bigrading (M, A) written t^A u^M; δ = A - M; coefficients Z/2",
    "delta_khovanov": "δ = q - 2u",
}

GOLDEN_SECTIONS = ("one_one_table", "one_one_blocks", "hfk_polynomials", "khovanov_examples")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- serialization ---------------------------------------------------------------

def poly_doc(P: LaurentPolynomial) -> dict:
    return {"text": str(P), "terms": P.to_dict(), "variables": list(P.variables)}


def table_doc(T: HomologyTable, f_name: str = "q", variables=("q", "u")) -> dict:
    torsion = [{"u": u, f_name: f, "orders": list(o)} for (u, f), o in sorted(T.torsion().items())]
    return {
        "coefficients": T.coefficients,
        "entries": T.to_records(f_name),
        "poincare": poly_doc(poincare_polynomial(T, variables)),
        "total_rank": T.total_rank,
        "torsion": torsion,
    }


def hfk_doc(H: HFKTable, with_delta: bool = True) -> dict:
    out = {
        "table": table_doc(H.table, "A", ("t", "u")),
        "rank": H.total_rank,
        "tau": H.tau,
        "euler": poly_doc(H.euler()),
    }
    if H.params is not None:
        out["params"] = list(_astuple(H.params))
        out["mirror"] = H.mirror
    if with_delta:
        out["delta"] = poly_doc(H.delta_polynomial())
    return out


def _astuple(P) -> tuple:
    return (P.p, P.q, P.r, P.s)


def dumps(doc: dict, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, separators=(",", ":")) + "\n"


# -- inputs ------------------------------------------------------------------------

def _add_diagram_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_argument_group("diagram input (one of)")
    g.add_argument("--pd", metavar="FILE", help="PD file, or - for standard input")
    g.add_argument("--pd-text", metavar="TEXT", help="PD code given inline")
    g.add_argument("--knot", choices=sorted(CORPUS), help="bundled diagram")
    g.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"), help="torus knot braid closure")
    g.add_argument("--pretzel", nargs="+", type=int, metavar="N", help="pretzel twists")
    g.add_argument("--braid", metavar="WORD", help="braid word such as '1,1,-2'")
    g.add_argument("--strands", type=int, help="number of strands for --braid")
    g.add_argument("--mirror", action="store_true", help="mirror the diagram")
    p.set_defaults(_diagram_required=required)


def _add_limits(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", choices=("scan", "cube"), default="scan")
    p.add_argument("--max-crossings", type=int, default=16,
                   help="refuse Khovanov computations on larger diagrams (default 16)")
    p.add_argument("--max-objects", type=int, default=None, metavar="N",
                   help="memory ceiling: largest intermediate complex allowed")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes for q-columns (default: $KHFK_JOBS or 1)")


def read_diagram(args) -> Optional[PlanarDiagram]:
    given = [k for k in ("pd", "pd_text", "knot", "torus", "pretzel", "braid")
             if getattr(args, k, None) is not None]
    if len(given) > 1:
        raise UsageError(f"conflicting diagram inputs: {', '.join(given)}")
    if not given:
        if args._diagram_required:
            raise UsageError("no diagram given (use --pd, --pd-text, --knot, --torus, --pretzel "
                             "or --braid)")
        return None
    kind = given[0]
    if kind == "pd":
        text = sys.stdin.read() if args.pd == "-" else _read_file(args.pd)
        D = parse_pd(text)
    elif kind == "pd_text":
        D = parse_pd(args.pd_text)
    elif kind == "knot":
        D = load(args.knot)
    elif kind == "torus":
        p, q = args.torus
        D = relabel(torus_braid_diagram(p, q))
    elif kind == "pretzel":
        D = relabel(pretzel_diagram(*args.pretzel))
    else:
        try:
            word = [int(x) for x in args.braid.replace(",", " ").split()]
        except ValueError:
            raise UsageError(f"bad braid word {args.braid!r}")
        strands = args.strands or (max(abs(x) for x in word) + 1 if word else 1)
        D = relabel(braid_closure(word, strands))
    return mirror(D) if args.mirror else D


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")


def diagram_echo(D: PlanarDiagram, args) -> dict:
    src = next((k for k in ("pd", "pd_text", "knot", "torus", "pretzel", "braid")
                if getattr(args, k, None) is not None), None)
    echo = {"source": src, "pd": serialize_pd(D).strip(), "crossings": D.n_crossings,
            "components": D.n_components, "writhe": D.writhe}
    if src in ("torus", "pretzel"):
        echo[src] = list(getattr(args, src))
    elif src == "knot":
        echo["knot"] = args.knot
    if getattr(args, "mirror", False):
        echo["mirror"] = True
    return echo


def _jobs(args) -> int:
    return default_jobs() if args.jobs is None else max(1, args.jobs)


# -- commands ----------------------------------------------------------------------

def cmd_kh(args, reduced: bool):
    D = read_diagram(args)
    integral = args.integral if args.coeff.upper() in ("Z", "ZZ") else None
    T = khovanov_homology(D, reduced, args.coeff, marked=getattr(args, "marked", None),
                          method=args.method, jobs=_jobs(args), max_crossings=args.max_crossings,
                          integral=integral or "snf", primes=args.primes,
                          max_objects=args.max_objects)
    result = table_doc(T)
    if D.is_knot():
        result["delta"] = {str(k): v for k, v in delta_view(T, reduced).items()}
    inp = diagram_echo(D, args)
    inp.update(coefficients=T.coefficients, method=args.method, reduced=reduced)
    meta = {"coefficient_path": _path_label(T.coefficients, integral, args.primes)}
    return inp, result, meta


def _path_label(coeff: str, integral: Optional[str], primes) -> str:
    if coeff != "Z":
        return "field"
    if integral == "ucf":
        return "ucf:" + ",".join(str(p) for p in primes)
    return "snf"


def cmd_s(args):
    D = read_diagram(args)
    s = s_invariant(D, args.method, args.max_crossings, args.max_objects)
    return diagram_echo(D, args), {"s": s}, {}


def cmd_jones(args):
    D = read_diagram(args)
    res = {"unreduced": poly_doc(jones(D))}
    if D.n_components >= 1:
        res["reduced"] = poly_doc(jones(D, reduced=True))
    return diagram_echo(D, args), res, {}


def cmd_alex(args):
    D = read_diagram(args)
    return diagram_echo(D, args), {"alexander": poly_doc(alexander_fox(D))}, {}


def cmd_sig(args):
    D = read_diagram(args)
    return diagram_echo(D, args), {"signature": signature(D)}, {}


def cmd_det(args):
    D = read_diagram(args)
    return diagram_echo(D, args), {"determinant": determinant(D)}, {}


def _one_one_input(args) -> dict:
    return {"params": [args.p, args.q, args.r, args.s], "mirror": bool(args.mirror)}


def cmd_hfk11(args):
    H = hfk_table((args.p, args.q, args.r, args.s), args.mirror)
    return _one_one_input(args), hfk_doc(H, args.delta), {}


def _staircase_input(args):
    if args.torus is not None:
        p, q = args.torus
        return {"torus": [p, q]}, staircase_from_alexander(torus_alexander(p, q))
    if args.alexander is not None:
        return ({"alexander": args.alexander},
                staircase_from_alexander(parse_polynomial(args.alexander, ("t",))))
    raise UsageError("give --torus P Q or --alexander POLY")


def cmd_staircase(args):
    inp, H = _staircase_input(args)
    return inp, hfk_doc(H), {}


def cmd_tau(args):
    if args.p is not None:
        if None in (args.q, args.r, args.s):
            raise UsageError("-p needs -q, -r and -s as well")
        H = hfk_table((args.p, args.q, args.r, args.s), args.mirror)
        return _one_one_input(args), {"tau": H.tau}, {}
    inp, H = _staircase_input(args)
    return inp, {"tau": H.tau}, {}


def _hfk_for(D: PlanarDiagram, args):
    if args.hfk11 is not None:
        return hfk_table(tuple(args.hfk11), args.hfk_mirror), f"(1,1) K{tuple(args.hfk11)}"
    if args.lspace:
        return staircase_from_alexander(alexander_fox(D)), "staircase from the Alexander polynomial"
    if args.torus is not None:
        p, q = args.torus
        return staircase_from_alexander(torus_alexander(p, q)), f"staircase of T({p},{q})"
    if args.knot is not None and not args.mirror:
        e = CORPUS[args.knot]
        if e.one_one is not None:
            P = e.one_one
            return hfk_table(P, e.one_one_mirror), f"(1,1) K{P}" + (" mirrored" if e.one_one_mirror else "")
        if e.torus is not None:
            return staircase_from_alexander(torus_alexander(*e.torus)), f"staircase of T{e.torus}"
    raise UsageError("no knot Floer source: give --hfk11 P Q R S or --lspace")


def cmd_fk(args):
    D = read_diagram(args)
    if not D.is_knot():
        raise DiagramError("property FK is stated for knots")
    H, hsrc = _hfk_for(D, args)
    alex = alexander_fox(D)
    if H.euler() != alex and H.euler() != -alex:
        raise AssertionError(f"HFK Euler characteristic {H.euler()} differs from the diagram's "
                             f"Alexander polynomial {alex}: not the same knot")
    khr = khovanov_homology(D, True, "Q", method=args.method, jobs=_jobs(args),
                            max_crossings=args.max_crossings, max_objects=args.max_objects)
    s = s_invariant(D, args.method, args.max_crossings, args.max_objects)
    R = property_fk(H, khr, s, H.tau, {"hfk": hsrc, "khr": f"{args.method} over Q",
                                       "s": "Lee spectral sequence over Q"})
    sig = signature(D)
    res = R.to_dict()
    res.update(
        hfk_rank=H.total_rank, khr_rank=khr.total_rank, s=s, tau=H.tau, signature=sig,
        hfk_thin=_thin_doc(delta_thin(H, "HFK", sig)),
        kh_thin=_thin_doc(delta_thin(khr, "Kh", sig)),
    )
    return diagram_echo(D, args), res, {}


def _thin_doc(r) -> dict:
    return {"thin": r.thin, "delta": r.delta, "matches_signature": r.matches_signature,
            "buckets": {str(k): v for k, v in r.buckets.items()}}


# -- reference tables -----------------------------------------------------------------

def _name(params) -> str:
    return "K(" + ",".join(str(x) for x in params) + ")"


def _symmetric_coeffs(P: LaurentPolynomial) -> List[int]:
    top = P.degree_range()[1]
    return [P.coefficient((k,)) for k in range(0, top + 1)]


def section_one_one_table() -> dict:
    rows = []
    for row in reference.ONE_ONE_TABLE:
        fix = reference.CORRECTIONS.get(_name(row.params))
        params = fix.params if fix and fix.params else row.params
        H = hfk_table(params)
        printed = row.delta_polynomial()
        computed = H.delta_polynomial()
        alex = H.euler()
        entry = {
            "printed": {"params": list(row.params), "knotscape": row.knotscape,
                        "alexander": list(row.alexander), "delta": row.delta, "tau": row.tau},
            "computed": {"params": list(params), "rank": H.total_rank, "tau": H.tau,
                         "delta": poly_doc(computed), "alexander": _symmetric_coeffs(alex)},
            "agrees": {
                "delta": computed == printed,
                "tau": H.tau == row.tau,
                "alexander": alex in (row.alexander_polynomial(), -row.alexander_polynomial()),
                "rank": H.total_rank == params[0],
            },
        }
        if fix:
            entry["correction"] = {"reason": fix.reason}
            if fix.delta:
                entry["correction"]["delta"] = fix.delta
                entry["agrees"]["corrected_delta"] = computed == parse_polynomial(fix.delta, ("δ",))
            if fix.alexander:
                entry["correction"]["alexander"] = list(fix.alexander)
                entry["agrees"]["corrected_alexander"] = _symmetric_coeffs(alex) == list(fix.alexander)
        rows.append(entry)
    return {"rows": rows}


def section_one_one_blocks() -> dict:
    out = []
    for b in reference.ONE_ONE_BLOCKS:
        H = hfk_table(b.params)
        P = H.poincare()
        fix = reference.CORRECTIONS.get(_name(b.params) + " HFK")
        entry = {
            "params": list(b.params),
            "computed": {"hfk": poly_doc(P), "rank": H.total_rank, "tau": H.tau},
            "printed": {"hfk": b.hfk, "rank_hfk": b.rank_hfk, "tau": b.tau},
            "annotations": {"khr": b.khr, "rank_khr": b.rank_khr, "khr_torsion": b.khr_torsion,
                            "s": b.s},
            "agrees": {"hfk": P == reference.poly(b.hfk), "rank": H.total_rank == b.rank_hfk,
                       "tau": H.tau == b.tau},
        }
        if fix:
            entry["correction"] = {"reason": fix.reason, "hfk": fix.value}
            entry["agrees"]["corrected_hfk"] = P == reference.poly(fix.value)
        out.append(entry)
    return {"knots": out}


def section_hfk_polynomials() -> dict:
    out = []
    for (p, q), text in reference.HFK_POLYNOMIALS.items():
        H = staircase_from_alexander(torus_alexander(p, q))
        P = H.poincare()
        entry = {"torus": [p, q], "computed": {"hfk": poly_doc(P), "rank": H.total_rank,
                                               "tau": H.tau},
                 "printed": text, "agrees": {"hfk": P == reference.poly(text)}}
        fix = reference.CORRECTIONS.get(f"T({p},{q}) HFK")
        if fix:
            entry["correction"] = {"reason": fix.reason, "hfk": fix.value}
            entry["agrees"]["corrected_hfk"] = P == reference.poly(fix.value)
        out.append(entry)
    return {"knots": out}


def section_khovanov_examples() -> dict:
    out = []
    for (name, theory, coeff), text in reference.KH_EXAMPLES.items():
        T = khovanov_homology(load(name), theory == "Kh_r", coeff, jobs=1)
        P = poincare_polynomial(T, ("q", "u"))
        out.append({"knot": name, "theory": theory, "coefficients": coeff,
                    "computed": poly_doc(P), "printed": text,
                    "agrees": P == reference.poly(text, ("q", "u"))})
    Z = khovanov_homology(load("trefoil"), False, "Z", jobs=1)
    out.append({"knot": "trefoil", "theory": "Kh", "coefficients": "Z",
                "computed": table_doc(Z)})
    return {"examples": out}


SECTIONS: Dict[str, Callable[[], dict]] = {
    "one_one_table": section_one_one_table,
    "one_one_blocks": section_one_one_blocks,
    "hfk_polynomials": section_hfk_polynomials,
    "khovanov_examples": section_khovanov_examples,
}


def golden_text(section: str) -> str:
    return dumps({"schema": SCHEMA, "section": section, "result": SECTIONS[section]()}, True)


def cmd_paper_tables(args):
    names = args.section or list(GOLDEN_SECTIONS)
    texts = {n: golden_text(n) for n in names}
    result = {n: json.loads(t)["result"] for n, t in texts.items()}
    meta: dict = {}
    if args.out:
        d = Path(args.out)
        d.mkdir(parents=True, exist_ok=True)
        for n, t in texts.items():
            (d / f"{n}.json").write_text(t, encoding="utf-8")
        meta["written"] = sorted(str(d / f"{n}.json") for n in names)
    if args.check:
        d = Path(args.check)
        diffs = [n for n, t in texts.items()
                 if not (d / f"{n}.json").exists()
                 or (d / f"{n}.json").read_text(encoding="utf-8") != t]
        meta["golden_diffs"] = diffs
        if diffs:
            raise AssertionError(f"golden files differ: {', '.join(diffs)}")
    return {"sections": names}, result, meta


# -- selftest ----------------------------------------------------------------------

def cmd_selftest(args):
    checks = []
    failed = 0
    for name, e in sorted(CORPUS.items()):
        D = e.diagram()
        rec: dict = {"knot": name}
        if D.n_crossings <= args.max_crossings:
            kh = khovanov_homology(D, False, "Q", jobs=_jobs(args), max_crossings=args.max_crossings)
            khr = khovanov_homology(D, True, "Q", jobs=1, max_crossings=args.max_crossings)
            rec["jones_kh"] = table_euler_characteristic(kh, "q") == jones(D)
            rec["jones_khr"] = table_euler_characteristic(khr, "q") == jones(D, reduced=True)
        else:
            rec["skipped"] = f"{D.n_crossings} crossings above --max-crossings"
        if D.is_knot():
            H = None
            if e.one_one is not None:
                H = hfk_table(e.one_one, e.one_one_mirror)
            elif e.torus is not None:
                H = staircase_from_alexander(torus_alexander(*e.torus))
            if H is not None:
                alex = alexander_fox(D)
                rec["alexander_hfk"] = H.euler() in (alex, -alex)
        ok = all(v for k, v in rec.items() if isinstance(v, bool))
        rec["ok"] = ok
        failed += not ok
        checks.append(rec)
    result = {"checks": checks, "failed": failed}
    if failed:
        raise _Failure(result)
    return {"corpus": sorted(CORPUS)}, result, {}


class _Failure(AssertionError):
    def __init__(self, result: dict):
        super().__init__("self-test mismatch")
        self.result = result


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="khfk", description="Khovanov and knot Floer homology of knots.")
    ap.add_argument("--version", action="version", version=f"khfk {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_, fn, diagram=True, limits=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--pretty", action="store_true", help="indented output")
        if diagram:
            _add_diagram_args(p)
        if limits:
            _add_limits(p)
        p.set_defaults(_fn=fn)
        return p

    for name, reduced in (("kh", False), ("khr", True)):
        p = add(name, "reduced Khovanov homology" if reduced else "Khovanov homology",
                lambda a, r=reduced: cmd_kh(a, r), limits=True)
        p.add_argument("--coeff", default="Q", help="Q, Z or Z/p (default Q)")
        p.add_argument("--integral", choices=("snf", "ucf"), default="snf",
                       help="over Z: Smith normal form or universal coefficients")
        p.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5],
                       help="primes probed by --integral ucf")
        if reduced:
            p.add_argument("--marked", type=int, help="marked arc (default: lowest label)")
    add("s", "Rasmussen s-invariant", cmd_s, limits=True)
    add("jones", "Jones polynomial in q (V(q^2), and (q+q^-1)V(q^2))", cmd_jones)
    add("alex", "Alexander polynomial (Fox calculus)", cmd_alex)
    add("sig", "signature (Goeritz matrix)", cmd_sig)
    add("det", "determinant", cmd_det)

    for name, fn in (("hfk11", cmd_hfk11), ("tau", cmd_tau)):
        p = add(name, "knot Floer homology of K(p,q,r,s)" if name == "hfk11" else "tau",
                fn, diagram=False)
        p.add_argument("-p", type=int, required=name == "hfk11")
        p.add_argument("-q", type=int, required=name == "hfk11")
        p.add_argument("-r", type=int, required=name == "hfk11")
        p.add_argument("-s", type=int, required=name == "hfk11")
        p.add_argument("--mirror", action="store_true")
        if name == "hfk11":
            p.add_argument("--delta", action="store_true", help="include the δ-graded polynomial")
        else:
            p.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
            p.add_argument("--alexander", metavar="POLY")
    p = add("staircase", "HFK of an L-space knot from its Alexander polynomial", cmd_staircase,
            diagram=False)
    p.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
    p.add_argument("--alexander", metavar="POLY", help="for example 't - 1 + t^{-1}'")

    p = add("fk-check", "compare HFK and Kh_r (property FK)", cmd_fk, limits=True)
    p.add_argument("--hfk11", nargs=4, type=int, metavar=("P", "Q", "R", "S"),
                   help="(1,1) parameters describing the same knot")
    p.add_argument("--hfk-mirror", action="store_true", help="mirror the (1,1) diagram")
    p.add_argument("--lspace", action="store_true",
                   help="take HFK from the staircase of the Alexander polynomial")

    p = add("paper-tables", "regenerate the reference tables", cmd_paper_tables, diagram=False)
    p.add_argument("--section", action="append", choices=GOLDEN_SECTIONS)
    p.add_argument("--out", metavar="DIR", help="write one golden file per section")
    p.add_argument("--check", metavar="DIR", help="compare against golden files")

    p = add("selftest", "Euler-characteristic checks over the bundled corpus", cmd_selftest,
            diagram=False)
    p.add_argument("--max-crossings", type=int, default=16)
    p.add_argument("--jobs", type=int, default=None)
    return ap


def _error_doc(command, kind: str, exc: BaseException) -> dict:
    return {"schema": SCHEMA, "command": command,
            "error": {"kind": kind, "type": type(exc).__name__, "message": str(exc)}}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    command = None
    pretty = False
    try:
        args = parser.parse_args(argv)
        command = args.command
        pretty = getattr(args, "pretty", False)
        if command is None:
            raise UsageError("no subcommand given")
        start = time.perf_counter()
        inp, result, meta = args._fn(args)
        doc = {"schema": SCHEMA, "command": command, "input": inp, "result": result,
               "conventions": CONVENTIONS}
        if command != "paper-tables":
            meta["seconds"] = round(time.perf_counter() - start, 3)
        doc["meta"] = meta
        out.write(dumps(doc, pretty))
        return 0
    except _Failure as e:
        doc = _error_doc(command, "invariant", e)
        doc["result"] = e.result
        out.write(dumps(doc, pretty))
        return EXIT_INVARIANT
    except ResourceLimit as e:
        out.write(dumps(_error_doc(command, "resource", e), pretty))
        return EXIT_RESOURCE
    except MemoryError as e:
        out.write(dumps(_error_doc(command, "resource", e), pretty))
        return EXIT_RESOURCE
    except (UsageError, DiagramError, OneOneError, StaircaseError, KeyError) as e:
        out.write(dumps(_error_doc(command, "parse", e), pretty))
        return EXIT_PARSE
    except (AssertionError, ComplexError) as e:
        out.write(dumps(_error_doc(command, "invariant", e), pretty))
        return EXIT_INVARIANT
    except ValueError as e:
        out.write(dumps(_error_doc(command, "parse", e), pretty))
        return EXIT_PARSE


def main() -> None:
    sys.exit(run())
