"""Command-line front end.

Every command builds a plain document of strings, integers and booleans; the
text and JSON renderings are both produced from that document so they always
agree.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .adelic import bound_corrected, bound_mainthm, kb_bound, positivity_predicate, require_primitive
from .algebra import AS_WRITTEN, COLLAPSED, INF, collapse, format_rational, format_system, parse_system
from .concave import from_lifted_points
from .equality import equality_certificate
from .errors import (
    CommonComponent,
    InvalidInput,
    NotPrimitive,
    ParseError,
    RootBoundError,
    UnsupportedDimension,
)
from .mixed import mixed_integral_dec, mixed_integral_def, mixed_integral_mv, mixed_integral_terms
from .oracle import count_roots_n1
from .polytope import set_max_dim

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_DIMENSION = 4


def _q(x) -> str:
    return format_rational(Fraction(x))


# --------------------------------------------------------------------------
# document builders


def _bound_doc(system, presentation, check_all_routes):
    try:
        report = bound_mainthm(system, presentation, check_all_routes=check_all_routes)
    except NotPrimitive:
        report = bound_corrected(system, presentation, check_all_routes=check_all_routes)
    return {
        "presentation": report.presentation,
        "places": [{"factor": str(c.factor), "degree": c.degree, "mi": _q(c.mi)} for c in report.places],
        "mi_infinity": _q(report.mi_infinity),
        "correction": _q(report.correction),
        "bound": _q(report.bound),
    }


def _equality_doc(system):
    try:
        require_primitive(system)
    except NotPrimitive as exc:
        return {"verdict": "inconclusive", "obstructions": [str(exc)], "initial_systems": []}
    cert = equality_certificate(system)
    listed = [
        {"place": str(init.place) if init.place is not INF else "inf",
         "tau": [_q(x) for x in init.tau],
         "system": str(init)}
        for init in cert.initial_systems
    ]
    return {"verdict": cert.verdict, "obstructions": list(cert.obstructions), "initial_systems": listed}


def _oracle_doc(system):
    res = count_roots_n1(system)
    return {
        "count": res.count,
        "valid": res.valid,
        "unclean": [{"factor": str(q), "status": status} for q, status in res.unclean],
    }


def _base(system, presentation):
    return {"input": format_system(system), "n": system.n, "presentation": presentation}


def build_report(system, *, as_written=False, check_all_routes=False, sections=None) -> dict:
    """Document for ``sections`` among ``bound, kb, positivity, equality, oracle``."""
    presentation = AS_WRITTEN if as_written else COLLAPSED
    if sections is None:
        sections = ("bound", "kb", "positivity", "equality", "oracle")
    doc = _base(system, presentation)
    if "bound" in sections:
        doc.update({k: v for k, v in _bound_doc(system, presentation, check_all_routes).items() if k != "presentation"})
        if "as_written_too" in sections and not as_written and system.has_repeated_supports():
            doc["as_written"] = _bound_doc(system, AS_WRITTEN, check_all_routes)
    target = system if as_written else collapse(system)
    if "kb" in sections:
        doc["kb_bound"] = _q(kb_bound(target))
    if "positivity" in sections:
        doc["positivity"] = positivity_predicate(target)
    if "equality" in sections:
        doc["equality"] = _equality_doc(system)
    if "oracle" in sections and system.n == 1:
        doc["oracle"] = _oracle_doc(system)
    return doc


def build_mi(point_sets, *, check_all_routes=False) -> dict:
    try:
        fns = [from_lifted_points([tuple(Fraction(str(c)) for c in p) for p in pts]) for pts in point_sets]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"bad lifted point data: {exc}") from exc
    if not fns:
        raise InvalidInput("no point sets given")
    terms = mixed_integral_terms(*fns)
    value = sum((t[2] for t in terms), Fraction(0))
    doc = {
        "n": fns[0].n,
        "mi": _q(value),
        "terms": [{"kind": k, "direction": [_q(x) for x in d], "value": _q(v)} for k, d, v in terms],
    }
    if check_all_routes:
        routes = {"dec": value, "def": mixed_integral_def(*fns), "mv": mixed_integral_mv(*fns)}
        if len(set(routes.values())) != 1:
            raise RootBoundError(f"mixed integral routes disagree: {routes}")
        doc["routes"] = {k: _q(v) for k, v in routes.items()}
    # keep the decomposition consistent with the engine used elsewhere
    assert value == mixed_integral_dec(*fns)
    return doc


# --------------------------------------------------------------------------
# text rendering


def render_text(doc: dict) -> str:
    lines = []
    if "input" in doc:
        lines.append(f"system (n = {doc['n']}, {doc['presentation']})")
        lines.extend("  " + line for line in doc["input"].splitlines())
    if "bound" in doc:
        lines.append(_render_bound(doc))
        if "as_written" in doc:
            lines.append("as-written presentation")
            lines.append(_render_bound(doc["as_written"]))
    if "kb_bound" in doc:
        lines.append(f"kb bound     {doc['kb_bound']}")
    if "positivity" in doc:
        lines.append(f"positivity   {str(doc['positivity']).lower()}")
    if "equality" in doc:
        eq = doc["equality"]
        lines.append(f"equality     {eq['verdict']}")
        for ob in eq["obstructions"]:
            lines.append(f"  obstruction: {ob}")
        for init in eq["initial_systems"]:
            tau = ", ".join(init["tau"])
            lines.append(f"  place {init['place']}, tau = ({tau}): {init['system']}")
    if "oracle" in doc:
        orc = doc["oracle"]
        lines.append(f"oracle       {orc['count']} ({'valid' if orc['valid'] else 'not valid'})")
        for u in orc["unclean"]:
            lines.append(f"  unclean factor {u['factor']}: {u['status']}")
    if "mi" in doc:
        lines.append(f"n = {doc['n']}")
        for t in doc["terms"]:
            lines.append(f"  {t['kind']:<6} ({', '.join(t['direction'])}): {t['value']}")
        if "routes" in doc:
            lines.append("  routes " + ", ".join(f"{k} = {v}" for k, v in doc["routes"].items()))
        lines.append(f"mixed integral {doc['mi']}")
    return "\n".join(lines) + "\n"


def _render_bound(doc: dict) -> str:
    rows = [("factor", "degree", "mi")]
    rows += [(p["factor"], str(p["degree"]), p["mi"]) for p in doc["places"]]
    rows.append(("inf", "1", doc["mi_infinity"]))
    width = max(len(r[0]) for r in rows)
    out = ["places"]
    out += [f"  {a:<{width}}  {b:>6}  {c}" for a, b, c in rows]
    if doc["correction"] != "0":
        out.append(f"correction   {doc['correction']}")
    out.append(f"bound        {doc['bound']}")
    return "\n".join(out)


# --------------------------------------------------------------------------
# entry point


def _read_system(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_system(fh.read())


def _read_points(path: str):
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(data, list) or not all(isinstance(pts, list) and pts for pts in data):
        raise ParseError("expected a JSON list of non-empty lists of lifted points")
    return data


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rootbound", description="Exact root bounds for Laurent systems over Q[s].")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--as-written", action="store_true", help="keep repeated monomials as written")
    common.add_argument("--check-all-routes", action="store_true", help="cross-check every mixed integral")
    common.add_argument("--max-dim", type=int, default=None, help="largest ambient dimension for hulls")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [
        ("bound", "adelic root bound"),
        ("kb", "mixed volume bound in (t, s)"),
        ("equality", "equality certificate"),
        ("oracle", "resultant root count (n = 1)"),
        ("report", "every section at once"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file", help="system file")
    p = sub.add_parser("mi", parents=[common], help="mixed integral of lifted point sets")
    p.add_argument("file", help="JSON list of n+1 lifted point sets")
    return parser


_SECTIONS = {
    "bound": ("bound",),
    "kb": ("kb",),
    "equality": ("equality",),
    "oracle": ("oracle",),
    "report": ("bound", "as_written_too", "kb", "positivity", "equality", "oracle"),
}


def run(args) -> dict:
    if args.max_dim is not None:
        set_max_dim(args.max_dim)
    if args.command == "mi":
        return build_mi(_read_points(args.file), check_all_routes=args.check_all_routes)
    system = _read_system(args.file)
    if args.command == "oracle" and system.n != 1:
        raise UnsupportedDimension("the oracle handles one torus variable")
    return build_report(
        system,
        as_written=args.as_written,
        check_all_routes=args.check_all_routes,
        sections=_SECTIONS[args.command],
    )


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        doc = run(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidInput, CommonComponent) as exc:
        print(f"invalid system: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedDimension as exc:
        print(f"unsupported dimension: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except RootBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
