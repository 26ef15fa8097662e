"""Command-line interface: ``drgfeas {check,enumerate,reproduce,bound,catalog}``.

Exit codes: 0 feasible or known graph (or golden match), 1 infeasible,
known-nonexistent or golden mismatch, 2 usage error, 3 undecided at the
requested precision.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import bounds
from .catalog import STATUSES, Catalog, CatalogError, default_catalog
from .core import ArrayValidationError, derive_parameters, format_array, parse_array
from .enumeration import (
    DEFAULT_T_CAP,
    PRESETS,
    STRUCTURAL,
    Constraints,
    GenerationLimitExceeded,
    enumerate_arrays,
    preset,
)
from .feasibility import (
    CHECK_IDS,
    INFEASIBLE,
    INTEGRALITY,
    KNOWN_NONEXISTENT,
    UNDECIDED,
    Profile,
    run_pipeline,
)
from .interval import Interval, as_fraction, decimal_str
from .render import (
    compare_golden,
    dumps,
    report_document,
    report_text,
    result_document,
    result_text,
)
from .spectral import DEFAULT_PRECISION, eigenvalues

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_BORDERLINE = 0, 1, 2, 3

PROFILES = {
    "all": CHECK_IDS,
    "integrality": INTEGRALITY,
    "combinatorial": ("monotonicity", "ki-integrality", "c2-bound", "tripartite-exclusion"),
}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive_rational(text: str) -> Fraction:
    x = _rational(text)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _array(text: str):
    try:
        return parse_array(text)
    except ArrayValidationError as e:
        raise argparse.ArgumentTypeError(f"{e} [{e.invariant}]") from None


def _checks(text: str) -> tuple[str, ...]:
    if text in PROFILES:
        return PROFILES[text]
    ids = tuple(x.strip() for x in text.split(",") if x.strip())
    bad = [x for x in ids if x not in CHECK_IDS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown check id(s): {', '.join(bad)}")
    return ids


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="emit JSON")
    parser.add_argument(
        "--precision", type=_positive_rational, default=d(DEFAULT_PRECISION),
        help="eigenvalue enclosure width, a rational such as 1/10**12 or 1e-12",
    )
    parser.add_argument("--jobs", type=int, default=d(1), help="worker processes")
    parser.add_argument("--catalog", default=d(None), help="catalog file replacing the shipped one")
    parser.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="drgfeas", description="Feasibility of distance-regular graph intersection arrays."
    )
    _common(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run the feasibility pipeline on one array")
    _common(c, suppress=True)
    c.add_argument("array", type=_array, help='e.g. "3,2;1,1"')
    c.add_argument("--profile", type=_checks, default=CHECK_IDS,
                   help=f"check ids (comma separated) or one of {', '.join(PROFILES)}")
    c.add_argument("--no-catalog", action="store_true")
    c.add_argument("--fast", action="store_true", help="stop at the first failed check")

    e = sub.add_parser("enumerate", help="exhaustive search under constraints")
    _common(e, suppress=True)
    e.add_argument("--diameter", type=int, required=True)
    e.add_argument("--k-min", type=int, default=2)
    e.add_argument("--k-max", type=int, required=True)
    e.add_argument("--a1", type=int)
    e.add_argument("--c2-max", type=int)
    e.add_argument("--theta-ratio", type=_rational)
    e.add_argument("--nonbipartite", action="store_true")
    e.add_argument("--cd-equals-k", action="store_true")
    e.add_argument("--structural", choices=STRUCTURAL, default="none")
    e.add_argument("--checks", type=_checks, default=(), help="filter checks")
    e.add_argument("--report-checks", type=_checks, default=CHECK_IDS)
    e.add_argument("--max-generated", type=int)
    e.add_argument("--no-catalog", action="store_true")

    r = sub.add_parser("reproduce", help="rerun a search and compare with its golden file")
    _common(r, suppress=True)
    r.add_argument("preset", choices=PRESETS)
    r.add_argument("--t-cap", type=int, default=DEFAULT_T_CAP,
                   help="largest t for the K_{t,t,t} family (prop-4.1, thm-1.2)")

    b = sub.add_parser("bound", help="closed-form bounds")
    _common(b, suppress=True)
    bsub = b.add_subparsers(dest="bound", required=True)
    v = bsub.add_parser("valency")
    v.add_argument("--diameter", type=int, required=True)
    v.add_argument("--alpha", type=_rational, required=True)
    a = bsub.add_parser("a1-cap")
    a.add_argument("--diameter", type=int, required=True)
    a.add_argument("--cd-equals-k", action="store_true")
    for name in ("delsarte", "hoffman", "chromatic"):
        q = bsub.add_parser(name)
        q.add_argument("--array", type=_array)
        if name != "chromatic":
            q.add_argument("--k", type=int)
            q.add_argument("--theta-min", type=_rational)
        if name == "hoffman":
            q.add_argument("--n", type=_rational)
    for q in bsub.choices.values():
        _common(q, suppress=True)

    g = sub.add_parser("catalog", help="query the catalog")
    _common(g, suppress=True)
    gsub = g.add_subparsers(dest="action", required=True)
    lst = gsub.add_parser("list")
    lst.add_argument("--diameter", type=int)
    lst.add_argument("--status", choices=STATUSES)
    lk = gsub.add_parser("lookup")
    lk.add_argument("array", type=_array)
    for q in gsub.choices.values():
        _common(q, suppress=True)
    return p


def _load_catalog(args) -> Catalog:
    if args.catalog:
        return Catalog.load(args.catalog)
    return default_catalog()


def _emit(args, doc: dict, text: str) -> None:
    print(dumps(doc) if args.json else text)


def _verdict_exit(verdict: str) -> int:
    if verdict in (INFEASIBLE, KNOWN_NONEXISTENT):
        return EXIT_INFEASIBLE
    if verdict == UNDECIDED:
        return EXIT_BORDERLINE
    return EXIT_OK


def cmd_check(args) -> int:
    catalog = None if args.no_catalog else _load_catalog(args)
    profile = Profile(checks=args.profile, catalog=catalog, fast=args.fast, precision=args.precision)
    rep = run_pipeline(args.array, profile)
    _emit(args, report_document(rep), report_text(rep))
    return _verdict_exit(rep.verdict)


def cmd_enumerate(args) -> int:
    try:
        cons = Constraints(
            D=args.diameter,
            k_range=(args.k_min, args.k_max),
            a1=args.a1,
            c2_max=args.c2_max,
            theta_ratio=args.theta_ratio,
            require_nonbipartite=args.nonbipartite,
            require_cD_equals_k=args.cd_equals_k,
            structural=args.structural,
            checks=args.checks,
            max_generated=args.max_generated,
        )
    except ValueError as e:
        raise UsageError(str(e)) from None
    catalog = None if args.no_catalog else _load_catalog(args)
    res = enumerate_arrays(cons, args.report_checks, catalog, args.jobs, args.precision)
    _emit(args, result_document(res), result_text(res))
    return EXIT_OK


def cmd_reproduce(args) -> int:
    if args.t_cap < 2:
        raise UsageError("--t-cap must be at least 2")
    res = preset(args.preset, t_cap=args.t_cap, catalog=_load_catalog(args),
                 jobs=args.jobs, precision=args.precision)
    diff = compare_golden(res, args.preset, args.t_cap)
    doc = result_document(res)
    doc["golden_match"] = not diff
    text = result_text(res) + "\n" + ("golden: match" if not diff else "golden: MISMATCH")
    _emit(args, doc, text)
    if diff:
        print("\n".join(diff), file=sys.stderr)
        return EXIT_INFEASIBLE
    return EXIT_OK


def _value(label: str, x) -> tuple[dict, str]:
    if isinstance(x, Interval) and x.exact:
        x = x.lo
    if isinstance(x, Interval):
        return (
            {label: {"lo": str(x.lo), "hi": str(x.hi), "decimal": decimal_str(x.mid)}},
            f"{label} = {decimal_str(x.mid)} (enclosed in [{decimal_str(x.lo)}, {decimal_str(x.hi)}])",
        )
    x = as_fraction(x)
    return {label: {"exact": str(x), "decimal": decimal_str(x)}}, f"{label} = {x} ({decimal_str(x)})"


def _theta_min(args):
    if args.array is not None:
        arr = args.array
        spec = eigenvalues(arr, args.precision)
        return arr, arr.k, spec.theta_min.interval if not spec.theta_min.is_exact else spec.theta_min.exact
    if args.k is None or args.theta_min is None:
        raise UsageError("give --array, or --k and --theta-min")
    return None, args.k, args.theta_min


def cmd_bound(args) -> int:
    try:
        if args.bound == "valency":
            vb = bounds.valency_bound(args.diameter, args.alpha)
            d1, t1 = _value("f", vb.f_value)
            d2, t2 = _value("kappa", vb.kappa)
            doc = {**d1, **d2, "maximizing_q": list(vb.maximizers)}
            text = f"{t1}\n{t2}\nmaximizing q: {', '.join(map(str, vb.maximizers))}"
        elif args.bound == "a1-cap":
            cap = bounds.a1_valency_cap(args.diameter, args.cd_equals_k)
            doc, text = _value("k_max", cap)
        elif args.bound == "delsarte":
            _, k, t = _theta_min(args)
            doc, text = _value("clique_cap", bounds.delsarte_clique_cap(k, t))
        elif args.bound == "hoffman":
            arr, k, t = _theta_min(args)
            n = derive_parameters(arr).n if arr is not None else args.n
            if n is None:
                raise UsageError("give --array, or --n, --k and --theta-min")
            doc, text = _value("independence_cap", bounds.hoffman_independence_cap(n, k, t))
        else:
            if args.array is None:
                raise UsageError("chromatic needs --array")
            ok = bounds.three_chromatic_necessary(args.array)
            doc = {"three_chromatic_necessary": ok}
            text = f"theta_min <= -k/2: {ok} (necessary for 3-colourability, not sufficient)"
    except ValueError as e:
        raise UsageError(str(e)) from None
    doc = {"schema_version": "1", **doc}
    _emit(args, doc, text)
    return EXIT_OK


def cmd_catalog(args) -> int:
    cat = _load_catalog(args)
    if args.action == "lookup":
        rec = cat.lookup(args.array)
        if rec is None:
            _emit(args, {"schema_version": "1", "record": None}, "no record")
            return EXIT_OK
        recs = [rec]
    else:
        recs = cat.list(args.diameter, args.status)
    doc = {
        "schema_version": "1",
        "records": [
            {"array": r.array_text, "status": r.status, "name": r.name,
             "source": r.source, "note": r.note}
            for r in recs
        ],
    }
    _emit(args, doc, "\n".join(r.render() for r in recs))
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "reproduce": cmd_reproduce,
    "bound": cmd_bound,
    "catalog": cmd_catalog,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CatalogError, ArrayValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e.strerror}: {e.filename}", file=sys.stderr)
        return EXIT_USAGE
    except GenerationLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
