"""Text and JSON renderings of reports and enumeration results, and golden files."""

from __future__ import annotations

import difflib
import json
from importlib import resources

from .catalog import Family
from .core import format_array
from .enumeration import EnumerationResult
from .feasibility import FeasibilityReport
from .interval import Interval, decimal_str

SCHEMA_VERSION = "1"


def _number(x: Interval):
    if x.exact and x.lo.denominator == 1:
        return int(x.lo)
    if x.exact:
        return str(x.lo)
    return decimal_str(x.mid)


def _multiplicity(m: Interval):
    n = int(round(m.mid))
    if m.exact and m.lo == n:
        return n
    if abs(m.mid - n) <= 1e-9 and m.within(n - 1e-6, n + 1e-6):
        return n
    return decimal_str(m.mid)


def report_document(rep: FeasibilityReport) -> dict:
    spectrum = []
    if rep.spectrum is not None:
        for theta, m in zip(rep.spectrum.eigenvalues, rep.spectrum.multiplicities):
            spectrum.append(
                {
                    "value": theta.approx(),
                    "exact": theta.is_exact,
                    "multiplicity": _multiplicity(m),
                }
            )
    cat = rep.catalog
    n = rep.parameters.n
    return {
        "schema_version": SCHEMA_VERSION,
        "array": format_array(rep.array),
        "n": int(n) if n.denominator == 1 else str(n),
        "valency": rep.array.k,
        "spectrum": spectrum,
        "checks": [{"id": c.id, "status": c.status, "detail": c.detail} for c in rep.checks],
        "verdict": rep.verdict,
        "catalog": (
            {"name": cat.name, "status": cat.status, "source": cat.source} if cat else None
        ),
    }


def report_text(rep: FeasibilityReport) -> str:
    arr, p = rep.array, rep.parameters
    lines = [
        f"array    {{{format_array(arr)}}}",
        f"D = {arr.D}, k = {arr.k}, n = {p.n}",
        "k_i      " + ", ".join(str(x) for x in p.k_i),
        "a_i      " + ", ".join(str(x) for x in p.a_i),
    ]
    if rep.spectrum is not None:
        lines.append("spectrum")
        for theta, m in zip(rep.spectrum.eigenvalues, rep.spectrum.multiplicities):
            kind = "exact" if theta.is_exact else "approx"
            lines.append(f"  {theta.approx():>20}  {kind:6}  m = {_multiplicity(m)}")
    lines.append("checks")
    width = max((len(c.id) for c in rep.checks), default=0)
    for c in rep.checks:
        lines.append(f"  {c.id:<{width}}  {c.status:<10}  {c.detail}")
    lines.append(f"verdict  {rep.verdict}")
    if rep.catalog is not None:
        cat = rep.catalog
        lines.append(f"catalog  {cat.name} [{cat.status}] ({cat.source})")
    return "\n".join(lines)


def result_lines(result: EnumerationResult) -> list[str]:
    """One ``array | verdict`` line per report, the form kept in golden files."""
    return [f"{format_array(r.array)} | {r.verdict}" for r in result.reports]


def result_document(result: EnumerationResult) -> dict:
    c = result.counts
    return {
        "schema_version": SCHEMA_VERSION,
        "name": result.name,
        "counts": {"generated": c.generated, "pruned": c.pruned, "surviving": c.surviving},
        "survivors": [format_array(a) for a in result.survivors],
        "final": [format_array(a) for a in result.final],
        "reports": [report_document(r) for r in result.reports],
    }


def result_text(result: EnumerationResult) -> str:
    c = result.counts
    lines = [f"# {result.name or 'enumeration'}"]
    lines.append(f"# generated {c.generated}, surviving {c.surviving}, final {len(result.final)}")
    for rule, n in c.pruned.items():
        lines.append(f"# pruned by {rule}: {n}")
    lines.extend(result_lines(result))
    return "\n".join(lines)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


# --------------------------------------------------------------------------
# golden files


def golden_text(name: str) -> str:
    return resources.files("drgfeas").joinpath(f"data/golden/{name}.txt").read_text("utf-8")


def expand_golden(text: str, t_cap: int) -> list[str]:
    """Golden lines with family lines instantiated for ``t <= t_cap``."""
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        arr, verdict = (x.strip() for x in line.split(" | "))
        if "t" in arr:
            fam = Family.parse(arr)
            out.extend(f"{format_array(a)} | {verdict}" for a in fam.members(t_cap))
        else:
            out.append(f"{arr} | {verdict}")
    return out


def compare_golden(result: EnumerationResult, name: str, t_cap: int = 0) -> list[str]:
    """Unified diff between golden and actual lines; empty when they match."""
    expected = sorted(expand_golden(golden_text(name), t_cap), key=_line_key)
    actual = result_lines(result)
    if expected == actual:
        return []
    return list(difflib.unified_diff(expected, actual, "golden", "actual", lineterm=""))


def _line_key(line: str):
    from .core import parse_array

    return parse_array(line.split(" | ")[0])
