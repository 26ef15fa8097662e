"""Named feasibility checks and the pipeline that runs them.

Statuses: ``pass``, ``fail`` (a certified violation), ``skip`` (hypothesis
does not apply) and ``borderline`` (the enclosures are too wide to decide).
A check never fails on precision grounds alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import ArrayParameters, IntersectionArray, derive_parameters
from .interval import Interval, as_fraction
from .spectral import (
    DEFAULT_PRECISION,
    Eigenvalue,
    KreinTensor,
    Spectrum,
    eigenvalues,
    krein,
    standard_sequence,
    theta_min_at_most,
)

PASS, FAIL, SKIP, BORDERLINE = "pass", "fail", "skip", "borderline"

INFEASIBLE = "infeasible"
FEASIBLE = "feasible-unknown-existence"
KNOWN_GRAPH = "known-graph"
KNOWN_NONEXISTENT = "known-nonexistent"
UNDECIDED = "undecided"

INTEGER_TOL = Fraction(1, 10**6)
BORDERLINE_TOL = Fraction(1, 10**3)
KREIN_EPS = Fraction(1, 10**8)
HALF = Fraction(1, 2)

# regular near 2D-gons with lines of size 3 have c2 in this set
NEAR_POLYGON_C2 = frozenset({1, 2, 3, 5})


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == FAIL


# --------------------------------------------------------------------------
# individual checks


def check_monotonicity(arr: IntersectionArray) -> CheckResult:
    # IntersectionArray refuses to construct otherwise; kept for the report
    return CheckResult("monotonicity", PASS, "c non-decreasing, b non-increasing, a_i >= 0")


def check_ki_integrality(params: ArrayParameters) -> CheckResult:
    bad = [(i, k) for i, k in enumerate(params.k_i) if k.denominator != 1]
    if bad:
        i, k = bad[0]
        return CheckResult("ki-integrality", FAIL, f"k_{i} = {k} is not an integer")
    return CheckResult(
        "ki-integrality", PASS, "k_i = " + ", ".join(str(k) for k in params.k_i)
    )


def _integer_status(m: Interval, tol=INTEGER_TOL, border=BORDERLINE_TOL):
    """Classify an enclosure of a multiplicity against the positive integers."""
    if m.exact:
        ok = m.lo.denominator == 1 and m.lo >= 1
        return (PASS if ok else FAIL), m.lo
    nearest = int(round(m.mid))
    if nearest >= 1 and m.within(nearest - tol, nearest + tol):
        return PASS, nearest
    gap_lo = m.lo - math.floor(m.lo)
    gap_hi = math.ceil(m.hi) - m.hi
    single_cell = math.floor(m.lo) == math.floor(m.hi) and m.lo.denominator != 1
    if single_cell and min(gap_lo, gap_hi) >= border:
        return FAIL, m.mid
    if m.hi < 1 - border:
        return FAIL, m.mid
    return BORDERLINE, m.mid


def check_multiplicity_integrality(spectrum: Spectrum) -> CheckResult:
    worst = PASS
    notes = []
    for theta, m in zip(spectrum.eigenvalues, spectrum.multiplicities):
        status, value = _integer_status(m)
        if status == FAIL:
            return CheckResult(
                "multiplicity-integrality",
                FAIL,
                f"m({theta.approx()}) = {_fmt(m)} is not a positive integer",
            )
        if status == BORDERLINE:
            worst = BORDERLINE
            notes.append(f"m({theta.approx()}) = {_fmt(m)} undecided at this precision")
    if worst == BORDERLINE:
        return CheckResult("multiplicity-integrality", BORDERLINE, "; ".join(notes))
    ms = ", ".join(str(round(m.mid)) for m in spectrum.multiplicities)
    return CheckResult("multiplicity-integrality", PASS, f"m = {ms}")


def integral_multiplicities(spectrum: Spectrum) -> list[Interval] | None:
    """Multiplicities snapped to integers, or None unless all pass integrality."""
    out = []
    for m in spectrum.multiplicities:
        status, value = _integer_status(m)
        if status != PASS:
            return None
        out.append(Interval(value))
    return out


def check_multiplicity_bound(arr: IntersectionArray, spectrum: Spectrum) -> CheckResult:
    """Lower bounds on multiplicities of non-trivial eigenvalues.

    Godsil: ``k <= (m-1)(m+2)/2`` unless the graph is complete multipartite.
    Triangle-free: the neighbours of a vertex give ``m(theta) >= k`` for
    ``theta`` not in ``{0, -k}``.
    """
    if arr.D < 2:
        return CheckResult("multiplicity-bound", SKIP, "complete graph")
    ms = integral_multiplicities(spectrum)
    if ms is None:
        return CheckResult("multiplicity-bound", SKIP, "multiplicities are not integral")
    k = arr.k
    multipartite = arr.D == 2 and arr.c[1] == k
    undecided = []
    for theta, m in zip(spectrum.eigenvalues[1:], ms[1:]):
        if theta.exact == -k:
            continue
        if not multipartite:
            room = (m - 1) * (m + 2) / 2
            if room.hi < k and m.lo >= 2:
                return CheckResult(
                    "multiplicity-bound",
                    FAIL,
                    f"k = {k} > (m-1)(m+2)/2 = {_fmt(room)} for theta = {theta.approx()}",
                )
            if room.lo < k <= room.hi:
                undecided.append(theta)
        if arr.ai(1) == 0 and theta.exact != 0:
            if m.hi < k:
                return CheckResult(
                    "multiplicity-bound",
                    FAIL,
                    f"a1 = 0 but m({theta.approx()}) = {_fmt(m)} < k = {k}",
                )
            if m.lo < k <= m.hi:
                undecided.append(theta)
    if undecided:
        return CheckResult(
            "multiplicity-bound",
            BORDERLINE,
            "undecided for theta = " + ", ".join(t.approx() for t in undecided),
        )
    return CheckResult("multiplicity-bound", PASS, "multiplicity lower bounds hold")


def check_krein_nonnegative(kr: KreinTensor, eps=KREIN_EPS) -> CheckResult:
    d = kr.size
    unsure = None
    for i in range(1, d):
        for j in range(i, d):
            for h in range(d):
                q = kr[i, j, h]
                if q.hi < -eps:
                    return CheckResult(
                        "krein-nonnegative", FAIL, f"q_{i}{j}^{h} = {_fmt(q)} < 0"
                    )
                if q.lo < -eps and q.hi < 0:
                    unsure = (i, j, h, q)
    if unsure:
        i, j, h, q = unsure
        return CheckResult(
            "krein-nonnegative", BORDERLINE, f"q_{i}{j}^{h} = {_fmt(q)} undecided"
        )
    return CheckResult("krein-nonnegative", PASS, "all Krein parameters >= 0")


def check_absolute_bound(spectrum: Spectrum, kr: KreinTensor, eps=KREIN_EPS) -> CheckResult:
    """Sum of ``m_h`` over certified-nonzero ``q_ij^h`` against ``m_i m_j``.

    Krein values whose enclosure meets ``[-eps, eps]`` are left out of the
    sum, so a possibly-vanishing parameter can never cause a failure.
    """
    m = integral_multiplicities(spectrum) or spectrum.multiplicities
    d = kr.size
    border = None
    for i in range(1, d):
        for j in range(i, d):
            bound = m[i] * (m[i] + 1) / 2 if i == j else m[i] * m[j]
            total = Interval(0)
            maybe = Interval(0)
            support = []
            for h in range(d):
                q = kr[i, j, h]
                if q.excludes(-eps, eps):
                    total = total + m[h]
                    support.append(h)
                elif not q.within(-eps, eps):
                    maybe = maybe + m[h]
            if total.lo > bound.hi:
                kind = "m_i(m_i+1)/2" if i == j else "m_i m_j"
                return CheckResult(
                    "absolute-bound",
                    FAIL,
                    f"(i,j) = ({i},{j}): sum of m_h over h in {support} = {_fmt(total)}"
                    f" > {kind} = {_fmt(bound)}",
                )
            if (total + maybe).hi > bound.lo and border is None and maybe.hi > 0:
                border = (i, j)
    if border:
        return CheckResult(
            "absolute-bound",
            BORDERLINE,
            f"pair {border}: Krein enclosures too wide to decide",
        )
    return CheckResult("absolute-bound", PASS, "absolute bound holds for all pairs")


def _tmin_le_half(arr: IntersectionArray) -> bool:
    return theta_min_at_most(arr, HALF)


def check_c2_bound(arr: IntersectionArray, spectrum: Spectrum | None = None) -> CheckResult:
    if arr.D < 3 or not _tmin_le_half(arr):
        return CheckResult("c2-bound", SKIP, "needs D >= 3 and theta_min <= -k/2")
    if all(arr.ai(i) == 0 for i in range(1, arr.D + 1)):
        # Hadamard graphs are bipartite with c2 = k/2
        return CheckResult("c2-bound", SKIP, "bipartite")
    a1, c2 = arr.ai(1), arr.c[1]
    if a1 >= 2:
        return CheckResult("c2-bound", FAIL, f"a1 = {a1} >= 2")
    if c2 > 5 + a1:
        return CheckResult("c2-bound", FAIL, f"c2 = {c2} > 5 + a1 = {5 + a1}")
    return CheckResult("c2-bound", PASS, f"a1 = {a1} <= 1, c2 = {c2} <= {5 + a1}")


def krs_values(u: tuple[Interval, ...], r: int, s: int) -> tuple[Interval, Interval]:
    """The two Gram-matrix quantities for an induced ``K_{r,s}``, division-free.

    ``(u1 + u2)((r+s)(1-u2)/(u1+u2) + 2rs)`` expands to
    ``(r+s)(1-u2) + 2rs(u1+u2)``, and likewise for the difference.
    """
    base = (1 - u[2]) * (r + s)
    return base + (u[1] + u[2]) * (2 * r * s), base - (u[1] - u[2]) * (2 * r * s)


def check_krs_condition(
    arr: IntersectionArray,
    theta: Eigenvalue,
    r: int,
    s: int,
    second_largest: bool = False,
) -> CheckResult:
    if arr.D < 2:
        return CheckResult("krs-condition", SKIP, "needs D >= 2")
    if theta.exact in (arr.k, -arr.k):
        return CheckResult("krs-condition", SKIP, "theta = +-k")
    u = standard_sequence(arr, theta)
    e3, e4 = krs_values(u, r, s)
    label = f"K_{{{r},{s}}} at theta = {theta.approx()}"
    for name, e in (("sum form", e3), ("difference form", e4)):
        if e.negative():
            return CheckResult("krs-condition", FAIL, f"{label}: {name} = {_fmt(e)} < 0")
    if second_largest:
        # 1 + b1/(theta+1) >= 2rs/(r+s), with theta + 1 > 0
        t1 = theta.interval + 1
        if t1.positive():
            lhs = (t1 + arr.b[1]) * (r + s)
            rhs = t1 * (2 * r * s)
            diff = lhs - rhs
            if diff.negative():
                return CheckResult(
                    "krs-condition",
                    FAIL,
                    f"{label}: 1 + b1/(theta1+1) < 2rs/(r+s)",
                )
            if not diff.lo >= 0:
                return CheckResult("krs-condition", BORDERLINE, f"{label}: undecided")
    if e3.lo < 0 or e4.lo < 0:
        return CheckResult("krs-condition", BORDERLINE, f"{label}: undecided")
    return CheckResult("krs-condition", PASS, f"{label}: both forms >= 0")


def check_krs_default(arr: IntersectionArray, spectrum: Spectrum) -> CheckResult:
    """Run the ``K_{2,c2}`` inequalities at every eigenvalue other than ``+-k``.

    Two vertices at distance 2 and their common neighbours induce
    ``K_{2,c2}`` whenever ``a1 <= 1``.
    """
    if arr.D < 2:
        return CheckResult("krs-condition", SKIP, "needs D >= 2")
    if arr.ai(1) > 1:
        return CheckResult("krs-condition", SKIP, "a1 >= 2: mu-graphs need not be cocliques")
    c2 = arr.c[1]
    worst = None
    for i, theta in enumerate(spectrum.eigenvalues[1:], start=1):
        res = check_krs_condition(arr, theta, 2, c2, second_largest=(i == 1))
        if res.status == FAIL:
            return res
        if res.status == BORDERLINE:
            worst = res
    if worst:
        return worst
    return CheckResult("krs-condition", PASS, f"K_{{2,{c2}}} inequalities hold at all eigenvalues")


def clique_lower_bound(arr: IntersectionArray) -> int:
    """Size of a clique guaranteed to exist: a triangle when ``a1 >= 1``, else an edge."""
    return 3 if arr.ai(1) >= 1 else 2


def check_delsarte(arr: IntersectionArray, spectrum: Spectrum) -> CheckResult:
    if arr.D < 2:
        return CheckResult("delsarte-clique", SKIP, "needs D >= 2")
    tmin = spectrum.theta_min.interval
    cap = 1 + Interval(arr.k) / (-tmin)
    w = clique_lower_bound(arr)
    if w > cap.hi:
        return CheckResult(
            "delsarte-clique", FAIL, f"clique of size {w} > 1 + k/(-theta_min) = {_fmt(cap)}"
        )
    if w > cap.lo:
        return CheckResult("delsarte-clique", BORDERLINE, f"{w} vs {_fmt(cap)} undecided")
    note = " (Delsarte cliques)" if cap.exact and cap.lo == w else ""
    return CheckResult("delsarte-clique", PASS, f"{w} <= 1 + k/(-theta_min) = {_fmt(cap)}{note}")


def is_complete_tripartite(arr: IntersectionArray) -> bool:
    """``{2t, t-1; 1, 2t}``, the array of ``K_{t,t,t}``."""
    if arr.D != 2 or arr.k % 2:
        return False
    t = arr.k // 2
    return t >= 2 and arr.b == (2 * t, t - 1) and arr.c == (1, 2 * t)


def check_tripartite_exclusion(arr: IntersectionArray, spectrum: Spectrum | None = None) -> CheckResult:
    if arr.D < 2 or not _tmin_le_half(arr):
        return CheckResult("tripartite-exclusion", SKIP, "needs D >= 2 and theta_min <= -k/2")
    a1 = arr.ai(1)
    if a1 <= 1:
        return CheckResult("tripartite-exclusion", PASS, f"a1 = {a1} <= 1")
    if is_complete_tripartite(arr):
        return CheckResult("tripartite-exclusion", PASS, f"K_{{t,t,t}} with t = {arr.k // 2}")
    return CheckResult(
        "tripartite-exclusion",
        FAIL,
        f"a1 = {a1} >= 2 with theta_min <= -k/2 forces K_{{t,t,t}}, but D = {arr.D}",
    )


def _theta_min_is_minus_half_k(arr: IntersectionArray, spectrum: Spectrum) -> bool:
    return arr.k % 2 == 0 and spectrum.theta_min.exact == -(arr.k // 2)


def a1_pattern_index(arr: IntersectionArray) -> int | None:
    """Smallest ``i`` in ``[2, D]`` with ``a_j = c_j`` (j < i), ``a_i = k/2``, ``a_j = b_j`` (j > i)."""
    if arr.k % 2:
        return None
    half = arr.k // 2
    for i in range(2, arr.D + 1):
        if all(arr.ai(j) == arr.ci(j) for j in range(1, i)) and arr.ai(i) == half and all(
            arr.ai(j) == arr.bi(j) for j in range(i + 1, arr.D + 1)
        ):
            return i
    return None


def is_near_polygon(arr: IntersectionArray) -> bool:
    """Parameter-level regular near 2D-gon: ``c_i a_1 = a_i`` for all ``i``."""
    a1 = arr.ai(1)
    return all(arr.ci(i) * a1 == arr.ai(i) for i in range(1, arr.D + 1))


def check_a1_structure(arr: IntersectionArray, spectrum: Spectrum) -> CheckResult:
    if arr.D < 2 or arr.ai(1) != 1 or not _theta_min_is_minus_half_k(arr, spectrum):
        return CheckResult("a1-structure", SKIP, "needs a1 = 1 and theta_min = -k/2")
    i = a1_pattern_index(arr)
    near = " (regular near 2D-gon parameters)" if is_near_polygon(arr) else ""
    if i is None:
        return CheckResult(
            "a1-structure", FAIL, f"no i in [2, {arr.D}] with a_j = c_j, a_i = k/2, a_j = b_j"
        )
    return CheckResult("a1-structure", PASS, f"pattern holds with i = {i}{near}")


def check_near_polygon(arr: IntersectionArray, spectrum: Spectrum) -> CheckResult:
    if (
        arr.D < 2
        or arr.ai(1) != 1
        or not is_near_polygon(arr)
        or not _theta_min_is_minus_half_k(arr, spectrum)
    ):
        return CheckResult("near-polygon", SKIP, "not a regular near 2D-gon of order (2, t)")
    c2 = arr.c[1]
    if c2 not in NEAR_POLYGON_C2:
        return CheckResult("near-polygon", FAIL, f"c2 = {c2} not in {{1, 2, 3, 5}}")
    return CheckResult("near-polygon", PASS, f"regular near {2 * arr.D}-gon of order (2, {arr.k // 2 - 1}), c2 = {c2}")


# --------------------------------------------------------------------------
# pipeline


class Evaluation:
    """Lazily computed parameters, spectrum and Krein tensor for one array."""

    def __init__(self, arr: IntersectionArray, precision=DEFAULT_PRECISION, eps=KREIN_EPS):
        self.arr = arr
        self.precision = as_fraction(precision)
        self.eps = as_fraction(eps)
        self._params = None
        self._spectrum = None
        self._krein = None

    @property
    def params(self) -> ArrayParameters:
        if self._params is None:
            self._params = derive_parameters(self.arr)
        return self._params

    @property
    def spectrum(self) -> Spectrum:
        if self._spectrum is None:
            self._spectrum = eigenvalues(self.arr, self.precision)
        return self._spectrum

    @property
    def krein(self) -> KreinTensor:
        if self._krein is None:
            self._krein = krein(self.spectrum)
        return self._krein

    def refined(self, factor=Fraction(1, 10**12)) -> Evaluation:
        return Evaluation(self.arr, self.precision * factor, self.eps)


REGISTRY: dict[str, Callable[[Evaluation], CheckResult]] = {
    "monotonicity": lambda ev: check_monotonicity(ev.arr),
    "ki-integrality": lambda ev: check_ki_integrality(ev.params),
    "multiplicity-integrality": lambda ev: check_multiplicity_integrality(ev.spectrum),
    "multiplicity-bound": lambda ev: check_multiplicity_bound(ev.arr, ev.spectrum),
    "delsarte-clique": lambda ev: check_delsarte(ev.arr, ev.spectrum),
    "tripartite-exclusion": lambda ev: check_tripartite_exclusion(ev.arr),
    "c2-bound": lambda ev: check_c2_bound(ev.arr),
    "krs-condition": lambda ev: check_krs_default(ev.arr, ev.spectrum),
    "a1-structure": lambda ev: check_a1_structure(ev.arr, ev.spectrum),
    "near-polygon": lambda ev: check_near_polygon(ev.arr, ev.spectrum),
    "krein-nonnegative": lambda ev: check_krein_nonnegative(ev.krein, ev.eps),
    "absolute-bound": lambda ev: check_absolute_bound(ev.spectrum, ev.krein, ev.eps),
}

CHECK_IDS: tuple[str, ...] = tuple(REGISTRY)
INTEGRALITY = ("ki-integrality", "multiplicity-integrality")


def ordered_checks(ids) -> tuple[str, ...]:
    """Validate ``ids`` and return them in registry order."""
    ids = set(ids)
    unknown = ids - set(REGISTRY)
    if unknown:
        raise ValueError(f"unknown check id(s): {', '.join(sorted(unknown))}")
    return tuple(c for c in CHECK_IDS if c in ids)


@dataclass(frozen=True)
class Profile:
    checks: tuple[str, ...] = CHECK_IDS
    catalog: object = None
    fast: bool = False
    precision: Fraction = DEFAULT_PRECISION
    eps: Fraction = KREIN_EPS

    def __post_init__(self):
        object.__setattr__(self, "checks", ordered_checks(self.checks))


@dataclass(frozen=True)
class FeasibilityReport:
    array: IntersectionArray
    parameters: ArrayParameters
    spectrum: Spectrum | None
    checks: tuple[CheckResult, ...]
    verdict: str
    catalog: object = None

    @property
    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if c.status == FAIL)

    def status(self, check_id: str) -> str | None:
        for c in self.checks:
            if c.id == check_id:
                return c.status
        return None


def run_check(check_id: str, ev: Evaluation, retries: int = 1) -> CheckResult:
    """Run one registered check; a borderline outcome is retried at finer precision."""
    result = REGISTRY[check_id](ev)
    while result.status == BORDERLINE and retries > 0:
        ev = ev.refined()
        result = REGISTRY[check_id](ev)
        retries -= 1
    return result


def run_pipeline(
    arr: IntersectionArray,
    profile: Profile | None = None,
    evaluation: Evaluation | None = None,
) -> FeasibilityReport:
    profile = profile or Profile()
    ev = evaluation or Evaluation(arr, profile.precision, profile.eps)
    results = []
    for cid in profile.checks:
        res = run_check(cid, ev)
        results.append(res)
        if profile.fast and res.status == FAIL:
            break
    record = profile.catalog.lookup(arr) if profile.catalog is not None else None
    verdict = _verdict(results, record)
    try:
        spectrum = ev.spectrum
    except ArithmeticError:
        spectrum = None
    return FeasibilityReport(arr, ev.params, spectrum, tuple(results), verdict, record)


def _verdict(results, record) -> str:
    if any(r.status == FAIL for r in results):
        return INFEASIBLE
    if any(r.status == BORDERLINE for r in results):
        return UNDECIDED
    if record is not None:
        if record.status == "nonexistent":
            return KNOWN_NONEXISTENT
        if record.status.startswith("exists"):
            return KNOWN_GRAPH
    return FEASIBLE


def _fmt(x: Interval) -> str:
    return str(x)
