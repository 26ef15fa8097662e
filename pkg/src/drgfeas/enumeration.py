"""Exhaustive generation of intersection arrays under constraints, plus presets.

Arrays are built level by level: at level ``i`` the pair ``(c_i, b_i)`` is
chosen subject to the core invariants. A constraint that rejects a partial
array rejects every completion of it, so the rejected partial array is
counted once under that rule. Every counted candidate is therefore either
pruned by exactly one rule or survives, and ``generated = surviving + sum(pruned)``.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .bounds import a1_valency_cap, diameter3_a1zero_cap
from .catalog import Catalog, default_catalog
from .core import IntersectionArray
from .interval import as_fraction
from .feasibility import (
    CHECK_IDS,
    FAIL,
    INFEASIBLE,
    INTEGRALITY,
    KNOWN_NONEXISTENT,
    Evaluation,
    FeasibilityReport,
    Profile,
    is_complete_tripartite,
    ordered_checks,
    run_check,
    run_pipeline,
)
from .spectral import DEFAULT_PRECISION, theta_min_at_most

log = logging.getLogger(__name__)

STRUCTURAL = ("none", "a1-structure", "near-polygon")
PROP41_K_CAP = 22


class GenerationLimitExceeded(RuntimeError):
    def __init__(self, generated: int, limit: int):
        super().__init__(f"generated {generated} candidates, over the limit of {limit}")
        self.generated = generated
        self.limit = limit


@dataclass(frozen=True)
class Constraints:
    D: int
    k_range: tuple[int, int]
    a1: int | None = None
    c2_max: int | None = None
    theta_ratio: Fraction | None = None
    require_nonbipartite: bool = False
    require_cD_equals_k: bool = False
    structural: str = "none"
    checks: tuple[str, ...] = ()
    # preset-specific leaf rules, see LEAF_RULES
    rules: tuple[str, ...] = ()
    t_cap: int | None = None
    max_generated: int | None = None

    def __post_init__(self):
        lo, hi = self.k_range
        if self.D < 1:
            raise ValueError("D must be >= 1")
        if hi is None or lo > hi:
            raise ValueError("k_range must be a finite, non-empty interval")
        if self.theta_ratio is not None:
            r = as_fraction(self.theta_ratio)
            if not 0 < r <= 1:
                raise ValueError("theta_ratio must lie in (0, 1]")
            object.__setattr__(self, "theta_ratio", r)
        if self.structural not in STRUCTURAL:
            raise ValueError(f"structural must be one of {', '.join(STRUCTURAL)}")
        if self.structural == "a1-structure" and self.a1 not in (None, 1):
            raise ValueError("a1-structure needs a1 = 1")
        unknown = set(self.rules) - set(LEAF_RULES)
        if unknown:
            raise ValueError(f"unknown rule(s): {', '.join(sorted(unknown))}")
        object.__setattr__(self, "checks", ordered_checks(self.checks))


@dataclass(frozen=True)
class Counts:
    generated: int
    pruned: dict[str, int]
    surviving: int

    def merge(self, other: Counts) -> Counts:
        pruned = Counter(self.pruned)
        pruned.update(other.pruned)
        return Counts(
            self.generated + other.generated,
            dict(sorted(pruned.items())),
            self.surviving + other.surviving,
        )


@dataclass(frozen=True)
class EnumerationResult:
    constraints: tuple[Constraints, ...]
    reports: tuple[FeasibilityReport, ...]
    counts: Counts
    name: str = ""

    @property
    def survivors(self) -> tuple[IntersectionArray, ...]:
        return tuple(r.array for r in self.reports)

    @property
    def final(self) -> tuple[IntersectionArray, ...]:
        """Survivors not eliminated by a failed check or a nonexistence record."""
        return tuple(
            r.array for r in self.reports if r.verdict not in (INFEASIBLE, KNOWN_NONEXISTENT)
        )


# --------------------------------------------------------------------------
# leaf rules specific to presets


def _srg_second_eigenvalue(arr: IntersectionArray, ev: Evaluation, cons: Constraints) -> bool:
    """For D = 2: ``c2 - k = theta_1 theta_min`` with ``theta_min <= -k/2`` forces
    ``theta_1 <= 1`` when the spectrum is integral; otherwise the graph is a
    conference graph ``{2t, t; 1, t}``."""
    spec = ev.spectrum
    if spec.all_exact:
        return spec.theta_1.exact <= 1
    t = arr.k // 2
    return arr.k % 2 == 0 and arr.b == (2 * t, t) and arr.c == (1, t)


def _tripartite_t_cap(arr: IntersectionArray, ev: Evaluation, cons: Constraints) -> bool:
    return not (is_complete_tripartite(arr) and cons.t_cap is not None and arr.k > 2 * cons.t_cap)


LEAF_RULES = {
    "srg-second-eigenvalue": _srg_second_eigenvalue,
    "tripartite-t-cap": _tripartite_t_cap,
}


# --------------------------------------------------------------------------
# generation


class _Search:
    def __init__(self, cons: Constraints, k: int, precision=DEFAULT_PRECISION):
        self.cons = cons
        self.k = k
        self.precision = precision
        self.pruned: Counter = Counter()
        self.survivors: list[IntersectionArray] = []
        self.incremental = "ki-integrality" in cons.checks
        self.leaf_checks = tuple(c for c in cons.checks if c not in ("ki-integrality", "monotonicity"))

    @property
    def generated(self) -> int:
        return sum(self.pruned.values()) + len(self.survivors)

    def run(self):
        cons, k = self.cons, self.k
        if cons.D >= 2 and k < 2:
            return self
        self._level(1, [k], [], Fraction(1), frozenset({"A"}))
        return self

    def _c_rule(self, i: int, c: int, b_prev: int, k_prev: Fraction) -> str | None:
        cons = self.cons
        if i == 2 and cons.c2_max is not None and c > cons.c2_max:
            return "c2-max"
        if i == cons.D and cons.require_cD_equals_k and c != self.k:
            return "cD-equals-k"
        if self.incremental and (k_prev * b_prev / c).denominator != 1:
            return "ki-integrality"
        return None

    def _allowed_b(self, i, b, c, b_options, states):
        """Admissible ``b_i`` mapped to the structural states they lead to,
        plus the number of options each rule removed."""
        cons, k, D = self.cons, self.k, self.cons.D
        dropped = Counter()
        opts = list(b_options)
        if i == 1 and cons.a1 is not None:
            want = k - 1 - cons.a1
            keep = [x for x in opts if x == want]
            dropped["a1"] = len(opts) - len(keep)
            opts = keep
        if cons.structural == "none":
            return {x: states for x in opts}, dropped
        out = {}
        for bi in opts:
            a = k - bi - c
            if cons.structural == "near-polygon":
                if i == 1 or a == c * (k - b[1] - 1):
                    out[bi] = states
                continue
            nxt = set()
            if k % 2 == 0:
                if i == 1:
                    if a == 1:
                        nxt.add("A")
                else:
                    if "A" in states and a == c and i < D:
                        nxt.add("A")
                    if "A" in states and 2 * a == k:
                        nxt.add("C")
                    if "C" in states and a == bi:
                        nxt.add("C")
                if i == D:
                    nxt &= {"C"}
            if nxt:
                out[bi] = frozenset(nxt)
        dropped[cons.structural] = len(opts) - len(out)
        return out, dropped

    def _level(self, i, b, c, k_prev, states):
        cons, k, D = self.cons, self.k, self.cons.D
        b_prev = b[-1]
        c_range = [1] if i == 1 else range(c[-1], k + 1)
        for ci in c_range:
            b_options = range(1, min(b_prev, k - ci) + 1) if i < D else range(0, 1)
            total = len(b_options)
            if total == 0:
                continue
            rule = self._c_rule(i, ci, b_prev, k_prev) if i > 1 else None
            if rule:
                self.pruned[rule] += total
                continue
            allowed, dropped = self._allowed_b(i, b, ci, b_options, states)
            self.pruned.update({r: n for r, n in dropped.items() if n})
            k_i = k_prev * b_prev / ci
            for bi, nxt in allowed.items():
                if i == D:
                    self._leaf(IntersectionArray(b, c + [ci]))
                else:
                    self._level(i + 1, b + [bi], c + [ci], k_i, nxt)
            self._check_limit()

    def _check_limit(self):
        limit = self.cons.max_generated
        if limit is not None and self.generated > limit:
            raise GenerationLimitExceeded(self.generated, limit)

    def _leaf(self, arr: IntersectionArray):
        cons = self.cons
        if cons.require_nonbipartite and not any(arr.a):
            self.pruned["nonbipartite"] += 1
            return
        if cons.theta_ratio is not None and not theta_min_at_most(arr, cons.theta_ratio):
            self.pruned["theta-ratio"] += 1
            return
        ev = Evaluation(arr, self.precision)
        for cid in self.leaf_checks:
            if run_check(cid, ev).status == FAIL:
                self.pruned[cid] += 1
                return
        for rule in cons.rules:
            if not LEAF_RULES[rule](arr, ev, cons):
                self.pruned[rule] += 1
                return
        self.survivors.append(arr)


def _search_k(args):
    cons, k, precision = args
    s = _Search(cons, k, precision).run()
    return s.survivors, dict(s.pruned)


def enumerate_arrays(
    cons: Constraints,
    report_checks=CHECK_IDS,
    catalog: Catalog | None = None,
    jobs: int = 1,
    precision=DEFAULT_PRECISION,
) -> EnumerationResult:
    """Visit every array allowed by ``cons``; full reports for the survivors.

    ``report_checks`` selects the checks in each survivor's report. Work is
    split by valency; the merged output does not depend on ``jobs``.
    """
    lo, hi = cons.k_range
    tasks = [(cons, k, precision) for k in range(max(lo, 1), hi + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_k, tasks))
    else:
        parts = [_search_k(t) for t in tasks]
    survivors: list[IntersectionArray] = []
    pruned: Counter = Counter()
    generated = 0
    for (cons_, k, _), (surv, pr) in zip(tasks, parts):
        survivors.extend(surv)
        pruned.update(pr)
        generated += len(surv) + sum(pr.values())
        log.debug("k=%d: %d survivors", k, len(surv))
        if cons.max_generated is not None and generated > cons.max_generated:
            raise GenerationLimitExceeded(generated, cons.max_generated)
    survivors.sort()
    profile = Profile(checks=report_checks, catalog=catalog, precision=precision)
    reports = tuple(run_pipeline(a, profile) for a in survivors)
    counts = Counts(generated, dict(sorted(pruned.items())), len(survivors))
    return EnumerationResult((cons,), reports, counts)


def _merge(name: str, results, extra=()) -> EnumerationResult:
    """Combine several runs; ``extra`` reports (not enumerated) join the output
    but not the counts."""
    cons, reports, counts = (), tuple(extra), Counts(0, {}, 0)
    for r in results:
        cons += r.constraints
        reports += r.reports
        counts = counts.merge(r.counts)
    reports = tuple(sorted(reports, key=lambda r: r.array))
    return EnumerationResult(cons, reports, counts, name)


# --------------------------------------------------------------------------
# presets

HALF = Fraction(1, 2)
PRESETS = ("thm-7.2", "thm-6.4", "prop-4.1", "thm-1.2")
DEFAULT_T_CAP = 5


def thm72_constraints(**kw) -> Constraints:
    return Constraints(
        D=3,
        k_range=(2, diameter3_a1zero_cap()),
        a1=0,
        c2_max=5,
        theta_ratio=HALF,
        require_nonbipartite=True,
        checks=INTEGRALITY + ("multiplicity-bound",),
        **kw,
    )


def thm64_constraints(**kw) -> tuple[Constraints, ...]:
    return tuple(
        Constraints(
            D=D,
            k_range=(2, a1_valency_cap(D, True)),
            a1=1,
            c2_max=6,
            theta_ratio=HALF,
            require_nonbipartite=True,
            require_cD_equals_k=True,
            structural="a1-structure",
            checks=INTEGRALITY,
            **kw,
        )
        for D in (3, 4)
    )


def prop41_constraints(t_cap: int, **kw) -> Constraints:
    return Constraints(
        D=2,
        k_range=(2, max(PROP41_K_CAP, 2 * t_cap)),
        theta_ratio=HALF,
        require_nonbipartite=True,
        checks=CHECK_IDS,
        rules=("srg-second-eigenvalue", "tripartite-t-cap"),
        t_cap=t_cap,
        **kw,
    )


def triangle_constraints(**kw) -> Constraints:
    # theta_min = -1 <= -k/2 forces k <= 2
    return Constraints(D=1, k_range=(2, 2), theta_ratio=HALF, checks=CHECK_IDS, **kw)


def preset(
    name: str,
    t_cap: int | None = None,
    catalog: Catalog | None = None,
    jobs: int = 1,
    precision=DEFAULT_PRECISION,
    max_generated: int | None = None,
) -> EnumerationResult:
    """Run one of the named searches; ``catalog`` defaults to the shipped one."""
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    catalog = catalog if catalog is not None else default_catalog()
    if name in ("prop-4.1", "thm-1.2") and t_cap is None:
        t_cap = DEFAULT_T_CAP
    kw = {"max_generated": max_generated}
    run = lambda c: enumerate_arrays(c, catalog=catalog, jobs=jobs, precision=precision)

    if name == "thm-7.2":
        return _merge(name, [run(thm72_constraints(**kw))])
    if name == "thm-6.4":
        return _merge(name, [run(c) for c in thm64_constraints(**kw)])
    if name == "prop-4.1":
        return _merge(name, [run(prop41_constraints(t_cap, **kw))])

    parts = [
        run(triangle_constraints(**kw)),
        run(prop41_constraints(t_cap, **kw)),
        run(thm72_constraints(**kw)),
        *(run(c) for c in thm64_constraints(**kw)),
    ]
    profile = Profile(catalog=catalog, precision=precision)
    near = tuple(run_pipeline(a, profile) for a in near_polygon_arrays(catalog))
    return _merge(name, parts, near)


def near_polygon_arrays(catalog: Catalog) -> list[IntersectionArray]:
    """Catalog arrays with ``a1 = 1``, ``c_D != k`` and ``D`` in ``{3, 4}``."""
    out = []
    for D in (3, 4):
        for arr in catalog.arrays(0, D=D):
            if arr.ai(1) == 1 and arr.c[-1] != arr.k:
                rec = catalog.lookup(arr)
                if rec is not None and rec.status != "nonexistent":
                    out.append(arr)
    return sorted(out)
