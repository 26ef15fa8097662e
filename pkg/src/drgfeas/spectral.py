"""Certified spectra of intersection arrays.

The intersection matrix ``L1`` is tridiagonal with positive off-diagonal
products ``b_{i-1} c_i``, so it is similar to a symmetric tridiagonal matrix
and its ``D + 1`` eigenvalues are real and simple. The characteristic
polynomials of its leading principal submatrices form a Sturm sequence; all
root counting below uses that sequence evaluated exactly at dyadic points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from .core import IntersectionArray, derive_parameters
from .interval import Interval, as_fraction, decimal_str

__all__ = [
    "SpectrumError",
    "Eigenvalue",
    "Spectrum",
    "KreinTensor",
    "DEFAULT_PRECISION",
    "char_poly",
    "poly_eval",
    "count_above",
    "eigenvalues",
    "standard_sequence",
    "multiplicity",
    "krein",
    "trace_square",
    "theta_min_at_most",
]

DEFAULT_PRECISION = Fraction(1, 10**12)
MAX_BISECTIONS = 4000


class SpectrumError(ArithmeticError):
    pass


def char_poly(arr: IntersectionArray) -> tuple[int, ...]:
    """Characteristic polynomial of ``L1``, coefficients in ascending degree."""
    return _principal_polys(arr)[-1]


def _principal_polys(arr: IntersectionArray) -> list[tuple[int, ...]]:
    # p_{i+1} = (x - a_i) p_i - b_{i-1} c_i p_{i-1}
    polys = [(1,)]
    prev: tuple[int, ...] = ()
    for i in range(arr.D + 1):
        cur = polys[-1]
        a = arr.ai(i)
        beta = arr.bi(i - 1) * arr.ci(i) if i >= 1 else 0
        nxt = [0] * (len(cur) + 1)
        for j, coef in enumerate(cur):
            nxt[j + 1] += coef
            nxt[j] -= a * coef
        for j, coef in enumerate(prev):
            nxt[j] -= beta * coef
        prev = cur
        polys.append(tuple(nxt))
    return polys


def poly_eval(poly, x):
    acc = 0
    for coef in reversed(poly):
        acc = acc * x + coef
    return acc


def _sign_at_dyadic(poly, m: int, e: int) -> int:
    """Sign of ``poly(m / 2**e)`` using integer arithmetic only."""
    acc = 0
    scale = 1
    for coef in reversed(poly):
        acc = acc * m + coef * scale
        scale <<= e
    # acc == poly(m / 2**e) * 2**(e * deg)
    return (acc > 0) - (acc < 0)


def count_above(arr: IntersectionArray, x) -> int:
    """Number of eigenvalues of ``L1`` strictly greater than the rational ``x``."""
    x = as_fraction(x)
    p, q = x.numerator, x.denominator
    q2 = q * q
    prev, cur = 0, 1
    changes = 0
    last_sign = 1
    for i in range(arr.D + 1):
        beta = arr.bi(i - 1) * arr.ci(i) if i >= 1 else 0
        prev, cur = cur, (p - q * arr.ai(i)) * cur - q2 * beta * prev
        s = (cur > 0) - (cur < 0)
        if s:
            if s != last_sign:
                changes += 1
            last_sign = s
    return changes


def theta_min_at_most(arr: IntersectionArray, ratio) -> bool:
    """Exactly decide ``theta_min <= -ratio * k``."""
    ratio = as_fraction(ratio)
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    return count_above(arr, -ratio * arr.k) < arr.D + 1


def trace_square(arr: IntersectionArray) -> int:
    """``tr(L1^2)``, the sum of the squares of the distinct eigenvalues."""
    return sum(a * a for a in arr.a) + 2 * sum(
        arr.b[i] * arr.c[i] for i in range(arr.D)
    )


@dataclass(frozen=True)
class Eigenvalue:
    """A real eigenvalue enclosed in ``[lo, hi]``; ``exact`` holds it when integral."""

    lo: Fraction
    hi: Fraction
    exact: int | None = None

    @property
    def interval(self) -> Interval:
        return Interval(self.lo, self.hi)

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def approx(self, digits: int = 12) -> str:
        if self.exact is not None:
            return str(self.exact)
        return decimal_str((self.lo + self.hi) / 2, digits)

    def __float__(self):
        return float((self.lo + self.hi) / 2)

    def __str__(self):
        return self.approx()


@dataclass(frozen=True)
class Spectrum:
    array: IntersectionArray
    eigenvalues: tuple[Eigenvalue, ...]
    multiplicities: tuple[Interval, ...]
    char_poly: tuple[int, ...]
    n: Fraction
    precision: Fraction
    _sequences: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def theta_min(self) -> Eigenvalue:
        return self.eigenvalues[-1]

    @property
    def theta_1(self) -> Eigenvalue:
        return self.eigenvalues[1]

    @property
    def all_exact(self) -> bool:
        return all(t.is_exact for t in self.eigenvalues)

    def sequence(self, i: int) -> tuple[Interval, ...]:
        if i not in self._sequences:
            self._sequences[i] = standard_sequence(self.array, self.eigenvalues[i])
        return self._sequences[i]

    def multiplicity_of(self, theta: Eigenvalue) -> Interval:
        return self.multiplicities[self.eigenvalues.index(theta)]


def _dyadic_exponent(precision: Fraction) -> int:
    # endpoints live on the grid 2**-e, fine enough for the requested width
    return max(48, math.ceil(math.log2(precision.denominator / precision.numerator)) + 4)


def _isolate(arr: IntersectionArray, poly, precision: Fraction) -> list[Eigenvalue]:
    e = _dyadic_exponent(precision)
    try:
        found = _isolate_seeded(arr, poly, e)
    except _SeedFailure:
        found = _isolate_sturm(arr, poly, e)
    out = []
    for lo, hi, exact in found:
        if exact is not None:
            out.append(Eigenvalue(Fraction(exact), Fraction(exact), exact))
        else:
            lo, hi = _refine(poly, lo, hi, e, precision)
            out.append(Eigenvalue(Fraction(lo, 1 << e), Fraction(hi, 1 << e)))
    out.sort(key=lambda t: t.lo, reverse=True)
    return out


class _SeedFailure(Exception):
    pass


def _integer_root(poly, t: int) -> bool:
    const = poly[0]
    if t == 0:
        return const == 0
    if const % t:
        return False
    return poly_eval(poly, t) == 0


def _isolate_seeded(arr, poly, e):
    """Bracket floating-point eigenvalues and certify the brackets exactly.

    Each non-integral bracket must show a sign change (an odd number of
    roots inside); with ``D + 1`` disjoint brackets and ``D + 1`` roots in
    total, every bracket holds exactly one root.
    """
    D = arr.D
    diag = np.array([arr.ai(i) for i in range(D + 1)], dtype=float)
    off = np.sqrt(np.array([arr.b[i] * arr.c[i] for i in range(D)], dtype=float))
    approx = eigvalsh_tridiagonal(diag, off)
    scale = 1 << e
    half = max(1, int(scale * 1e-9 * max(1.0, float(arr.k))))
    found = []
    for r in approx:
        t = int(round(r))
        if abs(r - t) < 1e-6 and _integer_root(poly, t):
            found.append((t * scale, t * scale, t))
            continue
        m = int(round(r * scale))
        lo, hi = m - half, m + half
        if _sign_at_dyadic(poly, lo, e) * _sign_at_dyadic(poly, hi, e) >= 0:
            raise _SeedFailure
        found.append((lo, hi, None))
    found.sort()
    for (_, hi, _), (lo, _, _) in zip(found, found[1:]):
        if hi >= lo:
            raise _SeedFailure
    if len(found) != D + 1:
        raise _SeedFailure
    return found


def _count_above_dyadic(arr, m, e):
    return count_above(arr, Fraction(m, 1 << e))


def _isolate_sturm(arr, poly, e):
    """Pure Sturm-count bisection over ``(-k-1, k+1]``; no floating point."""
    scale = 1 << e
    lo, hi = -(arr.k + 1) * scale, (arr.k + 1) * scale
    stack = [(lo, hi, _count_above_dyadic(arr, lo, e), _count_above_dyadic(arr, hi, e))]
    found = []
    steps = 0
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        roots = vlo - vhi  # roots in (lo, hi]
        if roots == 0:
            continue
        if roots == 1 and hi - lo < scale:
            found.append((lo, hi))
            continue
        steps += 1
        if steps > MAX_BISECTIONS or hi - lo < 2:
            raise SpectrumError(f"could not separate the eigenvalues of {arr}")
        mid = (lo + hi) // 2
        vmid = _count_above_dyadic(arr, mid, e)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out = []
    for lo, hi in found:
        exact = None
        for t in range(-(-lo // scale), hi // scale + 1):
            if _integer_root(poly, t):
                exact = t
        if exact is not None:
            out.append((exact * scale, exact * scale, exact))
        else:
            if _sign_at_dyadic(poly, hi, e) == 0:
                raise SpectrumError("dyadic root of a monic integer polynomial")
            out.append((lo, hi, None))
    if len(out) != arr.D + 1:
        raise SpectrumError(f"expected {arr.D + 1} eigenvalues for {arr}, found {len(out)}")
    return out


def _refine(poly, lo: int, hi: int, e: int, precision: Fraction) -> tuple[int, int]:
    slo = _sign_at_dyadic(poly, lo, e)
    target = precision * (1 << e)
    steps = 0
    while hi - lo > target:
        steps += 1
        if steps > MAX_BISECTIONS or hi - lo < 2:
            raise SpectrumError("requested precision not reachable")
        mid = (lo + hi) // 2
        s = _sign_at_dyadic(poly, mid, e)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def eigenvalues(arr: IntersectionArray, precision=DEFAULT_PRECISION) -> Spectrum:
    """Isolate all ``D + 1`` eigenvalues and attach Biggs multiplicities.

    Integral eigenvalues are found exactly; every other eigenvalue is an
    isolating interval of width at most ``precision``.
    """
    precision = as_fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    poly = char_poly(arr)
    # D + 1 disjoint isolating intervals for a degree D + 1 polynomial also
    # certify that the roots are simple
    eigs = tuple(_isolate(arr, poly, precision))
    if eigs[0].exact != arr.k:
        raise SpectrumError(f"largest eigenvalue of {arr} is not k")
    params = derive_parameters(arr)
    spec = Spectrum(
        array=arr,
        eigenvalues=eigs,
        multiplicities=(),
        char_poly=poly,
        n=params.n,
        precision=precision,
    )
    seqs = [spec.sequence(i) for i in range(len(eigs))]
    mults = tuple(_biggs(params.k_i, params.n, u) for u in seqs)
    object.__setattr__(spec, "multiplicities", mults)
    return spec


def _as_interval(theta) -> Interval:
    if isinstance(theta, Eigenvalue):
        return theta.interval
    if isinstance(theta, Interval):
        return theta
    return Interval(theta)


def standard_sequence(arr: IntersectionArray, theta) -> tuple[Interval, ...]:
    """``u_0 = 1, u_1 = theta/k`` and ``b_i u_{i+1} = (theta - a_i) u_i - c_i u_{i-1}``."""
    th = _as_interval(theta)
    u = [Interval(1), th / arr.k]
    for i in range(1, arr.D):
        u.append(((th - arr.ai(i)) * u[i] - u[i - 1] * arr.ci(i)) / arr.bi(i))
    return tuple(u[: arr.D + 1])


def _biggs(k_i, n, u) -> Interval:
    denom = Interval(0)
    for ki, ui in zip(k_i, u):
        denom = denom + ui.square() * ki
    return Interval(n) / denom


def multiplicity(arr: IntersectionArray, theta) -> Interval:
    """Biggs' formula ``m(theta) = n / sum k_i u_i(theta)^2``."""
    params = derive_parameters(arr)
    return _biggs(params.k_i, params.n, standard_sequence(arr, theta))


@dataclass(frozen=True)
class KreinTensor:
    q: tuple[tuple[tuple[Interval, ...], ...], ...]

    def __getitem__(self, idx):
        i, j, h = idx
        return self.q[i][j][h]

    @property
    def size(self) -> int:
        return len(self.q)


def krein(spectrum: Spectrum) -> KreinTensor:
    """Krein parameters ``q_ij^h = (m_i m_j / n) sum_l k_l u_l(i) u_l(j) u_l(h)``."""
    arr = spectrum.array
    params = derive_parameters(arr)
    d = arr.D + 1
    u = [spectrum.sequence(i) for i in range(d)]
    m = spectrum.multiplicities
    n = params.n
    kl = params.k_i
    q = [[[None] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            uij = [u[i][l] * u[j][l] * kl[l] for l in range(d)]
            coef = m[i] * m[j] / n
            for h in range(d):
                if i == 0:
                    val = Interval(1 if j == h else 0)
                else:
                    s = Interval(0)
                    for l in range(d):
                        s = s + uij[l] * u[h][l]
                    val = coef * s
                q[i][j][h] = val
                q[j][i][h] = val
    return KreinTensor(tuple(tuple(tuple(row) for row in plane) for plane in q))
