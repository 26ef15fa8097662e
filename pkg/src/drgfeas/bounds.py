"""Closed-form bounds: the valency bound, the a1 = 1 caps, Delsarte and Hoffman."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import IntersectionArray, derive_parameters
from .interval import Interval, as_fraction
from .spectral import Eigenvalue, Spectrum, theta_min_at_most

A1_ZERO_D3_CAP = 64


@dataclass(frozen=True)
class ValencyBound:
    D: int
    alpha: Fraction
    f_value: Fraction
    kappa: Fraction
    maximizers: tuple[int, ...]
    terms: tuple[Fraction, ...]  # f-term for q = 1..D, a diagnostic


def _f_term(D: int, alpha: Fraction, q: int) -> Fraction:
    return (D + 1) * Fraction(2) ** ((q + 1) * (D - q) + 2 * q) * alpha ** ((q + 1) * (q - D) - 2 * q)


def valency_bound(D: int, alpha) -> ValencyBound:
    """``f(D, alpha)`` as a max over ``q = 1..D`` and ``kappa = (f-1)(f+2)/2``."""
    alpha = as_fraction(alpha)
    if D < 2:
        raise ValueError("valency bound needs D >= 2")
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    terms = tuple(_f_term(D, alpha, q) for q in range(1, D + 1))
    f = max(terms)
    return ValencyBound(
        D=D,
        alpha=alpha,
        f_value=f,
        kappa=(f - 1) * (f + 2) / 2,
        maximizers=tuple(q for q, x in enumerate(terms, start=1) if x == f),
        terms=terms,
    )


def a1_valency_cap(D: int, cD_equals_k: bool) -> int:
    """Valency cap for ``a1 = 1`` and ``theta_min = -k/2``."""
    if D < 2:
        raise ValueError("cap needs D >= 2")
    return 2 ** (2 * D - 2) - 2 if cD_equals_k else 2 ** (2 * D + 1) - 2


def diameter3_a1zero_cap() -> int:
    return A1_ZERO_D3_CAP


def _as_interval(theta) -> Interval:
    if isinstance(theta, Eigenvalue):
        return theta.interval
    if isinstance(theta, Interval):
        return theta
    return Interval(as_fraction(theta))


def delsarte_clique_cap(k: int, theta_min) -> Interval:
    """``1 + k/(-theta_min)``."""
    t = _as_interval(theta_min)
    if not t.negative():
        raise ValueError("theta_min must be negative")
    return 1 + Interval(k) / (-t)


def hoffman_independence_cap(n, k: int, theta_min) -> Interval:
    """``n / (1 + k/(-theta_min))``."""
    return Interval(as_fraction(n)) / delsarte_clique_cap(k, theta_min)


def three_chromatic_necessary(arr: IntersectionArray, spectrum: Spectrum | None = None) -> bool:
    """``theta_min <= -k/2``; necessary for a 3-colouring, never sufficient."""
    return theta_min_at_most(arr, Fraction(1, 2))


def hoffman_for(arr: IntersectionArray, spectrum: Spectrum) -> Interval:
    n = derive_parameters(arr).n
    return hoffman_independence_cap(n, arr.k, spectrum.theta_min)


def ell_index(arr: IntersectionArray, alpha) -> int | None:
    """Largest ``i`` with ``c_i <= alpha^(i+1) 2^(-i-1) k`` (a diagnostic from the valency proof)."""
    alpha = as_fraction(alpha)
    best = None
    for i in range(1, arr.D + 1):
        if arr.ci(i) <= alpha ** (i + 1) * Fraction(1, 2 ** (i + 1)) * arr.k:
            best = i
    return best


def p_index(arr: IntersectionArray, alpha) -> int | None:
    """``min(ell + 1, D)``, or None when no ``c_i`` is that small."""
    ell = ell_index(arr, alpha)
    return None if ell is None else min(ell + 1, arr.D)
