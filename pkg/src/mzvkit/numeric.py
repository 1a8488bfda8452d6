"""Floating-point evaluation of the Z-map: partial sums of the nested
Dirichlet series with explicit (crude) tail bounds.

This layer is a sanity net for the symbolic results, not a precision
instrument; everything is double precision with a fixed summation order,
so results are deterministic for a fixed cutoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .maps import is_admissible_index, word_to_index
from .ncpoly import NcPoly


@dataclass
class EvalResult:
    value: float
    cutoff: int
    tail_bound: float


def zeta_tail_bound(parts, m: int) -> float:
    """Crude logarithmic bound on the truncation error of the outer sum.

    Each of the d-1 inner sums is at most H_{m1-1} <= 1 + ln(m1), so the
    tail is bounded by the integral of (1 + ln t)^(d-1) t^(-k1) over
    t > M, evaluated exactly by parts:

        I_j = (1 + ln M)^j M^(1-k1)/(k1-1) + j/(k1-1) * I_{j-1}.

    The leading term is (1 + ln M)^(d-1) M^(1-k1)/(k1-1); the lower-order
    terms are needed for this to be a true upper bound.
    """
    k1, d = parts[0], len(parts)
    head = m ** (1 - k1) / (k1 - 1)
    acc = head  # I_0
    log1 = 1.0 + math.log(m)
    for j in range(1, d):
        acc = head * log1 ** j + j * acc / (k1 - 1)
    return acc


def zeta_eval(parts, m: int) -> EvalResult:
    """Partial sum of zeta(k1,...,kd) over m1 <= m, by cumulative sums
    from the innermost index outward (cost O(m * depth))."""
    parts = tuple(parts)
    if not is_admissible_index(parts):
        raise ValueError(f"divergent series: index {parts} needs k1 >= 2")
    if m < len(parts):
        raise ValueError("cutoff smaller than depth")
    idx = np.arange(m + 1, dtype=np.float64)
    idx[0] = 1.0  # avoid 0**-k; slot 0 is zeroed below
    f = idx ** float(-parts[-1])
    f[0] = 0.0
    cum = np.cumsum(f)
    for k in parts[-2::-1]:
        f = idx ** float(-k)
        f[0] = 0.0
        f[1:] *= cum[:-1]  # inner indices strictly below the current one
        cum = np.cumsum(f)
    return EvalResult(float(cum[-1]), m, zeta_tail_bound(parts, m))


def z_eval(p: NcPoly, m: int) -> EvalResult:
    """Z extended linearly: constant term maps to its scalar, each admissible
    word to its zeta value; tail bounds add with |coeff| weights."""
    if not p.admissible_support():
        raise ValueError("outside domain of Z: support not admissible")
    value = 0.0
    tail = 0.0
    for w, c in p.items():
        if not w:
            value += float(c)
            continue
        r = zeta_eval(word_to_index(w), m)
        value += float(c) * r.value
        tail += abs(float(c)) * r.tail_bound
    return EvalResult(value, m, tail)
