"""Truncated formal power series in the central variables u, v, w with
NcPoly coefficients, truncated by total degree.

Includes geometric inversion, the automorphism Delta_t in two independent
implementations (closed-form substitution and exp of derivations), and the
divided difference (F_v - F_w)/(v - w).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .maps import derivation
from .ncpoly import NcPoly, X, Y

VARS = ("u", "v", "w")
VAR_AXIS = {"u": 0, "v": 1, "w": 2}

Monomial3 = tuple  # (a, b, c): exponents of u, v, w


def mono_degree(m) -> int:
    return m[0] + m[1] + m[2]


def _mono_key(m):
    return (mono_degree(m), m[0], m[1], m[2])


class Series3:
    """Polynomial in u,v,w of total degree <= order, NcPoly coefficients."""

    __slots__ = ("order", "_coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        acc: dict[tuple, NcPoly] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for m, p in items:
                m = tuple(m)
                if mono_degree(m) > order or p.is_zero():
                    continue
                prev = acc.get(m)
                q = p if prev is None else prev + p
                if q.is_zero():
                    acc.pop(m, None)
                else:
                    acc[m] = q
        self.order = order
        self._coeffs = acc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series3":
        return cls(order)

    @classmethod
    def scalar(cls, c, order: int) -> "Series3":
        return cls(order, {(0, 0, 0): NcPoly.one().scale(c)})

    @classmethod
    def from_poly(cls, p: NcPoly, order: int) -> "Series3":
        return cls(order, {(0, 0, 0): p})

    @classmethod
    def single(cls, p: NcPoly, mono, order: int) -> "Series3":
        return cls(order, {tuple(mono): p})

    # -- inspection ---------------------------------------------------

    def coeff(self, mono) -> NcPoly:
        return self._coeffs.get(tuple(mono), NcPoly.zero())

    def items(self):
        """(monomial, coefficient) pairs sorted by (total degree, a, b, c)."""
        return sorted(self._coeffs.items(), key=lambda kv: _mono_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series3):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def first_nonzero(self):
        """Smallest monomial (degree order) with nonzero coefficient, or None."""
        if not self._coeffs:
            return None
        return min(self._coeffs, key=_mono_key)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Series3") -> "Series3":
        order = min(self.order, other.order)
        acc = {m: p for m, p in self._coeffs.items() if mono_degree(m) <= order}
        for m, p in other._coeffs.items():
            if mono_degree(m) > order:
                continue
            prev = acc.get(m)
            q = p if prev is None else prev + p
            if q.is_zero():
                acc.pop(m, None)
            else:
                acc[m] = q
        out = Series3.__new__(Series3)
        out.order = order
        out._coeffs = acc
        return out

    def __neg__(self) -> "Series3":
        out = Series3.__new__(Series3)
        out.order = self.order
        out._coeffs = {m: -p for m, p in self._coeffs.items()}
        return out

    def __sub__(self, other: "Series3") -> "Series3":
        return self + (-other)

    def __mul__(self, other: "Series3") -> "Series3":
        if not isinstance(other, Series3):
            return NotImplemented
        order = min(self.order, other.order)
        acc: dict[tuple, NcPoly] = {}
        for (a1, b1, c1), p in self._coeffs.items():
            d1 = a1 + b1 + c1
            if d1 > order:
                continue
            for (a2, b2, c2), q in other._coeffs.items():
                if d1 + a2 + b2 + c2 > order:
                    continue
                m = (a1 + a2, b1 + b2, c1 + c2)
                pq = p * q
                prev = acc.get(m)
                r = pq if prev is None else prev + pq
                if r.is_zero():
                    acc.pop(m, None)
                else:
                    acc[m] = r
        out = Series3.__new__(Series3)
        out.order = order
        out._coeffs = acc
        return out

    def scale(self, c) -> "Series3":
        c = Fraction(c)
        out = Series3.__new__(Series3)
        out.order = self.order
        out._coeffs = {} if not c else {m: p.scale(c) for m, p in self._coeffs.items()}
        return out

    def truncate(self, order: int) -> "Series3":
        return Series3(order, self._coeffs)

    def shift(self, mono, order: int | None = None) -> "Series3":
        """Multiply by the central monomial u^a v^b w^c."""
        a, b, c = mono
        order = self.order if order is None else order
        return Series3(
            order,
            {(ma + a, mb + b, mc + c): p for (ma, mb, mc), p in self._coeffs.items()},
        )

    # -- substitutions ------------------------------------------------

    def subs_zero(self, var: str) -> "Series3":
        """Set one central variable to 0."""
        axis = VAR_AXIS[var]
        return Series3(
            self.order,
            ((m, p) for m, p in self._coeffs.items() if m[axis] == 0),
        )

    def diagonal_vw(self) -> "Series3":
        """Substitute w := v."""
        return Series3(
            self.order,
            (((a, b + c, 0), p) for (a, b, c), p in self._coeffs.items()),
        )

    # -- serialization ------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "terms": [
                {"u": m[0], "v": m[1], "w": m[2], "poly": p.to_dict()}
                for m, p in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Series3":
        return cls(
            data["order"],
            (
                ((t["u"], t["v"], t["w"]), NcPoly.from_dict(t["poly"]))
                for t in data["terms"]
            ),
        )

    def __repr__(self) -> str:
        inner = ", ".join(f"{m}: {p.render()}" for m, p in self.items())
        return f"Series3(order={self.order}, {{{inner}}})"


def geometric_inverse(f: Series3) -> Series3:
    """Two-sided inverse mod degree order+1, via the Neumann series
    sum_j (1-f)^j; requires constant coefficient exactly 1."""
    if f.coeff((0, 0, 0)) != NcPoly.one():
        raise ValueError("not invertible at this truncation: constant term != 1")
    e = Series3.scalar(1, f.order) - f  # every term has total degree >= 1
    acc = Series3.scalar(1, f.order)
    power = Series3.scalar(1, f.order)
    for _ in range(f.order):
        power = power * e
        if power.is_zero():
            break
        acc = acc + power
    return acc


# -- Delta_t: closed-form substitution route --------------------------

def _axis_mono(var: str, m: int) -> tuple:
    mono = [0, 0, 0]
    mono[VAR_AXIS[var]] = m
    return tuple(mono)


@lru_cache(maxsize=None)
def _delta_letter(var: str, letter: str, order: int) -> Series3:
    # Delta(x) = x/(1-yt) = sum_m x y^m t^m
    # Delta(y) = (1-xt-yt) y/(1-yt) = y - sum_{m>=1} x y^m t^m
    if letter == X:
        terms = {_axis_mono(var, m): NcPoly.word(X + Y * m) for m in range(order + 1)}
    else:
        terms = {_axis_mono(var, m): NcPoly.word(X + Y * m, -1) for m in range(1, order + 1)}
        terms[(0, 0, 0)] = NcPoly.word(Y)
    return Series3(order, terms)


@lru_cache(maxsize=None)
def _delta_word(var: str, word: str, order: int) -> Series3:
    if not word:
        return Series3.scalar(1, order)
    res = _delta_word(var, word[:-1], order)
    return res * _delta_letter(var, word[-1], order)


def delta_subst(var: str, p: NcPoly, order: int) -> Series3:
    """Delta_t via the closed-form generator images, extended multiplicatively
    over letters and linearly over terms."""
    acc = Series3.zero(order)
    for w, c in p.terms.items():
        acc = acc + _delta_word(var, w, order).scale(c)
    return acc


# -- Delta_t: exponential-of-derivations route ------------------------

def _apply_big_derivation(var: str, f: Series3) -> Series3:
    """One application of D = sum_n (d_n/n) t^n to a truncated series."""
    axis = VAR_AXIS[var]
    order = f.order
    acc: dict[tuple, NcPoly] = {}
    for m, q in f._coeffs.items():
        room = order - mono_degree(m)
        for n in range(1, room + 1):
            img = derivation(n, q).scale(Fraction(1, n))
            if img.is_zero():
                continue
            mm = list(m)
            mm[axis] += n
            key = tuple(mm)
            prev = acc.get(key)
            r = img if prev is None else prev + img
            if r.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = r
    return Series3(order, acc)


def delta_exp(var: str, p: NcPoly, order: int) -> Series3:
    """Delta_t = exp(sum_n d_n t^n / n), truncated: the oracle route.

    Must agree with delta_subst on every input.
    """
    total = Series3.from_poly(p, order)
    cur = total
    for j in range(1, order + 1):
        cur = _apply_big_derivation(var, cur).scale(Fraction(1, j))
        if cur.is_zero():
            break
        total = total + cur
    return total


def delta_on_series(var: str, f: Series3) -> Series3:
    """Apply Delta_t coefficientwise; a ring homomorphism fixing u, v, w."""
    acc = Series3.zero(f.order)
    for m, q in f.items():
        s = delta_subst(var, q, f.order - mono_degree(m))
        acc = acc + s.shift(m, f.order)
    return acc


# -- divided difference -----------------------------------------------

def divide_by_v_minus_w(g: Series3) -> Series3:
    """Exact quotient q with (v-w)*q = g; defined when g vanishes at w=v.

    Univariate division in v over w-coefficients; the result has order
    reduced by one.
    """
    if not g.diagonal_vw().is_zero():
        raise ValueError("not divisible by (v-w): diagonal w=v is nonzero")
    n = g.order
    # group by v-exponent: b -> {(a,c): poly}
    layers: dict[int, dict[tuple, NcPoly]] = {}
    for (a, b, c), p in g._coeffs.items():
        layers.setdefault(b, {})[(a, c)] = p
    top = max(layers, default=0)
    out: dict[tuple, NcPoly] = {}
    qb: dict[tuple, NcPoly] = {}  # current Q_b, initially Q_top = 0
    for b in range(top, 0, -1):
        # Q_{b-1} = G_b + w * Q_b
        nxt: dict[tuple, NcPoly] = dict(layers.get(b, {}))
        for (a, c), p in qb.items():
            key = (a, c + 1)
            prev = nxt.get(key)
            r = p if prev is None else prev + p
            if r.is_zero():
                nxt.pop(key, None)
            else:
                nxt[key] = r
        for (a, c), p in nxt.items():
            out[(a, b - 1, c)] = p
        qb = nxt
    # remainder: G_0 + w*Q_0 must vanish (implied by the diagonal check)
    rem = dict(layers.get(0, {}))
    for (a, c), p in qb.items():
        key = (a, c + 1)
        prev = rem.get(key)
        r = p if prev is None else prev + p
        if r.is_zero():
            rem.pop(key, None)
        else:
            rem[key] = r
    if rem:
        raise ValueError("not divisible by (v-w): nonzero remainder")
    return Series3(n - 1, out)
