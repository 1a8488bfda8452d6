"""Exact sparse arithmetic in the free algebra Q<x,y>.

Words are plain strings over the two-letter alphabet 'x', 'y'; the empty
string is the multiplicative identity.  Coefficients are `fractions.Fraction`
throughout, so every computation downstream is exact.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

X = "x"
Y = "y"

_WORD_RE = re.compile(r"^[xy]*$")


def check_word(w: str) -> str:
    if not _WORD_RE.match(w):
        raise ValueError(f"not a word over x,y: {w!r}")
    return w


def word_weight(w: str) -> int:
    return len(w)


def is_admissible(w: str) -> bool:
    """True iff w lies in Q + xhy: empty, or starts with x and ends with y."""
    return not w or (w[0] == X and w[-1] == Y)


def all_words(k: int):
    """All 2^k words of weight k, in length-lex order (x < y)."""
    for letters in itertools.product((X, Y), repeat=k):
        yield "".join(letters)


def admissible_words(k: int):
    """Admissible words of weight k (2^(k-2) of them for k >= 2)."""
    if k == 0:
        yield ""
    elif k >= 2:
        for mid in all_words(k - 2):
            yield X + mid + Y


def word_bits(w: str) -> int:
    """Dense integer index of a word among all words of its weight (x=0, y=1)."""
    b = 0
    for ch in w:
        b = (b << 1) | (ch == Y)
    return b


def bits_word(bits: int, k: int) -> str:
    return "".join(Y if (bits >> (k - 1 - i)) & 1 else X for i in range(k))


def _term_key(w: str):
    # canonical term order: length-lex, x < y
    return (len(w), w)


class NcPoly:
    """Element of Q<x,y>: finite map word -> nonzero Fraction."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc: dict[str, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                c = Fraction(c)
                if not c:
                    continue
                prev = acc.get(w)
                if prev is None:
                    acc[w] = c
                else:
                    s = prev + c
                    if s:
                        acc[w] = s
                    else:
                        del acc[w]
        self._terms = acc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls()

    @classmethod
    def one(cls) -> "NcPoly":
        return cls({"": Fraction(1)})

    @classmethod
    def word(cls, w: str, coeff=1) -> "NcPoly":
        return cls({check_word(w): Fraction(coeff)})

    # -- inspection ---------------------------------------------------

    @property
    def terms(self) -> dict[str, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (length-lex) order."""
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]))

    def coeff(self, w: str) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def weights(self):
        return sorted({len(w) for w in self._terms})

    def is_homogeneous(self, k: int | None = None) -> bool:
        ws = self.weights()
        if len(ws) > 1:
            return False
        return k is None or not ws or ws[0] == k

    def admissible_support(self) -> bool:
        return all(is_admissible(w) for w in self._terms)

    # -- arithmetic ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "NcPoly") -> "NcPoly":
        if not isinstance(other, NcPoly):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            prev = acc.get(w)
            if prev is None:
                acc[w] = c
            else:
                s = prev + c
                if s:
                    acc[w] = s
                else:
                    del acc[w]
        out = NcPoly.__new__(NcPoly)
        out._terms = acc
        return out

    def __neg__(self) -> "NcPoly":
        out = NcPoly.__new__(NcPoly)
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def scale(self, c) -> "NcPoly":
        c = Fraction(c)
        out = NcPoly.__new__(NcPoly)
        out._terms = {} if not c else {w: c * v for w, v in self._terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            acc: dict[str, Fraction] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    prev = acc.get(w)
                    if prev is None:
                        acc[w] = c
                    else:
                        s = prev + c
                        if s:
                            acc[w] = s
                        else:
                            del acc[w]
            out = NcPoly.__new__(NcPoly)
            out._terms = acc
            return out
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "NcPoly":
        if n < 0:
            raise ValueError("negative power")
        out = NcPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def weight_component(self, k: int) -> "NcPoly":
        out = NcPoly.__new__(NcPoly)
        out._terms = {w: c for w, c in self._terms.items() if len(w) == k}
        return out

    # -- serialization ------------------------------------------------

    def render(self) -> str:
        """Canonical text form, e.g. '-3/2*xxy + xyy'. Zero renders as '0'."""
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            mono = w if w else "1"
            if c == 1 and w:
                piece = mono
            elif c == -1 and w:
                piece = "-" + mono
            elif w:
                piece = f"{c}*{mono}"
            else:
                piece = str(c)
            parts.append(piece)
        out = parts[0]
        for piece in parts[1:]:
            if piece.startswith("-"):
                out += " - " + piece[1:]
            else:
                out += " + " + piece
        return out

    @classmethod
    def parse(cls, text: str) -> "NcPoly":
        """Inverse of render()."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms = []
        for sign, chunk in _split_signed(text):
            chunk = chunk.strip()
            if "*" in chunk:
                cstr, w = chunk.split("*", 1)
                c = Fraction(cstr)
            elif _WORD_RE.match(chunk) and chunk:
                c, w = Fraction(1), chunk
            else:
                c, w = Fraction(chunk), "1"
            w = "" if w == "1" else check_word(w)
            terms.append((w, sign * c))
        return cls(terms)

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"word": w, "coeff": str(c)} for w, c in self.items()
            ]
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NcPoly":
        return cls(
            (t["word"], Fraction(t["coeff"])) for t in data["terms"]
        )

    def __repr__(self) -> str:
        return f"NcPoly({self.render()})"


def _split_signed(text: str):
    """Split 'a + b - c' into [(1,'a'), (1,'b'), (-1,'c')]."""
    tokens = re.split(r"\s+([+-])\s+", text)
    sign = 1
    if tokens[0].startswith("-"):
        tokens[0] = tokens[0][1:]
        sign = -1
    yield sign, tokens[0]
    for op, chunk in zip(tokens[1::2], tokens[2::2]):
        yield (1 if op == "+" else -1), chunk


ZERO = NcPoly.zero()
ONE = NcPoly.one()
