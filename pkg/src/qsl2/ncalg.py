"""Free noncommutative polynomials over Q(q), tensor powers, monomial orders.

Words are tuples of generator indices into a fixed generator name table.
Polynomials are finitely supported mappings word -> CycRat with no stored
zero coefficients; all operations are pure and return fresh objects.
"""

from __future__ import annotations

import re

from .cyclo import CycRat, parse_scalar
from .errors import MixedAlgebras

Word = tuple  # tuple[int, ...]

EMPTY_WORD: Word = ()


class MonomialOrder:
    """Degree-lexicographic order, optionally with positive letter weights.

    Words compare by total weight, then length, then letterwise precedence.
    With all weights 1 this is plain deglex.  The order is a well-order
    compatible with concatenation in all cases.
    """

    __slots__ = ("ngens", "precedence", "weights")

    def __init__(self, ngens: int, precedence=None, weights=None):
        self.ngens = ngens
        self.precedence = tuple(precedence) if precedence else tuple(range(ngens))
        self.weights = tuple(weights) if weights else (1,) * ngens
        if any(w < 1 for w in self.weights):
            raise ValueError("letter weights must be positive")

    def weight(self, word: Word) -> int:
        w = self.weights
        return sum(w[g] for g in word)

    def key(self, word: Word):
        p = self.precedence
        return (self.weight(word), len(word), tuple(p[g] for g in word))

    def compare(self, u: Word, v: Word) -> int:
        """-1, 0, 1 for u < v, u = v, u > v."""
        ku, kv = self.key(u), self.key(v)
        return -1 if ku < kv else (0 if ku == kv else 1)

    def to_json(self):
        return {"kind": "deglex", "precedence": list(self.precedence),
                "weights": list(self.weights)}


class NCPoly:
    """Noncommutative polynomial: finitely supported map word -> CycRat."""

    __slots__ = ("gens", "ell", "terms")

    def __init__(self, gens: tuple, ell: int, terms: dict):
        self.gens = gens
        self.ell = ell
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(gens, ell):
        return NCPoly(gens, ell, {})

    @staticmethod
    def one(gens, ell):
        return NCPoly(gens, ell, {EMPTY_WORD: CycRat.one(ell)})

    @staticmethod
    def monomial(gens, ell, word: Word, coeff=None):
        c = CycRat.one(ell) if coeff is None else coeff
        if c.is_zero():
            return NCPoly.zero(gens, ell)
        return NCPoly(gens, ell, {tuple(word): c})

    @staticmethod
    def generator(gens, ell, index: int):
        return NCPoly.monomial(gens, ell, (index,))

    @staticmethod
    def from_terms(gens, ell, items):
        terms = {}
        for word, coeff in items:
            word = tuple(word)
            acc = terms.get(word)
            coeff = acc + coeff if acc is not None else coeff
            if coeff.is_zero():
                terms.pop(word, None)
            else:
                terms[word] = coeff
        return NCPoly(gens, ell, terms)

    # -- helpers -----------------------------------------------------------

    def _check(self, other: "NCPoly"):
        if self.gens != other.gens or self.ell != other.ell:
            raise MixedAlgebras("operands over different generator tables")

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return self.terms.keys()

    def coefficient(self, word: Word) -> CycRat:
        return self.terms.get(tuple(word), CycRat.zero(self.ell))

    def leading_word(self, order: MonomialOrder) -> Word:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return max(self.terms, key=order.key)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w)
            c = acc + c if acc is not None else c
            if c.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = c
        return NCPoly(self.gens, self.ell, terms)

    def __neg__(self):
        return NCPoly(self.gens, self.ell, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CycRat):
            return self.scale(other)
        self._check(other)
        terms = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u + v
                c = cu * cv
                acc = terms.get(w)
                c = acc + c if acc is not None else c
                if c.is_zero():
                    terms.pop(w, None)
                else:
                    terms[w] = c
        return NCPoly(self.gens, self.ell, terms)

    def __rmul__(self, other):
        if isinstance(other, CycRat):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: CycRat):
        if c.is_zero():
            return NCPoly.zero(self.gens, self.ell)
        return NCPoly(self.gens, self.ell, {w: x * c for w, x in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.gens == other.gens and self.ell == other.ell and self.terms == other.terms

    def __hash__(self):
        return hash((self.gens, self.ell, frozenset(self.terms.items())))

    def __repr__(self):
        return f"NCPoly({render_poly(self)!r})"


class TensorPoly:
    """Element of the legs-fold tensor power of the free algebra.

    Keys are tuples of words, one per tensor leg; multiplication is
    componentwise: (u1 x u2)(v1 x v2) = u1 v1 x u2 v2.
    """

    __slots__ = ("gens", "ell", "legs", "terms")

    def __init__(self, gens, ell, legs: int, terms: dict):
        self.gens = gens
        self.ell = ell
        self.legs = legs
        self.terms = terms

    @staticmethod
    def zero(gens, ell, legs=2):
        return TensorPoly(gens, ell, legs, {})

    @staticmethod
    def one(gens, ell, legs=2):
        return TensorPoly(gens, ell, legs, {(EMPTY_WORD,) * legs: CycRat.one(ell)})

    @staticmethod
    def monomial(gens, ell, words, coeff=None):
        c = CycRat.one(ell) if coeff is None else coeff
        if c.is_zero():
            return TensorPoly.zero(gens, ell, len(words))
        return TensorPoly(gens, ell, len(words), {tuple(tuple(w) for w in words): c})

    @staticmethod
    def from_terms(gens, ell, legs, items):
        terms = {}
        for key, coeff in items:
            key = tuple(tuple(w) for w in key)
            acc = terms.get(key)
            coeff = acc + coeff if acc is not None else coeff
            if coeff.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = coeff
        return TensorPoly(gens, ell, legs, terms)

    def _check(self, other):
        if (self.gens != other.gens or self.ell != other.ell
                or self.legs != other.legs):
            raise MixedAlgebras("tensor operands incompatible")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            acc = terms.get(k)
            c = acc + c if acc is not None else c
            if c.is_zero():
                terms.pop(k, None)
            else:
                terms[k] = c
        return TensorPoly(self.gens, self.ell, self.legs, terms)

    def __neg__(self):
        return TensorPoly(self.gens, self.ell, self.legs,
                          {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CycRat):
            return self.scale(other)
        self._check(other)
        terms = {}
        for ku, cu in self.terms.items():
            for kv, cv in other.terms.items():
                k = tuple(u + v for u, v in zip(ku, kv))
                c = cu * cv
                acc = terms.get(k)
                c = acc + c if acc is not None else c
                if c.is_zero():
                    terms.pop(k, None)
                else:
                    terms[k] = c
        return TensorPoly(self.gens, self.ell, self.legs, terms)

    def __rmul__(self, other):
        if isinstance(other, CycRat):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: CycRat):
        if c.is_zero():
            return TensorPoly.zero(self.gens, self.ell, self.legs)
        return TensorPoly(self.gens, self.ell, self.legs,
                          {k: x * c for k, x in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return (self.gens == other.gens and self.ell == other.ell
                and self.legs == other.legs and self.terms == other.terms)

    def __repr__(self):
        body = " + ".join(
            f"({c.render()})*" + " (x) ".join(_render_word_named(self.gens, w) or "1" for w in k)
            for k, c in sorted(self.terms.items())
        )
        return f"TensorPoly({body or '0'!r})"

    def expand_leg(self, leg: int, images) -> "TensorPoly":
        """Replace tensor leg `leg` by its image under a word -> TensorPoly map.

        The image tensor's legs are spliced in place, so the result has
        self.legs + images_legs - 1 legs.  Used for (Delta x id) style maps.
        """
        out_terms = {}
        out_legs = None
        for key, coeff in self.terms.items():
            img = images(key[leg])
            if out_legs is None:
                out_legs = self.legs + img.legs - 1
            for ikey, icoeff in img.terms.items():
                k = key[:leg] + ikey + key[leg + 1:]
                c = coeff * icoeff
                acc = out_terms.get(k)
                c = acc + c if acc is not None else c
                if c.is_zero():
                    out_terms.pop(k, None)
                else:
                    out_terms[k] = c
        if out_legs is None:
            out_legs = self.legs + 1  # zero tensor; leg count of Delta-expansion
        return TensorPoly(self.gens, self.ell, out_legs, out_terms)


# -- rendering and parsing ---------------------------------------------------


def _render_word_named(gens, word: Word) -> str:
    if not word:
        return ""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = gens[word[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def render_poly(p: NCPoly, order: MonomialOrder | None = None) -> str:
    """Render as e.g. "q^2*a*b - 1"; words in descending order when given."""
    if p.is_zero():
        return "0"
    words = sorted(p.terms, key=(order.key if order else lambda w: (len(w), w)),
                   reverse=True)
    parts = []
    for w in words:
        c = p.terms[w]
        mono = _render_word_named(p.gens, w)
        s = c.render()
        composite = (" + " in s) or (" - " in s)
        if not mono:
            body = f"({s})" if composite else s
        elif s == "1":
            body = mono
        elif s == "-1":
            body = f"-{mono}"
        else:
            body = (f"({s})*{mono}" if composite else f"{s}*{mono}")
        parts.append(body)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


_TOKEN = re.compile(r"\s*(\(|\)|\^|\*|\+|-|/|[0-9]+|[A-Za-z_][A-Za-z_0-9]*)")


def parse_poly(text: str, gens, ell: int) -> NCPoly:
    """Parse the render_poly syntax back into an NCPoly."""
    name_to_idx = {name: i for i, name in enumerate(gens)}
    result = NCPoly.zero(gens, ell)
    for sign, term in _split_top_terms(text):
        word, coeff = _parse_term(term, name_to_idx, ell)
        if sign < 0:
            coeff = -coeff
        result = result + NCPoly.monomial(gens, ell, word, coeff)
    return result


def _split_top_terms(text: str):
    terms, depth, cur, sign = [], 0, "", 1
    prev_op = True
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and not prev_op and cur.strip():
            terms.append((sign, cur.strip()))
            sign = 1 if ch == "+" else -1
            cur = ""
            prev_op = True
            continue
        if ch == "-" and prev_op and depth == 0:
            sign = -sign
            continue
        if ch == "+" and prev_op and depth == 0:
            continue
        if ch.strip():
            prev_op = ch in "*^/("
        cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    return terms


def _parse_term(term: str, name_to_idx, ell: int):
    word = []
    scalar_parts = []
    for factor in _split_factors(term):
        factor = factor.strip()
        if not factor:
            continue
        if factor.startswith("("):
            scalar_parts.append(factor)
            continue
        base, _, exp = factor.partition("^")
        base = base.strip()
        if base in name_to_idx:
            k = int(exp) if exp else 1
            word.extend([name_to_idx[base]] * k)
        else:
            scalar_parts.append(factor)
    coeff = CycRat.one(ell)
    for s in scalar_parts:
        coeff = coeff * parse_scalar(ell, s)
    return tuple(word), coeff


def _split_factors(term: str):
    factors, depth, cur = [], 0, ""
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            factors.append(cur)
            cur = ""
        else:
            cur += ch
    factors.append(cur)
    return factors
