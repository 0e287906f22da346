"""Confluent rewriting modulo oriented relations in the free algebra.

A Presentation owns an interreduced, bounded-completed rule set.  Rules
always rewrite a word to a polynomial that is strictly smaller under the
presentation's monomial order, so rewriting terminates unconditionally;
bounded overlap completion (diamond lemma) then makes normal forms unique
for every word up to the completion bound.  Irreducible words of length n
are exactly the dimension-n basis of the quotient whenever n is below the
bound, and the irreducible language is closed under subwords, which makes
an empty length conclusive for finite dimensionality.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field

from .cyclo import CycRat
from .errors import CompletionFailure
from .ncalg import (EMPTY_WORD, MonomialOrder, NCPoly, TensorPoly, parse_poly,
                    render_poly, _render_word_named)

DEFAULT_COMPLETION_BOUND = 8
DEFAULT_MAX_RULES = 30000


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple
    rhs: NCPoly


class Presentation:
    """Generators, monomial order, and a completed oriented rule set."""

    def __init__(self, gens, order: MonomialOrder, ell: int, rules: dict,
                 defining, parity: str, q: CycRat | None,
                 completion_bound: int, collapsed: bool, label: str = ""):
        self.gens = tuple(gens)
        self.order = order
        self.ell = ell              # conductor of the scalar field
        self.q = q                  # distinguished root of unity, if any
        self.parity = parity
        self.rules = rules          # lhs word -> rhs terms dict
        self.defining = list(defining)
        self.completion_bound = completion_bound
        self.collapsed = collapsed
        self.label = label
        self._maxlhs = max((len(w) for w in rules), default=0)
        self._nf_cache: dict = {}

    # -- vocabulary ----------------------------------------------------------

    def zero(self) -> NCPoly:
        return NCPoly.zero(self.gens, self.ell)

    def one(self) -> NCPoly:
        return NCPoly.one(self.gens, self.ell)

    def gen(self, name_or_index) -> NCPoly:
        idx = (name_or_index if isinstance(name_or_index, int)
               else self.gens.index(name_or_index))
        return NCPoly.generator(self.gens, self.ell, idx)

    def poly(self, text: str) -> NCPoly:
        return parse_poly(text, self.gens, self.ell)

    def scalar(self, value) -> CycRat:
        return CycRat.from_rational(self.ell, value)

    def rule_list(self):
        return [RewriteRule(lhs, NCPoly(self.gens, self.ell, dict(rhs)))
                for lhs, rhs in sorted(self.rules.items(),
                                       key=lambda kv: self.order.key(kv[0]))]

    # -- reduction ------------------------------------------------------------

    def find_redex(self, word):
        """Leftmost position, largest lhs first; None when irreducible."""
        rules = self.rules
        maxlen = self._maxlhs
        n = len(word)
        for i in range(n):
            top = maxlen if maxlen < n - i else n - i
            for L in range(top, 0, -1):
                cand = word[i:i + L]
                if cand in rules:
                    return i, L, cand
        return None

    def is_irreducible(self, word) -> bool:
        return not self.collapsed and self.find_redex(word) is None

    def nf_word_terms(self, word) -> dict:
        """Normal form of a single word, as a terms dict (cached)."""
        if self.collapsed:
            return {}
        cache = self._nf_cache
        hit = cache.get(word)
        if hit is not None:
            return hit
        one = CycRat.one(self.ell)
        out: dict = {}
        pending = [(word, one)]
        while pending:
            w, c = pending.pop()
            hit = cache.get(w)
            if hit is not None:
                for u, cu in hit.items():
                    acc = out.get(u)
                    v = acc + cu * c if acc is not None else cu * c
                    if v.is_zero():
                        out.pop(u, None)
                    else:
                        out[u] = v
                continue
            redex = self.find_redex(w)
            if redex is None:
                acc = out.get(w)
                v = acc + c if acc is not None else c
                if v.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = v
                continue
            i, L, lhs = redex
            prefix, suffix = w[:i], w[i + L:]
            for t, ct in self.rules[lhs].items():
                pending.append((prefix + t + suffix, ct * c))
        cache[word] = out
        return out

    def nf_terms(self, terms: dict) -> dict:
        out: dict = {}
        for w, c in terms.items():
            for u, cu in self.nf_word_terms(w).items():
                acc = out.get(u)
                v = acc + cu * c if acc is not None else cu * c
                if v.is_zero():
                    out.pop(u, None)
                else:
                    out[u] = v
        return out

    # -- JSON -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "generators": list(self.gens),
            "order": self.order.to_json(),
            "ell": self.ell,
            "q": self.q.render() if self.q is not None else None,
            "parity": self.parity,
            "label": self.label,
            "completion_bound": self.completion_bound,
            "collapsed": self.collapsed,
            "rules": [
                {"lhs": _render_word_named(self.gens, r.lhs) or "1",
                 "rhs": render_poly(r.rhs, self.order)}
                for r in self.rule_list()
            ],
            "defining": [render_poly(p, self.order) for p in self.defining],
        }


def presentation_from_json(doc: dict) -> Presentation:
    """Rebuild a presentation from its to_json document (relations are
    re-oriented and re-completed to the recorded bound)."""
    from .cyclo import parse_scalar

    gens = tuple(doc["generators"])
    order_doc = doc.get("order", {})
    order = MonomialOrder(len(gens),
                          precedence=order_doc.get("precedence"),
                          weights=order_doc.get("weights"))
    ell = doc["ell"]
    q = parse_scalar(ell, doc["q"]) if doc.get("q") else None
    relations = [parse_poly(text, gens, ell) for text in doc["defining"]]
    return build_presentation(gens, order, relations, ell, q,
                              doc.get("parity", "generic"),
                              doc.get("completion_bound",
                                      DEFAULT_COMPLETION_BOUND),
                              label=doc.get("label", ""))


def normal_form(pres: Presentation, p):
    """Normal form of an NCPoly, or legwise normal form of a TensorPoly."""
    if isinstance(p, TensorPoly):
        return tensor_normal_form(pres, p)
    if pres.collapsed:
        return pres.zero()
    return NCPoly(pres.gens, pres.ell, pres.nf_terms(p.terms))


def tensor_normal_form(pres: Presentation, t: TensorPoly) -> TensorPoly:
    if pres.collapsed:
        return TensorPoly.zero(pres.gens, pres.ell, t.legs)
    out: dict = {}
    for key, c in t.terms.items():
        parts = [pres.nf_word_terms(w) for w in key]
        keys = [key[:0]]
        coeffs = [c]
        for part in parts:
            nkeys, ncoeffs = [], []
            for k0, c0 in zip(keys, coeffs):
                for u, cu in part.items():
                    nkeys.append(k0 + (u,))
                    ncoeffs.append(c0 * cu)
            keys, coeffs = nkeys, ncoeffs
        for k0, c0 in zip(keys, coeffs):
            acc = out.get(k0)
            v = acc + c0 if acc is not None else c0
            if v.is_zero():
                out.pop(k0, None)
            else:
                out[k0] = v
    return TensorPoly(pres.gens, pres.ell, t.legs, out)


# -- completion ----------------------------------------------------------------


class _Completer:
    def __init__(self, gens, order, ell, bound, max_rules):
        self.gens = gens
        self.order = order
        self.ell = ell
        self.bound = bound
        self.max_rules = max_rules
        self.rules: dict = {}
        self.maxlhs = 0
        self.cache: dict = {}
        self.version = 0
        # cache entries older than this saw a rule retirement and may no
        # longer be justified by the current rule set alone
        self.retire_floor = 0
        self.agenda: list = []
        self.counter = 0
        self.eqs = deque()
        self.collapsed = False

    # reduction against the evolving rule set, with stale-entry revalidation
    def find_redex(self, word):
        rules = self.rules
        n = len(word)
        maxlen = self.maxlhs
        for i in range(n):
            top = maxlen if maxlen < n - i else n - i
            for L in range(top, 0, -1):
                if word[i:i + L] in rules:
                    return i, L, word[i:i + L]
        return None

    def nf_word(self, word) -> dict:
        entry = self.cache.get(word)
        if entry is not None and entry[0] == self.version:
            return entry[1]
        # an entry written after the last retirement saw only rule additions
        # since, so it is still congruent mod the current ideal and can seed
        # the reduction; older entries may cite retired rules and must be
        # discarded (seeding them back would let a retired rule's equation
        # cancel against itself and silently shrink the ideal)
        if entry is not None and entry[0] >= self.retire_floor:
            pending = [(w, c) for w, c in entry[1].items()]
        else:
            pending = [(word, CycRat.one(self.ell))]
        out: dict = {}
        while pending:
            w, c = pending.pop()
            entry = self.cache.get(w)
            if entry is not None:
                ever, eterms = entry
                if ever == self.version:
                    for u, cu in eterms.items():
                        acc = out.get(u)
                        v = acc + cu * c if acc is not None else cu * c
                        if v.is_zero():
                            out.pop(u, None)
                        else:
                            out[u] = v
                    continue
                # older but post-retirement entries are congruent though not
                # necessarily reduced: usable as seeds unless they are the
                # identity on w (all their words are then strictly smaller)
                if ever >= self.retire_floor and not (
                        len(eterms) == 1 and w in eterms and eterms[w].is_one()):
                    for u, cu in eterms.items():
                        pending.append((u, cu * c))
                    continue
            redex = self.find_redex(w)
            if redex is None:
                acc = out.get(w)
                v = acc + c if acc is not None else c
                if v.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = v
                continue
            i, L, lhs = redex
            prefix, suffix = w[:i], w[i + L:]
            for t, ct in self.rules[lhs].items():
                pending.append((prefix + t + suffix, ct * c))
        self.cache[word] = (self.version, out)
        return out

    def nf_terms(self, terms: dict) -> dict:
        out: dict = {}
        for w, c in terms.items():
            for u, cu in self.nf_word(w).items():
                acc = out.get(u)
                v = acc + cu * c if acc is not None else cu * c
                if v.is_zero():
                    out.pop(u, None)
                else:
                    out[u] = v
        return out

    def run(self, relations):
        for rel in relations:
            self.eqs.append(dict(rel))
        self._drain_eqs()
        while self.agenda and not self.collapsed:
            _, _, w, l1, l2, k = heapq.heappop(self.agenda)
            if l1 not in self.rules or l2 not in self.rules:
                continue
            self._process_overlap(w, l1, l2, k)
            self._drain_eqs()

    def _drain_eqs(self):
        while self.eqs and not self.collapsed:
            self._orient(self.eqs.popleft())

    def _process_overlap(self, w, l1, l2, k):
        pos = len(l1) - k
        suffix = w[len(l1):]
        prefix = w[:pos]
        t1: dict = {}
        for t, c in self.rules[l1].items():
            word = t + suffix
            acc = t1.get(word)
            v = acc + c if acc is not None else c
            t1[word] = v
        t2: dict = {}
        for t, c in self.rules[l2].items():
            word = prefix + t
            acc = t2.get(word)
            v = acc + c if acc is not None else c
            t2[word] = v
        diff = self.nf_terms(t1)
        for u, cu in self.nf_terms(t2).items():
            acc = diff.get(u)
            v = acc - cu if acc is not None else -cu
            if v.is_zero():
                diff.pop(u, None)
            else:
                diff[u] = v
        if diff:
            self._orient(diff)

    def _orient(self, terms: dict):
        terms = self.nf_terms(terms)
        if not terms:
            return
        if len(terms) == 1 and EMPTY_WORD in terms:
            # the ideal contains a nonzero scalar: the quotient is zero
            self.collapsed = True
            self.rules = {}
            return
        lead = max(terms, key=self.order.key)
        c = terms[lead]
        neg_inv = -c.inverse()
        rhs = {w: x * neg_inv for w, x in terms.items() if w != lead}
        self._add_rule(lead, rhs)

    def _add_rule(self, lead, rhs):
        if len(self.rules) >= self.max_rules:
            raise CompletionFailure(f"rule cap {self.max_rules} reached")
        # retire rules whose lhs contains the new lhs; their content re-enters
        # the equation queue and gets re-oriented against the tighter system
        doomed = [L for L in self.rules
                  if len(L) >= len(lead) and _contains(L, lead)]
        for L in doomed:
            old = self.rules.pop(L)
            eq = {L: CycRat.one(self.ell)}
            for w, x in old.items():
                acc = eq.get(w)
                v = acc - x if acc is not None else -x
                if v.is_zero():
                    eq.pop(w, None)
                else:
                    eq[w] = v
            self.eqs.append(eq)
        self.rules[lead] = rhs
        if len(lead) > self.maxlhs:
            self.maxlhs = len(lead)
        self.version += 1
        if doomed:
            self.retire_floor = self.version
        for other in list(self.rules):
            self._schedule_overlaps(lead, other)
            if other != lead:
                self._schedule_overlaps(other, lead)

    def _schedule_overlaps(self, l1, l2):
        max_k = min(len(l1), len(l2)) - 1
        for k in range(1, max_k + 1):
            if l1[-k:] == l2[:k]:
                w = l1 + l2[k:]
                if len(w) <= self.bound:
                    self.counter += 1
                    heapq.heappush(self.agenda, (len(w), self.counter, w, l1, l2, k))


def _contains(haystack, needle) -> bool:
    n, m = len(haystack), len(needle)
    if m > n:
        return False
    first = needle[0]
    for i in range(n - m + 1):
        if haystack[i] == first and haystack[i:i + m] == needle:
            return True
    return False


def build_presentation(gens, order, relations, ell, q=None, parity="generic",
                       complete_to=DEFAULT_COMPLETION_BOUND,
                       max_rules=DEFAULT_MAX_RULES, label="") -> Presentation:
    """Orient relations, interreduce, and complete overlaps up to the bound."""
    comp = _Completer(tuple(gens), order, ell, complete_to, max_rules)
    comp.run([dict(r.terms) for r in relations])
    rules = {}
    if not comp.collapsed:
        # canonicalize right-hand sides against the final rule set
        for lhs in sorted(comp.rules, key=order.key):
            rules[lhs] = comp.nf_terms(comp.rules[lhs])
        for lhs in rules:
            for other in rules:
                if lhs != other and _contains(other, lhs):
                    raise CompletionFailure("interreduction invariant broken")
    return Presentation(gens, order, ell, rules, relations, parity, q,
                        complete_to, comp.collapsed, label)


def quotient_presentation(pres: Presentation, extra_relations, complete_to=None,
                          label="") -> Presentation:
    """Quotient by appending generators of a two-sided ideal, then recomplete."""
    bound = complete_to if complete_to is not None else pres.completion_bound
    rels = pres.defining + [normal_form(pres, r) for r in extra_relations]
    rels = [r for r in rels if not r.is_zero()]
    return build_presentation(pres.gens, pres.order, rels, pres.ell, pres.q,
                              pres.parity, bound, label=label or pres.label)


# -- confluence --------------------------------------------------------------


@dataclass
class OverlapReport:
    word: tuple
    lhs1: tuple
    lhs2: tuple
    difference: NCPoly


def check_confluence(pres: Presentation, max_len: int) -> list[OverlapReport]:
    """All unresolved overlap ambiguities with overlap word length <= max_len."""
    if pres.collapsed:
        return []
    unresolved = []
    lhss = list(pres.rules)
    for l1 in lhss:
        for l2 in lhss:
            max_k = min(len(l1), len(l2)) - 1
            for k in range(1, max_k + 1):
                if l1[-k:] != l2[:k]:
                    continue
                w = l1 + l2[k:]
                if len(w) > max_len:
                    continue
                pos = len(l1) - k
                t1 = {t + w[len(l1):]: c for t, c in pres.rules[l1].items()}
                t2 = {w[:pos] + t: c for t, c in pres.rules[l2].items()}
                diff = pres.nf_terms(t1)
                for u, cu in pres.nf_terms(t2).items():
                    acc = diff.get(u)
                    v = acc - cu if acc is not None else -cu
                    if v.is_zero():
                        diff.pop(u, None)
                    else:
                        diff[u] = v
                if diff:
                    unresolved.append(OverlapReport(
                        w, l1, l2, NCPoly(pres.gens, pres.ell, diff)))
    return unresolved


# -- basis enumeration and dimension ------------------------------------------


def enumerate_basis(pres: Presentation, max_len: int) -> list[list[tuple]]:
    """Irreducible words grouped by length, lengths 0..max_len."""
    if pres.collapsed:
        return [[] for _ in range(max_len + 1)]
    lhs_lengths = sorted({len(w) for w in pres.rules})
    levels = [[EMPTY_WORD] if EMPTY_WORD not in pres.rules else []]
    ngens = len(pres.gens)
    for _ in range(max_len):
        nxt = []
        for w in levels[-1]:
            for g in range(ngens):
                w2 = w + (g,)
                n = len(w2)
                # w irreducible, so only suffixes ending at the last letter matter
                reducible = False
                for L in lhs_lengths:
                    if L > n:
                        break
                    if w2[n - L:] in pres.rules:
                        reducible = True
                        break
                if not reducible:
                    nxt.append(w2)
        levels.append(nxt)
    return levels


@dataclass
class DimensionResult:
    finite: bool
    value: int                  # total dimension, or count seen up to the probe
    counts: list[int] = field(default_factory=list)
    provisional: bool = False

    def __repr__(self):
        kind = "Finite" if self.finite else "InfiniteAtLeast"
        flag = ", provisional" if self.provisional else ""
        return f"{kind}({self.value}{flag})"


def dimension(pres: Presentation, probe_bound: int = 10) -> DimensionResult:
    """Count irreducible words until a length is empty (then conclusive)."""
    if pres.collapsed:
        return DimensionResult(True, 0, [0])
    levels = enumerate_basis(pres, probe_bound)
    counts, total = [], 0
    for n, level in enumerate(levels):
        counts.append(len(level))
        total += len(level)
        if not level:
            provisional = n > pres.completion_bound
            return DimensionResult(True, total, counts, provisional)
    return DimensionResult(False, total, counts,
                           provisional=probe_bound > pres.completion_bound)


def basis_words(pres: Presentation, probe_bound: int = 10) -> list[tuple]:
    """Sorted basis of a finite-dimensional quotient."""
    from .errors import NotFiniteDimensional

    if pres.collapsed:
        return []
    levels = enumerate_basis(pres, probe_bound)
    out = []
    for level in levels:
        if not level:
            return sorted(out, key=pres.order.key)
        out.extend(level)
    raise NotFiniteDimensional(
        f"no empty length up to probe bound {probe_bound}")
