"""Hopf structure maps on presented algebras and the verification battery.

Every check here is an exact identity over Q(q): coproducts extend
multiplicatively, antipodes anti-multiplicatively, and each verification
reduces a concrete element to normal form and compares structurally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycRat, embed_scalar
from .errors import NotFiniteDimensional, QSL2Error
from .exactla import Echelon, kernel_of_columns
from .ncalg import EMPTY_WORD, NCPoly, TensorPoly, render_poly
from .rewrite import (Presentation, basis_words, dimension, enumerate_basis,
                      normal_form, quotient_presentation, tensor_normal_form)


@dataclass
class CheckResult:
    check: str
    subject: str
    ok: bool
    witness: str | None = None

    def to_json(self):
        out = {"check": self.check, "subject": self.subject,
               "status": "pass" if self.ok else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def all_ok(results) -> bool:
    return all(r.ok for r in results)


class HopfStructure:
    """Generator images of Delta, epsilon and S; extension is definitional."""

    def __init__(self, delta: dict, counit: dict, antipode: dict):
        self.delta = delta      # gen index -> TensorPoly (2 legs)
        self.counit = counit    # gen index -> CycRat
        self.antipode = antipode  # gen index -> NCPoly

    def to_json(self, gens):
        from .ncalg import _render_word_named
        return {
            "delta": {gens[i]: " + ".join(
                f"({c.render()})*{_render_word_named(gens, k[0]) or '1'}(x){_render_word_named(gens, k[1]) or '1'}"
                for k, c in sorted(t.terms.items()))
                for i, t in self.delta.items()},
            "counit": {gens[i]: c.render() for i, c in self.counit.items()},
            "antipode": {gens[i]: render_poly(p) for i, p in self.antipode.items()},
        }


class NamedAlgebra:
    """A presentation together with a verified Hopf structure."""

    def __init__(self, pres: Presentation, hopf: HopfStructure, label: str):
        self.pres = pres
        self.hopf = hopf
        self.label = label
        self._delta_cache: dict = {}
        self._antipode_cache: dict = {}

    @property
    def gens(self):
        return self.pres.gens

    @property
    def ell(self):
        return self.pres.ell

    # -- structure maps -----------------------------------------------------

    def delta_word(self, word) -> TensorPoly:
        cached = self._delta_cache.get(word)
        if cached is not None:
            return cached
        if not word:
            out = TensorPoly.one(self.gens, self.ell)
        else:
            out = self.delta_word(word[:-1]) * self.hopf.delta[word[-1]]
            out = tensor_normal_form(self.pres, out)
        self._delta_cache[word] = out
        return out

    def delta(self, p: NCPoly) -> TensorPoly:
        out = TensorPoly.zero(self.gens, self.ell)
        for w, c in p.terms.items():
            out = out + self.delta_word(w) * c
        return out

    def antipode_word(self, word) -> NCPoly:
        cached = self._antipode_cache.get(word)
        if cached is not None:
            return cached
        if not word:
            out = self.pres.one()
        else:
            # anti-multiplicative: S(g w') = S(w') S(g)
            out = self.antipode_word(word[1:]) * self.hopf.antipode[word[0]]
            out = normal_form(self.pres, out)
        self._antipode_cache[word] = out
        return out

    def antipode(self, p: NCPoly) -> NCPoly:
        out = self.pres.zero()
        for w, c in p.terms.items():
            out = out + self.antipode_word(w) * c
        return normal_form(self.pres, out)

    def counit_word(self, word) -> CycRat:
        out = CycRat.one(self.ell)
        for g in word:
            out = out * self.hopf.counit[g]
            if out.is_zero():
                break
        return out

    def counit(self, p: NCPoly) -> CycRat:
        out = CycRat.zero(self.ell)
        for w, c in p.terms.items():
            out = out + self.counit_word(w) * c
        return out

    def nf(self, p):
        return normal_form(self.pres, p)


def named_algebra(pres, delta, counit, antipode, label, validate=True) -> NamedAlgebra:
    alg = NamedAlgebra(pres, HopfStructure(delta, counit, antipode), label)
    if validate:
        report = check_structure_well_defined(alg)
        if not all_ok(report):
            bad = [r for r in report if not r.ok]
            raise QSL2Error(f"Hopf structure ill-defined on {label}: "
                            f"{bad[0].check} at {bad[0].witness}")
    return alg


# -- well-definedness and axioms ------------------------------------------------


def check_structure_well_defined(alg: NamedAlgebra) -> list[CheckResult]:
    """Delta, epsilon, S send every defining relation to zero."""
    results = []
    for rel in alg.pres.defining:
        text = render_poly(rel, alg.pres.order)
        d = alg.delta(rel)
        results.append(CheckResult("delta-well-defined", alg.label,
                                   d.is_zero(), text))
        e = alg.counit(rel)
        results.append(CheckResult("counit-well-defined", alg.label,
                                   e.is_zero(), text))
        s = alg.antipode(rel)
        results.append(CheckResult("antipode-well-defined", alg.label,
                                   s.is_zero(), text))
    return results


def check_axioms(alg: NamedAlgebra, sample_deg: int = 3) -> list[CheckResult]:
    """Coassociativity, counit law, antipode convolution law.

    Checked on all irreducible words up to sample_deg (generators included).
    """
    results = []
    words = [w for level in enumerate_basis(alg.pres, sample_deg) for w in level]
    for g in range(len(alg.gens)):
        w = (g,)
        if alg.pres.is_irreducible(w) and w not in words:
            words.append(w)

    def word_name(w):
        from .ncalg import _render_word_named
        return _render_word_named(alg.gens, w) or "1"

    for w in words:
        dw = alg.delta_word(w)
        left = tensor_normal_form(
            alg.pres, dw.expand_leg(0, lambda u: alg.delta_word(u)))
        right = tensor_normal_form(
            alg.pres, dw.expand_leg(1, lambda u: alg.delta_word(u)))
        if not (left - right).is_zero():
            results.append(CheckResult("coassociativity", alg.label, False, word_name(w)))
            break
    else:
        results.append(CheckResult("coassociativity", alg.label, True))

    for w in words:
        dw = alg.delta_word(w)
        lhs = alg.pres.zero()
        rhs = alg.pres.zero()
        for (u, v), c in dw.terms.items():
            lhs = lhs + NCPoly.monomial(alg.gens, alg.ell, v, c * alg.counit_word(u))
            rhs = rhs + NCPoly.monomial(alg.gens, alg.ell, u, c * alg.counit_word(v))
        target = NCPoly.monomial(alg.gens, alg.ell, w)
        if alg.nf(lhs - target).is_zero() and alg.nf(rhs - target).is_zero():
            continue
        results.append(CheckResult("counit-law", alg.label, False, word_name(w)))
        break
    else:
        results.append(CheckResult("counit-law", alg.label, True))

    for w in words:
        dw = alg.delta_word(w)
        left = alg.pres.zero()
        right = alg.pres.zero()
        for (u, v), c in dw.terms.items():
            left = left + (alg.antipode_word(u) * NCPoly.monomial(alg.gens, alg.ell, v)) * c
            right = right + (NCPoly.monomial(alg.gens, alg.ell, u) * alg.antipode_word(v)) * c
        target = alg.pres.one() * alg.counit_word(w)
        if alg.nf(left - target).is_zero() and alg.nf(right - target).is_zero():
            continue
        results.append(CheckResult("antipode-law", alg.label, False, word_name(w)))
        break
    else:
        results.append(CheckResult("antipode-law", alg.label, True))

    return results


def run_battery(alg: NamedAlgebra, sample_deg: int = 3) -> list[CheckResult]:
    return check_structure_well_defined(alg) + check_axioms(alg, sample_deg)


# -- finite models ---------------------------------------------------------------


class FiniteModel:
    """Basis-indexed tables for a finite-dimensional algebra.

    Tables are computed lazily straight from normal forms, so they agree
    with normal_form recomputation by construction; a spot check is kept in
    the test suite anyway.
    """

    def __init__(self, alg: NamedAlgebra, probe_bound: int | None = None):
        self.alg = alg
        pres = alg.pres
        bound = probe_bound or max(pres.completion_bound, 10)
        dim_res = dimension(pres, bound)
        if not dim_res.finite:
            raise NotFiniteDimensional(
                f"{alg.label}: not finite at probe bound {bound}")
        self.basis = basis_words(pres, bound)
        self.index = {w: i for i, w in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._mult: dict = {}
        self._delta: dict = {}

    def vector(self, p: NCPoly) -> dict:
        nf = normal_form(self.alg.pres, p)
        return {self.index[w]: c for w, c in nf.terms.items()}

    def word_vector(self, word) -> dict:
        return {self.index[w]: c
                for w, c in self.alg.pres.nf_word_terms(word).items()}

    def product(self, i: int, j: int) -> dict:
        key = (i, j)
        hit = self._mult.get(key)
        if hit is None:
            hit = self.word_vector(self.basis[i] + self.basis[j])
            self._mult[key] = hit
        return hit

    def delta(self, i: int) -> dict:
        hit = self._delta.get(i)
        if hit is None:
            t = self.alg.delta_word(self.basis[i])
            hit = {(self.index[u], self.index[v]): c
                   for (u, v), c in t.terms.items()}
            self._delta[i] = hit
        return hit

    def counit(self, i: int) -> CycRat:
        return self.alg.counit_word(self.basis[i])

    def antipode(self, i: int) -> dict:
        return self.vector(self.alg.antipode_word(self.basis[i]))


# -- grouplikes -------------------------------------------------------------------


@dataclass
class GrouplikeReport:
    elements: list          # NCPoly
    method: str
    complete: bool
    group_order: int | None = None

    def count(self):
        return len(self.elements)


def grouplikes(model: FiniteModel) -> GrouplikeReport:
    """All grouplike basis words, with a completeness certificate when possible.

    Certificates: (a) if every basis word is grouplike the list is complete
    over any coefficient field (orthogonality of coordinates); (b) if some
    letter-counting grading is compatible with Delta, grouplikes live in its
    degree-0 part, and (a) applies to that subcoalgebra.
    """
    alg = model.alg
    found = []
    grouplike_idx = set()
    for i, w in enumerate(model.basis):
        d = model.delta(i)
        if d == {(i, i): CycRat.one(alg.ell)} and model.counit(i).is_one():
            found.append(NCPoly.monomial(alg.gens, alg.ell, w))
            grouplike_idx.add(i)

    method = "basis-word scan with exact Delta/counit verification"
    complete = False
    if len(grouplike_idx) == model.dim:
        complete = True
        method += "; complete: every basis word is grouplike"
    else:
        # look for a Delta-compatible nonnegative letter grading whose
        # degree-0 words are exactly the grouplikes found
        eps_zero = [g for g in range(len(alg.gens))
                    if alg.hopf.counit[g].is_zero()]
        candidates = [frozenset([g]) for g in eps_zero]
        if len(eps_zero) > 1:
            candidates.append(frozenset(eps_zero))
        for letters in candidates:
            def deg(w):
                return sum(1 for g in w if g in letters)
            compatible = True
            for i, w in enumerate(model.basis):
                dw = deg(w)
                for (j, k) in model.delta(i):
                    if deg(model.basis[j]) + deg(model.basis[k]) != dw:
                        compatible = False
                        break
                if not compatible:
                    break
            if compatible:
                deg0 = {i for i, w in enumerate(model.basis) if deg(w) == 0}
                if deg0 == grouplike_idx:
                    complete = True
                    method += ("; complete: Delta-compatible grading by letters "
                               f"{{{', '.join(alg.gens[g] for g in sorted(letters))}}} "
                               "concentrates grouplikes in degree 0")
                    break

    # group closure sanity: products and antipodes of found grouplikes
    order = None
    if found:
        ok_closure = True
        words = {next(iter(g.terms)) for g in found}
        for g1 in words:
            for g2 in words:
                prod = alg.pres.nf_word_terms(g1 + g2)
                if len(prod) != 1 or next(iter(prod.values())) != 1 \
                        or next(iter(prod)) not in words:
                    ok_closure = False
        for g1 in words:
            s = alg.antipode_word(g1)
            if len(s.terms) != 1 or next(iter(s.terms)) not in words:
                ok_closure = False
        if ok_closure:
            order = len(found)
    return GrouplikeReport(found, method, complete, order)


# -- Hopf ideals ------------------------------------------------------------------


def is_hopf_ideal(alg: NamedAlgebra, gens: list[NCPoly],
                  completion_bound: int | None = None) -> list[CheckResult]:
    """Counit kills each generator; Delta and S land in the induced ideal."""
    results = []
    quot = quotient_presentation(alg.pres, gens, completion_bound,
                                 label=f"{alg.label}/J")
    for j in gens:
        text = render_poly(j, alg.pres.order)
        e = alg.counit(j)
        results.append(CheckResult("hopf-ideal-counit", alg.label,
                                   e.is_zero(), text))
        d = alg.delta(j)
        d_quot = tensor_normal_form(quot, d)
        results.append(CheckResult("hopf-ideal-delta", alg.label,
                                   d_quot.is_zero(), text))
        s = alg.antipode(j)
        s_quot = normal_form(quot, s)
        results.append(CheckResult("hopf-ideal-antipode", alg.label,
                                   s_quot.is_zero(), text))
    return results


# -- centrality and normality ------------------------------------------------------


def check_central(alg: NamedAlgebra, elements: list[NCPoly]) -> list[CheckResult]:
    results = []
    for x in elements:
        xt = render_poly(x, alg.pres.order)
        for g in range(len(alg.gens)):
            gp = alg.pres.gen(g)
            comm = alg.nf(x * gp - gp * x)
            results.append(CheckResult(
                "central", alg.label, comm.is_zero(),
                f"[{xt}, {alg.gens[g]}]"))
    return results


def subalgebra_span(alg: NamedAlgebra, elements: list[NCPoly],
                    max_degree: int) -> Echelon:
    """Exact span of products of the listed elements up to total degree."""
    ech = Echelon()
    ech.add({EMPTY_WORD: CycRat.one(alg.ell)})
    elems = [(normal_form(alg.pres, e),
              max((len(w) for w in e.terms), default=0)) for e in elements]
    frontier = [(alg.pres.one(), 0)]
    while frontier:
        nxt = []
        for p, d in frontier:
            for e, de in elems:
                if d + de > max_degree:
                    continue
                prod = normal_form(alg.pres, p * e)
                if prod.is_zero():
                    continue
                if ech.add(dict(prod.terms)):
                    nxt.append((prod, d + de))
        frontier = nxt
    return ech


def check_normal(alg: NamedAlgebra, elements: list[NCPoly],
                 degree_margin: int = 2) -> list[CheckResult]:
    """Both adjoint actions of every generator keep each element in the span."""
    results = []
    max_elem_deg = max(max((len(w) for w in e.terms), default=0)
                       for e in elements)
    span = subalgebra_span(alg, elements, max_elem_deg + degree_margin)
    for x in elements:
        xt = render_poly(x, alg.pres.order)
        for g in range(len(alg.gens)):
            dg = alg.hopf.delta[g]
            left = alg.pres.zero()
            right = alg.pres.zero()
            for (u, v), c in dg.terms.items():
                umono = NCPoly.monomial(alg.gens, alg.ell, u)
                vmono = NCPoly.monomial(alg.gens, alg.ell, v)
                left = left + (umono * x * alg.antipode_word(v)) * c
                right = right + (alg.antipode_word(u) * x * vmono) * c
            ok = (span.contains(dict(alg.nf(left).terms))
                  and span.contains(dict(alg.nf(right).terms)))
            results.append(CheckResult("normal", alg.label, ok,
                                       f"ad_{alg.gens[g]}({xt})"))
    return results


# -- morphisms ---------------------------------------------------------------------


def _map_poly(p: NCPoly, images: dict, target: NamedAlgebra) -> NCPoly:
    out = target.pres.zero()
    for w, c in p.terms.items():
        acc = target.pres.one()
        for g in w:
            acc = normal_form(target.pres, acc * images[g])
        out = out + acc * embed_scalar(c, target.ell)
    return normal_form(target.pres, out)


def _map_tensor(t: TensorPoly, images: dict, target: NamedAlgebra) -> TensorPoly:
    out = TensorPoly.zero(target.gens, target.ell)
    for (u, v), c in t.terms.items():
        pu = _map_poly(NCPoly.monomial(t.gens, t.ell, u), images, target)
        pv = _map_poly(NCPoly.monomial(t.gens, t.ell, v), images, target)
        for wu, cu in pu.terms.items():
            for wv, cv in pv.terms.items():
                out = out + TensorPoly.monomial(
                    target.gens, target.ell, (wu, wv),
                    embed_scalar(c, target.ell) * cu * cv)
    return tensor_normal_form(target.pres, out)


def verify_hopf_morphism(source: NamedAlgebra, target: NamedAlgebra,
                         images: dict, surjective_dim: int | None = None
                         ) -> list[CheckResult]:
    """images: source generator index -> NCPoly over the target.

    Checks relations map to zero and Delta/epsilon/S compatibility on
    generators; optionally certifies surjectivity by span saturation.
    """
    results = []
    label = f"{source.label} -> {target.label}"
    for rel in source.pres.defining:
        img = _map_poly(rel, images, target)
        results.append(CheckResult("morphism-relation", label, img.is_zero(),
                                   render_poly(rel, source.pres.order)))
    for g in range(len(source.gens)):
        gname = source.gens[g]
        lhs = target.delta(images[g])
        rhs = _map_tensor(source.hopf.delta[g], images, target)
        results.append(CheckResult("morphism-delta", label,
                                   (lhs - rhs).is_zero(), gname))
        e_lhs = target.counit(images[g])
        e_rhs = embed_scalar(source.hopf.counit[g], target.ell)
        results.append(CheckResult("morphism-counit", label,
                                   e_lhs == e_rhs, gname))
        s_lhs = target.antipode(images[g])
        s_rhs = _map_poly(source.hopf.antipode[g], images, target)
        results.append(CheckResult("morphism-antipode", label,
                                   (s_lhs - s_rhs).is_zero(), gname))
    if surjective_dim is not None:
        ech = Echelon()
        ech.add({EMPTY_WORD: CycRat.one(target.ell)})
        frontier = [target.pres.one()]
        while frontier:
            nxt = []
            for p in frontier:
                for g in range(len(source.gens)):
                    prod = normal_form(target.pres, p * images[g])
                    if not prod.is_zero() and ech.add(dict(prod.terms)):
                        nxt.append(prod)
            frontier = nxt
        results.append(CheckResult("morphism-surjective", label,
                                   ech.dim == surjective_dim,
                                   f"span {ech.dim} of {surjective_dim}"))
    return results


# -- coinvariants -------------------------------------------------------------------


def coinvariants(model: FiniteModel, h_pres: Presentation) -> list[dict]:
    """Basis of {x : (pi (x) id) Delta(x) = 1 (x) x}, pi = projection onto h_pres.

    h_pres must be a quotient presentation of the model's algebra, so that
    normal forms in h_pres realize pi.
    """
    one = CycRat.one(model.alg.ell)
    cols = []
    for i in range(model.dim):
        col: dict = {}
        for (j, k), c in model.delta(i).items():
            pi_j = h_pres.nf_word_terms(model.basis[j])
            for hw, hc in pi_j.items():
                key = (hw, model.basis[k])
                acc = col.get(key)
                v = acc + c * hc if acc is not None else c * hc
                if v.is_zero():
                    col.pop(key, None)
                else:
                    col[key] = v
        key = (EMPTY_WORD, model.basis[i])
        acc = col.get(key)
        v = acc - one if acc is not None else -one
        if v.is_zero():
            col.pop(key, None)
        else:
            col[key] = v
        cols.append(col)
    return kernel_of_columns(cols, model.alg.ell)
