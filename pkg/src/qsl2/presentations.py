"""Canonical constructors for every algebra in the catalog.

The SL2-type presentations use the letter-weighted deglex order (a, d heavy)
so that the determinant relation orients as ad -> 1 + q bc and the
irreducible words are exactly the ordered monomials a^l b^m c^s and
b^m c^s d^t.  The classical coordinate ring uses plain deglex.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .cyclo import CycRat, multiplicative_order
from .errors import ParityMismatch, QSL2Error
from .exactla import Echelon, kernel_of_columns
from .hopf import NamedAlgebra, named_algebra
from .ncalg import MonomialOrder, NCPoly, TensorPoly
from .rewrite import (DEFAULT_COMPLETION_BOUND, build_presentation,
                      enumerate_basis, normal_form)

ABCD = ("a", "b", "c", "d")
XGENS = ("x11", "x12", "x21", "x22")
A, B, C, D = 0, 1, 2, 3


def _sl2_order() -> MonomialOrder:
    return MonomialOrder(4, weights=(2, 1, 1, 2))


def _sl2_relations(ell: int, q: CycRat) -> list[NCPoly]:
    qi = q.inverse()
    mono = lambda w, c=None: NCPoly.monomial(ABCD, ell, w, c)
    one = NCPoly.one(ABCD, ell)
    return [
        mono((A, B)) - mono((B, A), q),
        mono((B, C)) - mono((C, B)),
        mono((A, C)) - mono((C, A), q),
        mono((A, D)) - mono((D, A)) - mono((B, C), q - qi),
        mono((B, D)) - mono((D, B), q),
        mono((C, D)) - mono((D, C), q),
        mono((A, D)) - mono((B, C), q) - one,
    ]


def _sl2_hopf(ell: int, q: CycRat):
    tens = lambda uv, c=None: TensorPoly.monomial(ABCD, ell, uv, c)
    mono = lambda w, c=None: NCPoly.monomial(ABCD, ell, w, c)
    delta = {
        A: tens(((A,), (A,))) + tens(((B,), (C,))),
        B: tens(((A,), (B,))) + tens(((B,), (D,))),
        C: tens(((C,), (A,))) + tens(((D,), (C,))),
        D: tens(((C,), (B,))) + tens(((D,), (D,))),
    }
    counit = {
        A: CycRat.one(ell), B: CycRat.zero(ell),
        C: CycRat.zero(ell), D: CycRat.one(ell),
    }
    antipode = {
        A: mono((D,)),
        B: mono((B,), -q.inverse()),
        C: mono((C,), -q),
        D: mono((A,)),
    }
    return delta, counit, antipode


def oq_sl2(ell: int, conductor: int | None = None,
           complete_to: int = DEFAULT_COMPLETION_BOUND) -> NamedAlgebra:
    """The q-deformed coordinate algebra at a primitive ell-th root, ell >= 3."""
    if ell <= 2:
        raise QSL2Error("the generic presentation needs ell >= 3; "
                        "use o_minus1_sl2 for q = -1")
    cond = conductor or ell
    if cond % ell:
        raise QSL2Error(f"conductor {cond} does not contain an order-{ell} root")
    q = CycRat.q_power(cond, cond // ell)
    parity = "odd" if ell % 2 else "even"
    pres = build_presentation(ABCD, _sl2_order(), _sl2_relations(cond, q),
                              cond, q, parity, complete_to,
                              label=f"oq-sl2(ell={ell})")
    delta, counit, antipode = _sl2_hopf(cond, q)
    return named_algebra(pres, delta, counit, antipode, pres.label)


def o_minus1_sl2(conductor: int = 2,
                 complete_to: int = DEFAULT_COMPLETION_BOUND) -> NamedAlgebra:
    """The q = -1 coordinate algebra; relations specialize the generic ones."""
    if conductor % 2:
        conductor *= 2
    q = CycRat.q_power(conductor, conductor // 2)
    pres = build_presentation(ABCD, _sl2_order(), _sl2_relations(conductor, q),
                              conductor, q, "minus_one", complete_to,
                              label="o-minus1-sl2")
    delta, counit, antipode = _sl2_hopf(conductor, q)
    return named_algebra(pres, delta, counit, antipode, pres.label)


def sl2_algebra(parity: str, ell: int, conductor: int | None = None,
                complete_to: int = DEFAULT_COMPLETION_BOUND) -> NamedAlgebra:
    if parity == "minus_one":
        return o_minus1_sl2(conductor or 2, complete_to)
    return oq_sl2(ell, conductor, complete_to)


def classical_sl2(conductor: int = 1,
                  complete_to: int = DEFAULT_COMPLETION_BOUND) -> NamedAlgebra:
    """Commutative coordinate ring of SL2 with its standard Hopf maps."""
    ell = conductor
    mono = lambda w, c=None: NCPoly.monomial(XGENS, ell, w, c)
    rels = [mono((j, i)) - mono((i, j))
            for i in range(4) for j in range(i + 1, 4)]
    rels.append(mono((0, 3)) - mono((1, 2)) - NCPoly.one(XGENS, ell))
    pres = build_presentation(XGENS, MonomialOrder(4), rels, ell, None,
                              "classical", complete_to, label="classical-sl2")

    def entry(i, j):
        return 2 * (i - 1) + (j - 1)

    delta = {}
    counit = {}
    antipode_imgs = {0: mono((3,)), 1: -mono((1,)), 2: -mono((2,)), 3: mono((0,))}
    for i in (1, 2):
        for j in (1, 2):
            g = entry(i, j)
            t = TensorPoly.zero(XGENS, ell)
            for s in (1, 2):
                t = t + TensorPoly.monomial(XGENS, ell,
                                            ((entry(i, s),), (entry(s, j),)))
            delta[g] = t
            counit[g] = CycRat.one(ell) if i == j else CycRat.zero(ell)
    return named_algebra(pres, delta, counit, antipode_imgs, pres.label)


# all ten unordered products of two coordinates; the nine below generate
# O(PSL2), the tenth (x11*x22) is their combination via the determinant
QUAD_PAIRS_ALL = tuple(combinations_with_replacement(range(4), 2))
QUAD_PAIRS = tuple(p for p in QUAD_PAIRS_ALL if p != (0, 3))


class PSL2Model:
    """Even part of O(SL2), presented degreewise by exact spans.

    There is no finite presentation here: the model is the list of
    even-length irreducible words per degree plus the nine quadratic
    generators, with membership and rank questions answered by exact
    linear algebra.  The parity grading is intact because every defining
    relation is parity-homogeneous.
    """

    def __init__(self, max_deg: int = 8, conductor: int = 1):
        self.alg = classical_sl2(conductor, complete_to=max(8, max_deg + 2))
        self.max_deg = max_deg
        self.levels = enumerate_basis(self.alg.pres, max_deg)

    def even_basis(self, deg: int) -> list:
        if deg % 2 or deg > self.max_deg:
            raise ValueError("even degrees up to max_deg only")
        return list(self.levels[deg])

    def pair_poly(self, pair) -> NCPoly:
        return normal_form(self.alg.pres,
                           NCPoly.monomial(XGENS, self.alg.ell, tuple(pair)))

    def quad_component_rank(self) -> int:
        """Rank of the ten quadratic products in the degree-2 component."""
        ech = Echelon()
        for pair in QUAD_PAIRS_ALL:
            vec = {w: c for w, c in self.pair_poly(pair).terms.items()
                   if len(w) == 2}
            ech.add(vec)
        return ech.dim

    def contains(self, p: NCPoly) -> bool:
        """Membership in the even part: normal form supported on even words."""
        nf = normal_form(self.alg.pres, p)
        return all(len(w) % 2 == 0 for w in nf.terms)

    def products(self, count: int):
        """All multisets of `count` quadratic generators with their classes."""
        out = []
        for combo in combinations_with_replacement(QUAD_PAIRS, count):
            word = tuple(g for pair in combo for g in pair)
            out.append((combo, normal_form(
                self.alg.pres, NCPoly.monomial(XGENS, self.alg.ell, word))))
        return out

    def dependencies(self, count: int):
        """Exact linear dependencies among degree-`count` generator products."""
        prods = self.products(count)
        cols = [dict(p.terms) for _, p in prods]
        kernel = kernel_of_columns(cols, self.alg.ell)
        return [(combo_vec, prods) for combo_vec in kernel]


def psl2_model(max_deg: int = 8, conductor: int = 1) -> PSL2Model:
    return PSL2Model(max_deg, conductor)


# -- quotient ideals and distinguished subalgebras ------------------------------


def quotient_ideal(kind: str, ell: int, conductor: int | None = None) -> list[NCPoly]:
    """Generator list of the finite-quotient ideal for the given parity."""
    cond = conductor or ell
    mono = lambda w, c=None: NCPoly.monomial(ABCD, cond, w, c)
    one = NCPoly.one(ABCD, cond)
    if kind == "widehat":
        if ell % 2 == 0 or ell <= 2:
            raise ParityMismatch("widehat needs odd ell > 2")
        return [mono((A,) * ell) - one, mono((B,) * ell),
                mono((C,) * ell), mono((D,) * ell) - one]
    if kind == "overline":
        if ell % 2 or ell == 2:
            raise ParityMismatch("overline needs even ell = 2m with m != 1")
        q = CycRat.q_power(cond, cond // ell)
        m = multiplicative_order(q * q)
        return [mono((A,) * (2 * m)) - one, mono((B,) * m),
                mono((C,) * m), mono((D,) * (2 * m)) - one]
    raise QSL2Error(f"unknown quotient ideal kind {kind!r}")


# image of the nine quadratic generators (plus the determinant pair) inside
# the q = -1 algebra: pair of coordinate indices -> word with sign
PHI_MINUS1 = {
    (0, 0): ((A, A), 1),
    (0, 1): ((A, B), 1),
    (1, 1): ((B, B), -1),
    (0, 2): ((A, C), 1),
    (1, 2): ((B, C), -1),
    (1, 3): ((B, D), -1),
    (2, 2): ((C, C), -1),
    (2, 3): ((C, D), -1),
    (3, 3): ((D, D), 1),
    (0, 3): ((A, D), 1),
}


def phi_minus1_images(alg: NamedAlgebra) -> dict:
    out = {}
    for pair, (word, sign) in PHI_MINUS1.items():
        out[pair] = NCPoly.monomial(ABCD, alg.ell, word,
                                    CycRat.from_rational(alg.ell, sign))
    return out


def phi_even_images(alg: NamedAlgebra) -> dict:
    """Quadratic pair -> x^m y^m, signed like the q = -1 matrix when m is odd.

    The m-th powers of the coordinates commute up to (-1)^m, so for odd m
    the embedding needs the same sign pattern as the q = -1 case (minus on
    pairs whose first sorted factor is off-diagonal); for even m the
    unsigned map is the algebra map.
    """
    m = multiplicative_order(alg.pres.q * alg.pres.q)
    signed = m % 2 == 1
    out = {}
    for pair in QUAD_PAIRS_ALL:
        sign = -1 if signed and pair[0] in (1, 2) else 1
        out[pair] = NCPoly.monomial(ABCD, alg.ell,
                                    (pair[0],) * m + (pair[1],) * m,
                                    CycRat.from_rational(alg.ell, sign))
    return out


def verify_psl2_embedding(model: PSL2Model, target: NamedAlgebra, images: dict,
                          max_product_degree: int = 2) -> list:
    """Certify pair -> images as a Hopf map on the even-part model.

    images maps every sorted coordinate pair to an NCPoly over the target.
    Checks, degreewise, that every exact linear dependency among products of
    the nine quadratic generators maps to zero, and that Delta, counit and
    antipode match on the generators (the source values are computed from
    the matrix coalgebra: Delta(X_ij X_kl) = sum_st X_is X_kt (x) X_sj X_tl).
    """
    from .cyclo import embed_scalar
    from .hopf import CheckResult
    from .rewrite import tensor_normal_form

    results = []
    label = f"psl2-model -> {target.label}"

    def img_product(pairs, coeff) -> NCPoly:
        term = target.pres.one() * embed_scalar(coeff, target.ell)
        for pair in pairs:
            term = normal_form(target.pres, term * images[tuple(sorted(pair))])
        return term

    from .exactla import span_dim

    for count in range(1, max_product_degree + 1):
        all_dead = True
        deps = model.dependencies(count)
        for combo_vec, prods in deps:
            image = target.pres.zero()
            for idx, coeff in combo_vec.items():
                image = image + img_product(prods[idx][0], coeff)
            if not normal_form(target.pres, image).is_zero():
                all_dead = False
                break
        results.append(CheckResult(
            "psl2-map-dependencies", label, all_dead,
            f"degree {2 * count}: {len(deps)} dependencies"))
        # equal ranks of sources and images certify degreewise injectivity
        prods = model.products(count)
        src_rank = span_dim(dict(p.terms) for _, p in prods)
        img_rank = span_dim(
            dict(img_product(combo, CycRat.one(model.alg.ell)).terms)
            for combo, _ in prods)
        results.append(CheckResult(
            "psl2-map-degreewise-injective", label, src_rank == img_rank,
            f"degree {2 * count}: rank {src_rank} vs {img_rank}"))

    def rc(g):  # generator index -> matrix row/col, 1-based
        return (g // 2 + 1, g % 2 + 1)

    def entry(i, j):
        return 2 * (i - 1) + (j - 1)

    for pair in QUAD_PAIRS:
        (i, j), (k, l) = rc(pair[0]), rc(pair[1])
        lhs = target.delta(images[pair])
        rhs = TensorPoly.zero(target.gens, target.ell)
        for s in (1, 2):
            for t in (1, 2):
                left = img_product([(entry(i, s), entry(k, t))], CycRat.one(model.alg.ell))
                right = img_product([(entry(s, j), entry(t, l))], CycRat.one(model.alg.ell))
                for wu, cu in left.terms.items():
                    for wv, cv in right.terms.items():
                        rhs = rhs + TensorPoly.monomial(
                            target.gens, target.ell, (wu, wv), cu * cv)
        rhs = tensor_normal_form(target.pres, rhs)
        name = f"x{i}{j}*x{k}{l}"
        results.append(CheckResult("psl2-map-delta", label,
                                   (lhs - rhs).is_zero(), name))
        eps_src = CycRat.one(target.ell) if (i == j and k == l) else CycRat.zero(target.ell)
        results.append(CheckResult("psl2-map-counit", label,
                                   target.counit(images[pair]) == eps_src, name))
        # S(x_ij) = (-1)^(i+j) x_{3-j,3-i}, the adjugate entry
        sign = (1 if i == j else -1) * (1 if k == l else -1)
        s_src = img_product([(entry(3 - l, 3 - k), entry(3 - j, 3 - i))],
                            CycRat.from_rational(model.alg.ell, sign))
        s_tgt = target.antipode(images[pair])
        results.append(CheckResult("psl2-map-antipode", label,
                                   (s_tgt - normal_form(target.pres, s_src)).is_zero(),
                                   name))
    return results


def distinguished_subalgebra(case: str, ell: int,
                             conductor: int | None = None):
    """Generator lists of the central/normal subalgebras L, B, N."""
    cond = conductor or ell
    mono = lambda w, c=None: NCPoly.monomial(ABCD, cond, w, c)
    if case == "L_odd":
        if ell % 2 == 0 or ell <= 2:
            raise ParityMismatch("L needs odd ell > 2")
        return [mono((g,) * ell) for g in range(4)]
    if case == "B_minus1":
        words = [(A, A), (B, B), (C, C), (D, D),
                 (A, B), (A, C), (B, C), (B, D), (C, D)]
        return [mono(w) for w in words]
    if case == "N_even":
        if ell % 2 or ell == 2:
            raise ParityMismatch("N needs even ell = 2m with m != 1")
        q = CycRat.q_power(cond, cond // ell)
        m = multiplicative_order(q * q)
        return [mono((x,) * m + (y,) * m) for x in range(4) for y in range(4)]
    raise QSL2Error(f"unknown subalgebra case {case!r}")
