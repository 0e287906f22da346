"""Named instances with their certified expectations: the regression surface.

Every expectation is recomputed by verify(); nothing is assumed.  Entries
return CheckResult rows shared with the verification modules, so the CLI
report schema is uniform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import CycRat
from .errors import ParamOutOfRange, UnknownEntry
from .hopf import (CheckResult, FiniteModel, all_ok, check_central,
                   check_normal, grouplikes, is_hopf_ideal, named_algebra,
                   run_battery, verify_hopf_morphism)
from .ncalg import NCPoly, TensorPoly
from .presentations import (ABCD, classical_sl2, distinguished_subalgebra,
                            oq_sl2, phi_even_images, phi_minus1_images,
                            psl2_model, quotient_ideal, sl2_algebra,
                            verify_psl2_embedding, _sl2_hopf)
from .rewrite import (check_confluence, dimension, normal_form,
                      quotient_presentation, tensor_normal_form)
from .subgroups import (GroupSpec, SubgroupDatum, construct_quotient,
                        exact_sequence_shadow, kernel_sigma_t,
                        verify_dihedral_quotient)

A, B, C, D = 0, 1, 2, 3


@dataclass
class CatalogEntry:
    name: str
    params: dict
    expected: dict
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return bool(self.results) and all_ok(self.results)

    def to_json(self):
        return {"entry": self.name, "params": self.params,
                "expected": self.expected,
                "status": "pass" if self.ok else "fail",
                "results": [r.to_json() for r in self.results]}


def _require(cond: bool, message: str):
    if not cond:
        raise ParamOutOfRange(message)


def _verify_widehat(ell: int) -> CatalogEntry:
    _require(ell % 2 == 1 and ell >= 3, "widehat-dual needs odd ell >= 3")
    entry = CatalogEntry("widehat-dual", {"ell": ell},
                         {"dimension": ell ** 3,
                          "claim": "quotient dimension is ell^3"})
    alg = oq_sl2(ell)
    ideal = quotient_ideal("widehat", ell)
    quot = quotient_presentation(alg.pres, ideal, complete_to=3 * ell,
                                 label=f"widehat-{ell}")
    res = dimension(quot, 3 * ell)
    entry.results.append(CheckResult(
        "dimension", quot.label, res.finite and res.value == ell ** 3,
        f"{res!r}, expected {ell ** 3}"))
    entry.results.append(CheckResult(
        "confluence", quot.label, check_confluence(quot, 8) == []))
    entry.results.extend(is_hopf_ideal(alg, ideal, completion_bound=3 * ell))
    return entry


def _verify_overline(ell: int) -> CatalogEntry:
    _require(ell % 2 == 0 and ell >= 4, "overline-dual needs even ell >= 4")
    m = ell // 2
    entry = CatalogEntry("overline-dual", {"ell": ell},
                         {"dimension": 2 * m ** 3,
                          "claim": "quotient dimension is 2 m^3"})
    alg = oq_sl2(ell)
    ideal = quotient_ideal("overline", ell)
    quot = quotient_presentation(alg.pres, ideal, complete_to=2 * ell + 2,
                                 label=f"overline-{ell}")
    res = dimension(quot, 2 * ell + 2)
    entry.results.append(CheckResult(
        "dimension", quot.label, res.finite and res.value == 2 * m ** 3,
        f"{res!r}, expected {2 * m ** 3}"))
    entry.results.append(CheckResult(
        "confluence", quot.label, check_confluence(quot, 8) == []))
    entry.results.extend(is_hopf_ideal(alg, ideal, completion_bound=2 * ell + 2))
    return entry


def _verify_taft(ell: int) -> CatalogEntry:
    _require(ell % 2 == 1 and ell >= 3, "taft needs odd ell >= 3")
    entry = CatalogEntry("taft", {"ell": ell},
                         {"dimension": ell ** 2, "grouplikes": ell,
                          "claim": "unipotent-line quotient: dim ell^2, "
                                   "cyclic grouplikes, skew-primitive b*a"})
    datum = SubgroupDatum(parity="odd", ell=ell, I_plus=(1,), I_minus=(),
                          gamma=GroupSpec("catalog", name="G_a"))
    cons = construct_quotient(datum)
    entry.results.append(CheckResult(
        "ambient-infinite", cons.algebra.label, not cons.dim.finite,
        repr(cons.dim)))
    entry.results.append(CheckResult(
        "dimension", cons.h_pres.label,
        cons.h_dim.finite and cons.h_dim.value == ell ** 2,
        f"{cons.h_dim!r}, expected {ell ** 2}"))
    entry.results.append(CheckResult(
        "confluence", cons.h_pres.label, check_confluence(cons.h_pres, 8) == []))
    delta, counit, antipode = _sl2_hopf(cons.h_pres.ell, cons.h_pres.q)
    taft = named_algebra(cons.h_pres, delta, counit, antipode,
                         label=f"taft-{ell}")
    model = FiniteModel(taft)
    rep = grouplikes(model)
    entry.results.append(CheckResult(
        "grouplikes", taft.label, rep.count() == ell and rep.complete,
        f"{rep.count()} found ({rep.method})"))
    # skew-primitive witness: Delta(b a) = a^2 (x) b a + b a (x) 1
    x = normal_form(cons.h_pres, taft.pres.poly("b*a"))
    lhs = taft.delta(x)
    one = CycRat.one(taft.ell)
    rhs = TensorPoly.zero(ABCD, taft.ell)
    for w, c in x.terms.items():
        rhs = rhs + TensorPoly.monomial(ABCD, taft.ell, ((A, A), w), c)
        rhs = rhs + TensorPoly.monomial(ABCD, taft.ell, (w, ()), c)
    rhs = tensor_normal_form(cons.h_pres, rhs)
    entry.results.append(CheckResult(
        "skew-primitive-witness", taft.label, (lhs - rhs).is_zero(),
        "Delta(b*a) = a^2 (x) b*a + b*a (x) 1"))
    return entry


def _verify_cz2n(n: int) -> CatalogEntry:
    _require(n >= 1, "cz2n needs n >= 1")
    entry = CatalogEntry("cz2n", {"n": n},
                         {"dimension": 2 * n,
                          "claim": "cyclic subgroup at q = -1: dim 2n"})
    datum = SubgroupDatum(parity="minus_one", ell=2, I_plus=(1,), I_minus=(1,),
                          gamma=GroupSpec("cyclic", n=n))
    cons = construct_quotient(datum)
    entry.results.append(CheckResult(
        "dimension", cons.algebra.label,
        cons.dim.finite and cons.dim.value == 2 * n,
        f"{cons.dim!r}, expected {2 * n}"))
    entry.results.append(CheckResult(
        "confluence", cons.algebra.label,
        check_confluence(cons.algebra.pres, 8) == []))
    entry.results.extend(cons.certificates)
    entry.results.extend(exact_sequence_shadow(cons))
    # the standard kernel generator list is recovered (two-way containment)
    kres = kernel_sigma_t(GroupSpec("cyclic", n=n), "minus_one")
    p = kres.quotient.poly
    expected = ([f"x11^{2 * n} - 1", f"x22^{2 * n} - 1", "x11*x22 - 1"]
                + ["x11*x12", "x11*x21", "x12*x21", "x12*x22", "x21*x22",
                   "x12^2", "x21^2"])
    member = all(normal_form(kres.quotient, p(t)).is_zero() for t in expected)
    entry.results.append(CheckResult(
        "kernel-generators-recovered", f"cyclic({n}) in PSL2", member,
        "; ".join(expected[:3]) + "; all off-diagonal quadratics"))
    model = FiniteModel(cons.algebra)
    rep = grouplikes(model)
    entry.results.append(CheckResult(
        "grouplikes", cons.algebra.label,
        rep.count() == 2 * n and rep.complete,
        f"{rep.count()} found ({rep.method})"))
    return entry


def _verify_cz2mn(ell: int, n: int) -> CatalogEntry:
    _require(ell % 2 == 0 and ell >= 4, "cz2mn needs even ell >= 4")
    _require(n >= 1, "cz2mn needs n >= 1")
    m = ell // 2
    entry = CatalogEntry("cz2mn", {"ell": ell, "n": n},
                         {"dimension": 2 * m * n,
                          "claim": "cyclic subgroup at even order: dim 2mn"})
    datum = SubgroupDatum(parity="even", ell=ell, gamma=GroupSpec("cyclic", n=n))
    cons = construct_quotient(datum)
    entry.results.append(CheckResult(
        "dimension", cons.algebra.label,
        cons.dim.finite and cons.dim.value == 2 * m * n,
        f"{cons.dim!r}, expected {2 * m * n}"))
    entry.results.append(CheckResult(
        "h-dimension", cons.h_pres.label,
        cons.h_dim.finite and cons.h_dim.value == 2 * m,
        f"{cons.h_dim!r}, expected {2 * m}"))
    entry.results.append(CheckResult(
        "confluence", cons.algebra.label,
        check_confluence(cons.algebra.pres, 8) == []))
    entry.results.extend(cons.certificates)
    entry.results.extend(exact_sequence_shadow(cons))
    return entry


def _verify_jdelta(ell: int, n: int, p: int, r: int) -> CatalogEntry:
    _require(ell % 2 == 0 and ell >= 4, "jdelta needs even ell >= 4")
    m = ell // 2
    entry = CatalogEntry(
        "jdelta", {"ell": ell, "n": n, "p": p, "r": r},
        {"dimension": 2 * n,
         "claim": "twist by a^p = chi^r collapses 2mn to 2n when r m = 1 mod n"})
    datum = SubgroupDatum(parity="even", ell=ell, gamma=GroupSpec("cyclic", n=n),
                          N_generator=p, delta_exponent=r)
    cons = construct_quotient(datum)
    entry.results.append(CheckResult(
        "dimension", cons.algebra.label,
        cons.dim.finite and cons.dim.value == 2 * n,
        f"{cons.dim!r}, expected {2 * n} (down from {2 * m * n})"))
    entry.results.extend(cons.certificates)
    entry.results.extend(exact_sequence_shadow(cons))
    return entry


def _verify_dihedral(m: int) -> CatalogEntry:
    _require(m >= 1, "dihedral needs m >= 1")
    entry = CatalogEntry("dihedral", {"m": m},
                         {"dimension": 2 * m,
                          "claim": "surjection onto functions on the "
                                   "order-2m dihedral group"})
    entry.results.extend(verify_dihedral_quotient(m))
    return entry


def _verify_case_i_full(parity: str, ell: int) -> CatalogEntry:
    if parity == "odd":
        _require(ell % 2 == 1 and ell >= 3, "case-I-full odd needs odd ell")
        h_expect = ell
    elif parity == "even":
        _require(ell % 2 == 0 and ell >= 4, "case-I-full even needs even ell")
        h_expect = ell
    else:
        _require(ell == 2, "case-I-full minus_one fixes ell = 2")
        h_expect = 2
    entry = CatalogEntry("case-I-full", {"parity": parity, "ell": ell},
                         {"h_dimension": h_expect,
                          "claim": "torus quotient: group-algebra top"})
    datum = SubgroupDatum(parity=parity, ell=ell,
                          gamma=GroupSpec("catalog", name="torus"))
    cons = construct_quotient(datum)
    entry.results.append(CheckResult(
        "ambient-infinite", cons.algebra.label, not cons.dim.finite,
        repr(cons.dim)))
    entry.results.append(CheckResult(
        "h-dimension", cons.h_pres.label,
        cons.h_dim.finite and cons.h_dim.value == h_expect,
        f"{cons.h_dim!r}, expected {h_expect}"))
    delta, counit, antipode = _sl2_hopf(cons.h_pres.ell, cons.h_pres.q)
    h_alg = named_algebra(cons.h_pres, delta, counit, antipode,
                          label=f"case-I-top({parity})")
    rep = grouplikes(FiniteModel(h_alg))
    entry.results.append(CheckResult(
        "grouplikes", h_alg.label, rep.count() == h_expect and rep.complete,
        f"{rep.count()} found ({rep.method})"))
    return entry


def _verify_central_l(ell: int) -> CatalogEntry:
    _require(ell % 2 == 1 and ell >= 3, "central-L needs odd ell >= 3")
    entry = CatalogEntry("central-L", {"ell": ell},
                         {"claim": "ell-th powers generate a central "
                                   "classical copy"})
    # relation images have length 2*ell; reduce them confluently
    alg = oq_sl2(ell, complete_to=2 * ell + 2)
    L = distinguished_subalgebra("L_odd", ell)
    entry.results.extend(check_central(alg, L))
    images = {g: NCPoly.monomial(ABCD, ell, (g,) * ell) for g in range(4)}
    entry.results.extend(verify_hopf_morphism(classical_sl2(), alg, images))
    return entry


def _verify_normal_b() -> CatalogEntry:
    entry = CatalogEntry("normal-B", {},
                         {"claim": "quadratic subalgebra at q = -1 is normal, "
                                   "not central, and carries the signed "
                                   "even-part embedding"})
    alg = sl2_algebra("minus_one", 2)
    Bgens = distinguished_subalgebra("B_minus1", 2)
    central = check_central(alg, Bgens)
    entry.results.append(CheckResult(
        "not-central", alg.label, not all_ok(central),
        "some generator fails to commute"))
    entry.results.extend(check_normal(alg, Bgens))
    model = psl2_model(8)
    entry.results.extend(
        verify_psl2_embedding(model, alg, phi_minus1_images(alg), 2))
    return entry


def _verify_normal_n(ell: int) -> CatalogEntry:
    _require(ell % 2 == 0 and ell >= 4, "normal-N needs even ell >= 4")
    entry = CatalogEntry("normal-N", {"ell": ell},
                         {"claim": "m-th power pairs generate a normal "
                                   "even-part copy"})
    alg = oq_sl2(ell)
    N = distinguished_subalgebra("N_even", ell)
    central = check_central(alg, N)
    entry.results.append(CheckResult(
        "not-central", alg.label, not all_ok(central),
        "some generator fails to commute"))
    entry.results.extend(check_normal(alg, N))
    model = psl2_model(8)
    entry.results.extend(
        verify_psl2_embedding(model, alg, phi_even_images(alg), 2))
    return entry


def _verify_battery(ell: int) -> CatalogEntry:
    if ell == 2:
        entry = CatalogEntry("battery", {"ell": 2}, {"claim": "Hopf axioms"})
        entry.results.extend(run_battery(sl2_algebra("minus_one", 2), 3))
        return entry
    _require(ell >= 3, "battery needs ell >= 3 or ell = 2")
    entry = CatalogEntry("battery", {"ell": ell}, {"claim": "Hopf axioms"})
    entry.results.extend(run_battery(oq_sl2(ell), 3))
    return entry


_BUILDERS = {
    "widehat-dual": (_verify_widehat, ("ell",)),
    "overline-dual": (_verify_overline, ("ell",)),
    "taft": (_verify_taft, ("ell",)),
    "cz2n": (_verify_cz2n, ("n",)),
    "cz2mn": (_verify_cz2mn, ("ell", "n")),
    "jdelta": (_verify_jdelta, ("ell", "n", "p", "r")),
    "dihedral": (_verify_dihedral, ("m",)),
    "case-I-full": (_verify_case_i_full, ("parity", "ell")),
    "central-L": (_verify_central_l, ("ell",)),
    "normal-B": (_verify_normal_b, ()),
    "normal-N": (_verify_normal_n, ("ell",)),
    "battery": (_verify_battery, ("ell",)),
}


def entry_names() -> list[str]:
    return sorted(_BUILDERS)


def verify_entry(name: str, **params) -> CatalogEntry:
    if name not in _BUILDERS:
        raise UnknownEntry(name)
    builder, keys = _BUILDERS[name]
    missing = [k for k in keys if k not in params]
    if missing:
        raise ParamOutOfRange(f"{name} needs parameters {list(keys)}")
    return builder(**{k: params[k] for k in keys})


DEFAULT_GRID = [
    ("battery", {"ell": 3}), ("battery", {"ell": 4}),
    ("battery", {"ell": 5}), ("battery", {"ell": 6}),
    ("battery", {"ell": 2}),
    ("widehat-dual", {"ell": 3}), ("widehat-dual", {"ell": 5}),
    ("overline-dual", {"ell": 4}), ("overline-dual", {"ell": 6}),
    ("taft", {"ell": 3}), ("taft", {"ell": 5}),
    ("cz2n", {"n": 2}), ("cz2n", {"n": 3}), ("cz2n", {"n": 4}),
    ("cz2mn", {"ell": 4, "n": 2}), ("cz2mn", {"ell": 6, "n": 2}),
    ("cz2mn", {"ell": 6, "n": 3}),
    ("jdelta", {"ell": 6, "n": 2, "p": 2, "r": 1}),
    ("dihedral", {"m": 2}), ("dihedral", {"m": 3}), ("dihedral", {"m": 4}),
    ("case-I-full", {"parity": "odd", "ell": 3}),
    ("case-I-full", {"parity": "even", "ell": 4}),
    ("case-I-full", {"parity": "minus_one", "ell": 2}),
    ("central-L", {"ell": 3}), ("central-L", {"ell": 5}),
    ("normal-B", {}),
    ("normal-N", {"ell": 4}), ("normal-N", {"ell": 6}),
]


def verify_grid(grid=None) -> list[CatalogEntry]:
    out = []
    for name, params in (grid or DEFAULT_GRID):
        out.append(verify_entry(name, **params))
    return out
