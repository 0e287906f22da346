"""Batch command-line front end: construct, verify, inspect, report.

JSON is the single source of truth; the text format is rendered from the
JSON document.  Exit codes: 0 all green, 1 internal error, 2 datum or
check failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import entry_names, verify_entry, verify_grid
from .errors import (InconsistentDatum, ParamOutOfRange, QSL2Error,
                     UnknownEntry)
from .hopf import (FiniteModel, all_ok, check_axioms, check_central,
                   check_normal, check_structure_well_defined, grouplikes,
                   is_hopf_ideal, named_algebra)
from .presentations import (classical_sl2, distinguished_subalgebra, oq_sl2,
                            quotient_ideal, sl2_algebra, _sl2_hopf)
from .rewrite import dimension, quotient_presentation
from .subgroups import (GroupSpec, SubgroupDatum, construct_quotient,
                        datum_equiv, exact_sequence_shadow,
                        verify_dihedral_quotient)

SCHEMA = "qsl2-report/1"

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_CHECK_FAILED = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _default_max_degree() -> int:
    return int(os.environ.get("QSL2_MAX_DEGREE", 8))


def _add_common(parser, *, suppress=False):
    # the same options are accepted before and after the subcommand; the
    # subparser copies use SUPPRESS so they never clobber values already
    # parsed at the top level
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--format", choices=("json", "text"),
                        **(kw or {"default": "text"}))
    parser.add_argument("--output", help="write the JSON report here",
                        **(kw or {"default": None}))
    parser.add_argument("--max-degree", type=int,
                        **(kw or {"default": _default_max_degree()}))
    parser.add_argument("--probe-bound", type=int,
                        **(kw or {"default": 10}))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qsl2", description=__doc__)
    _add_common(parser)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def add_sub(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_common(p, suppress=True)
        return p

    p = add_sub("construct", help="run the quotient pipeline on a datum")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--datum", help="path to a datum JSON file")
    g.add_argument("--datum-json", help="inline datum JSON")

    p = add_sub("verify", help="run a named verification")
    p.add_argument("target", choices=("axioms", "central", "normal",
                                      "hopf-ideal", "sequence", "morphism"))
    p.add_argument("subject", help="e.g. oq-sl2, L, B, N, widehat, cz2mn, dihedral")
    p.add_argument("--ell", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)

    p = add_sub("catalog", help="list or verify catalog entries")
    p.add_argument("action", choices=("list", "verify"))
    p.add_argument("entry", nargs="?", help="entry name (omit with --grid)")
    p.add_argument("--grid", choices=("default",))
    p.add_argument("--ell", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--parity", choices=("odd", "even", "minus_one"))

    p = add_sub("dim", help="dimension of a named presentation")
    p.add_argument("name", choices=("oq-sl2", "o-minus1-sl2", "classical-sl2",
                                    "widehat", "overline"))
    p.add_argument("--ell", type=int)

    p = add_sub("grouplikes", help="grouplikes of a finite catalog algebra")
    p.add_argument("name", choices=("taft", "cz2n", "case-I-full"))
    p.add_argument("--ell", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--parity", choices=("odd", "even", "minus_one"))

    p = add_sub("equiv", help="decide equivalence of two data")
    p.add_argument("--datum1", required=True, help="path or inline JSON")
    p.add_argument("--datum2", required=True, help="path or inline JSON")
    return parser


def _load_datum(text_or_path: str) -> SubgroupDatum:
    text = text_or_path
    if os.path.exists(text_or_path):
        with open(text_or_path, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
        return SubgroupDatum.from_json(doc)
    except (ValueError, KeyError, TypeError) as exc:
        raise _UsageError(f"malformed datum JSON: {exc}") from exc


class _UsageError(Exception):
    pass


def _report(command: str, config: dict, results: list, status: str,
            extra: dict | None = None) -> dict:
    doc = {
        "schema": SCHEMA,
        "command": command,
        "config": config,
        "status": status,
        "results": [r.to_json() for r in results],
    }
    if extra:
        doc.update(extra)
    return doc


def _render_text(doc: dict) -> str:
    lines = [f"# {doc['command']}  [{doc['status']}]  schema={doc['schema']}"]
    cfg = ", ".join(f"{k}={v}" for k, v in sorted(doc["config"].items()))
    lines.append(f"config: {cfg}")
    for key, value in doc.items():
        if key in ("schema", "command", "config", "status", "results"):
            continue
        lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    for row in doc["results"]:
        mark = "PASS" if row.get("status") == "pass" else "FAIL"
        witness = f"  ({row['witness']})" if row.get("witness") else ""
        lines.append(f"{mark} {row['check']} :: {row['subject']}{witness}")
    return "\n".join(lines)


def _emit(doc: dict, args) -> None:
    payload = json.dumps(doc, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    if args.format == "json":
        print(payload)
    else:
        print(_render_text(doc))


def _cmd_construct(args) -> int:
    datum = _load_datum(args.datum or args.datum_json)
    config = {"max_degree": args.max_degree, "probe_bound": args.probe_bound,
              "datum": datum.to_json()}
    try:
        cons = construct_quotient(datum, probe_bound=args.probe_bound)
    except InconsistentDatum as exc:
        doc = _report("construct", config, [], "inconsistent-datum",
                      {"detail": str(exc)})
        _emit(doc, args)
        return EXIT_CHECK_FAILED
    results = list(cons.certificates)
    if cons.dim.finite:
        results.extend(exact_sequence_shadow(cons))
    status = "pass" if all_ok(results) else "fail"
    doc = _report("construct", config, results, status, {
        "dimension": repr(cons.dim),
        "h_dimension": repr(cons.h_dim),
        "transcript": cons.transcript,
        "presentation": cons.algebra.pres.to_json(),
    })
    _emit(doc, args)
    return EXIT_OK if status == "pass" else EXIT_CHECK_FAILED


def _verify_dispatch(args) -> list:
    target, subject = args.target, args.subject
    if target == "axioms":
        ell = args.ell or 3
        alg = (sl2_algebra("minus_one", 2) if subject == "o-minus1-sl2"
               else oq_sl2(ell))
        return (check_structure_well_defined(alg)
                + check_axioms(alg, sample_deg=3))
    if target == "central":
        if subject != "L":
            raise _UsageError("central checks the subalgebra L (odd ell)")
        ell = args.ell or 3
        alg = oq_sl2(ell, complete_to=2 * ell + 2)
        return check_central(alg, distinguished_subalgebra("L_odd", ell))
    if target == "normal":
        if subject == "B":
            alg = sl2_algebra("minus_one", 2)
            return check_normal(alg, distinguished_subalgebra("B_minus1", 2))
        if subject == "N":
            ell = args.ell or 4
            alg = oq_sl2(ell)
            return check_normal(alg, distinguished_subalgebra("N_even", ell))
        raise _UsageError("normal checks the subalgebras B or N")
    if target == "hopf-ideal":
        ell = args.ell or (3 if subject == "widehat" else 4)
        alg = oq_sl2(ell)
        ideal = quotient_ideal(subject, ell)
        return is_hopf_ideal(alg, ideal, completion_bound=3 * ell)
    if target == "sequence":
        if subject == "cz2n":
            datum = SubgroupDatum(parity="minus_one", ell=2, I_plus=(1,),
                                  I_minus=(1,),
                                  gamma=GroupSpec("cyclic", n=args.n or 2))
        elif subject == "cz2mn":
            datum = SubgroupDatum(parity="even", ell=args.ell or 4,
                                  gamma=GroupSpec("cyclic", n=args.n or 2))
        else:
            raise _UsageError("sequence subjects: cz2n, cz2mn")
        cons = construct_quotient(datum, probe_bound=args.probe_bound)
        return list(cons.certificates) + exact_sequence_shadow(cons)
    if target == "morphism":
        if subject == "dihedral":
            return verify_dihedral_quotient(args.m or 3)
        if subject in ("B", "N"):
            from .presentations import (phi_even_images, phi_minus1_images,
                                        psl2_model, verify_psl2_embedding)
            model = psl2_model(8)
            if subject == "B":
                alg = sl2_algebra("minus_one", 2)
                images = phi_minus1_images(alg)
            else:
                alg = oq_sl2(args.ell or 4)
                images = phi_even_images(alg)
            return verify_psl2_embedding(model, alg, images, 2)
        raise _UsageError("morphism subjects: dihedral, B, N")
    raise _UsageError(f"unknown verify target {target}")


def _cmd_verify(args) -> int:
    config = {"max_degree": args.max_degree, "probe_bound": args.probe_bound,
              "target": args.target, "subject": args.subject}
    for key in ("ell", "n", "m"):
        if getattr(args, key) is not None:
            config[key] = getattr(args, key)
    try:
        results = _verify_dispatch(args)
    except InconsistentDatum as exc:
        doc = _report("verify", config, [], "inconsistent-datum",
                      {"detail": str(exc)})
        _emit(doc, args)
        return EXIT_CHECK_FAILED
    status = "pass" if all_ok(results) else "fail"
    _emit(_report("verify", config, results, status), args)
    return EXIT_OK if status == "pass" else EXIT_CHECK_FAILED


def _cmd_catalog(args) -> int:
    config = {"max_degree": args.max_degree, "probe_bound": args.probe_bound}
    if args.action == "list":
        doc = {"schema": SCHEMA, "command": "catalog list", "config": config,
               "status": "pass", "results": [],
               "entries": entry_names()}
        _emit(doc, args)
        return EXIT_OK
    if args.grid:
        entries = verify_grid()
        ok = all(e.ok for e in entries)
        doc = {"schema": SCHEMA, "command": "catalog verify --grid default",
               "config": config, "status": "pass" if ok else "fail",
               "results": [],
               "entries": [e.to_json() for e in entries]}
        _emit(doc, args)
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    if not args.entry:
        raise _UsageError("catalog verify needs an entry name or --grid")
    params = {k: getattr(args, k) for k in ("ell", "n", "m", "p", "r", "parity")
              if getattr(args, k) is not None}
    entry = verify_entry(args.entry, **params)
    config.update(params)
    doc = {"schema": SCHEMA, "command": f"catalog verify {args.entry}",
           "config": config, "status": "pass" if entry.ok else "fail",
           "results": [r.to_json() for r in entry.results],
           "expected": entry.expected}
    _emit(doc, args)
    return EXIT_OK if entry.ok else EXIT_CHECK_FAILED


def _cmd_dim(args) -> int:
    name = args.name
    defaults = {"oq-sl2": 3, "widehat": 3, "overline": 4,
                "o-minus1-sl2": 2, "classical-sl2": 1}
    ell = args.ell or defaults[name]
    config = {"name": name, "ell": ell, "probe_bound": args.probe_bound,
              "max_degree": args.max_degree}
    base_bound = max(args.probe_bound, 8)
    if name == "classical-sl2":
        pres = classical_sl2(complete_to=base_bound).pres
    elif name == "o-minus1-sl2":
        pres = sl2_algebra("minus_one", 2, complete_to=base_bound).pres
    elif name == "oq-sl2":
        pres = oq_sl2(ell, complete_to=base_bound).pres
    else:
        alg = oq_sl2(ell)
        bound = max(args.probe_bound, 3 * ell)
        pres = quotient_presentation(alg.pres, quotient_ideal(name, ell),
                                     complete_to=bound, label=f"{name}-{ell}")
    res = dimension(pres, max(args.probe_bound, pres.completion_bound))
    doc = {"schema": SCHEMA, "command": "dim", "config": config,
           "status": "pass", "results": [],
           "dimension": repr(res), "counts": res.counts,
           "provisional": res.provisional}
    _emit(doc, args)
    return EXIT_OK


def _cmd_grouplikes(args) -> int:
    from .ncalg import render_poly

    name = args.name
    config = {"name": name, "max_degree": args.max_degree,
              "probe_bound": args.probe_bound}
    if name == "taft":
        ell = args.ell or 3
        config["ell"] = ell
        datum = SubgroupDatum(parity="odd", ell=ell, I_plus=(1,), I_minus=(),
                              gamma=GroupSpec("catalog", name="G_a"))
        cons = construct_quotient(datum)
        pres = cons.h_pres
    elif name == "cz2n":
        n = args.n or 2
        config["n"] = n
        datum = SubgroupDatum(parity="minus_one", ell=2, I_plus=(1,),
                              I_minus=(1,), gamma=GroupSpec("cyclic", n=n))
        cons = construct_quotient(datum)
        pres = cons.algebra.pres
    else:
        parity = args.parity or "odd"
        ell = args.ell or (3 if parity == "odd" else 4 if parity == "even" else 2)
        config.update({"parity": parity, "ell": ell})
        datum = SubgroupDatum(parity=parity, ell=ell,
                              gamma=GroupSpec("catalog", name="torus"))
        cons = construct_quotient(datum)
        pres = cons.h_pres
    delta, counit, antipode = _sl2_hopf(pres.ell, pres.q)
    alg = named_algebra(pres, delta, counit, antipode, label=name)
    rep = grouplikes(FiniteModel(alg))
    doc = {"schema": SCHEMA, "command": "grouplikes", "config": config,
           "status": "pass", "results": [],
           "count": rep.count(), "complete": rep.complete,
           "method": rep.method,
           "elements": sorted(render_poly(g) for g in rep.elements)}
    _emit(doc, args)
    return EXIT_OK


def _cmd_equiv(args) -> int:
    d1 = _load_datum(args.datum1)
    d2 = _load_datum(args.datum2)
    res = datum_equiv(d1, d2)
    config = {"datum1": d1.to_json(), "datum2": d2.to_json(),
              "max_degree": args.max_degree, "probe_bound": args.probe_bound}
    doc = {"schema": SCHEMA, "command": "equiv", "config": config,
           "status": "pass", "results": [],
           "equivalent": res.equivalent, "witness": res.witness,
           "reason": res.reason}
    _emit(doc, args)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "catalog":
            return _cmd_catalog(args)
        if args.command == "dim":
            return _cmd_dim(args)
        if args.command == "grouplikes":
            return _cmd_grouplikes(args)
        if args.command == "equiv":
            return _cmd_equiv(args)
        return EXIT_USAGE
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParamOutOfRange, UnknownEntry) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except QSL2Error as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
