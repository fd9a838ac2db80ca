"""Command-line front door: JSON in, JSON out.

Exit codes: 0 success, 1 property-negative (not in the class, failed
verification), 2 input error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
import tempfile
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from . import serialize as ser
from .abcat import NilMod
from .audit import THEOREMS, theorem_audit
from .errors import InternalInconsistency, NotInPhi, NotWGFlat, RepkitError
from .filtration import filtrate, verify_certificate
from .gorenstein import flat_right_resolution, is_flat, is_ginj, is_gproj, is_wgflat, verify_total_acyclicity
from .phipsi import in_phi, in_psi
from .quiver import classify_quiver
from .rep import Representation, validate

OK, NEGATIVE, INPUT_ERROR, INTERNAL = 0, 1, 2, 3
CLASSES = ("all", "zero", "proj", "inj", "flat", "gproj", "ginj", "wgflat")


class InputError(Exception):
    pass


@lru_cache(maxsize=None)
def _schema() -> dict:
    text = resources.files("repkit").joinpath("schemas/v1/repkit.schema.json").read_text()
    return json.loads(text)


def check_schema(doc, name: str) -> None:
    schema = _schema()
    wrapper = {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]}
    err = jsonschema.exceptions.best_match(jsonschema.Draft202012Validator(wrapper).iter_errors(doc))
    if err is not None:
        where = "/".join(str(p) for p in err.absolute_path) or "<root>"
        raise InputError(f"{name} schema violation at {where}: {err.message}")


def load(path: str, schema: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    check_schema(doc, schema)
    return doc


def emit(doc, out: str | None = None) -> None:
    text = ser.dumps(doc) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_rep(path: str) -> Representation:
    return ser.rep_from_json(load(path, "representation"))


# commands ----------------------------------------------------------------------


def cmd_quiver_check(args) -> int:
    doc = load(args.file, "quiver_input")
    q = ser.quiver_from_json(doc["quiver"] if "inner" in doc else doc)
    rep = classify_quiver(q)
    emit(rep.to_dict(), args.out)
    return OK


def cmd_rep_validate(args) -> int:
    doc = load(args.file, "representation")
    try:
        F = ser.rep_from_json(doc)
        problems = validate(F)
    except RepkitError as exc:
        problems = [str(exc)]
    emit({"valid": not problems, "problems": problems}, args.out)
    return NEGATIVE if problems else OK


def cmd_phi_classify(args) -> int:
    F = _load_rep(args.file)
    verdict = in_psi(F, args.cls) if args.psi else in_phi(F, args.cls)
    emit(verdict.to_dict(), args.out)
    return OK if verdict.holds else NEGATIVE


def cmd_filtrate(args) -> int:
    F = _load_rep(args.file)
    try:
        cert = filtrate(F, args.cls)
    except NotInPhi as exc:
        emit({"filtered": False, "reason": str(exc)})
        return NEGATIVE
    emit(ser.certificate_to_json(cert), args.out)
    if args.out:
        emit({"filtered": True, "length": cert.length, "dims": [list(d) for d in cert.dims()]})
    return OK


def cmd_cert_verify(args) -> int:
    doc = load(args.cert, "certificate")
    cert = ser.certificate_from_json(doc)
    F = _load_rep(args.rep) if args.rep else cert.target
    if F != cert.target:
        emit({"ok": False, "check": "target", "detail": "certificate is for a different representation"}, args.out)
        return NEGATIVE
    verdict = verify_certificate(F, cert, args.cls)
    emit(verdict.to_dict(), args.out)
    return OK if verdict.ok else NEGATIVE


def cmd_dual(args) -> int:
    doc = load(args.file, "object")
    x = ser.object_from_json(doc)
    cat = x.category
    if not cat.has_dual:
        raise InputError(f"{cat!r} has no duality")
    emit(ser.object_to_json(cat.dual_object(x)), args.out)
    return OK


def cmd_gproj_check(args) -> int:
    x = ser.object_from_json(load(args.file, "object"))
    oracle = is_ginj if args.injective else is_gproj
    verdict = oracle(x, method=args.method)
    doc = {"holds": verdict.holds, "method": verdict.method, "evidence": verdict.evidence}
    code = OK if verdict.holds else NEGATIVE
    if verdict.witness is not None:
        av = verify_total_acyclicity(verdict.witness)
        doc["witness"] = ser.resolution_to_json(verdict.witness, av)
        if not av.ok:
            code = INTERNAL
    emit(doc, args.out)
    return code


def cmd_flat_check(args) -> int:
    x = ser.object_from_json(load(args.file, "object"))
    if isinstance(x.category, NilMod):
        try:
            res = flat_right_resolution(x, args.steps)
        except NotWGFlat as exc:
            emit({"wgflat": False, "reason": str(exc)}, args.out)
            return NEGATIVE
        av = verify_total_acyclicity(res.complete)
        doc = {
            "flat": is_flat(x),
            "wgflat": True,
            "gflat": av.ok,
            "right_resolution": [o.dim for o in res.objects],
            "cosyzygy_dims": [c.dim for c in res.cosyzygies],
            "ext_checks": list(res.ext_checks),
            "left_matches": res.left_matches,
            "complete": ser.resolution_to_json(res.complete, av),
        }
        emit(doc, args.out)
        return OK if av.ok and res.left_matches else INTERNAL
    flat, wg = is_flat(x), is_wgflat(x, method="ext")
    doc = {"flat": flat, "wgflat": wg}
    if isinstance(x, Representation):
        doc["phi_flat"] = in_phi(x, "flat").holds
        doc["phi_wgflat"] = in_phi(x, "wgflat").holds
        if (doc["phi_flat"], doc["phi_wgflat"]) != (flat, wg):
            emit(doc, args.out)
            return INTERNAL
    emit(doc, args.out)
    return OK if wg else NEGATIVE


def cmd_audit(args) -> int:
    report = theorem_audit(args.theorem, args.samples, args.seed)
    text = report.to_jsonl()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        emit(report.summary())
    else:
        sys.stdout.write(text)
    return OK if report.passed else NEGATIVE


def cmd_suite_run(args) -> int:
    path = Path(args.manifest)
    doc = load(args.manifest, "manifest")
    here = str(path.resolve().parent)
    results, worst = [], OK
    with tempfile.TemporaryDirectory() as work:
        for entry in doc["entries"]:
            argv = [a.replace("{here}", here).replace("{work}", work) for a in entry["argv"]]
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                code = main(argv)
            expect = entry.get("expect", OK)
            passed = code == expect
            if not passed:
                worst = max(worst, code if code != OK else NEGATIVE)
            results.append({"name": entry["name"], "exit": code, "expect": expect, "passed": passed})
    summary = {"version": ser.SCHEMA_VERSION, "passed": worst == OK, "entries": results}
    emit(summary, args.out)
    return worst


# parser --------------------------------------------------------------------------


def _out(p):
    p.add_argument("-o", "--out", help="write the result here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="repkit", description="Quiver representations over abelian categories.")
    sub = ap.add_subparsers(dest="command", required=True)

    quiver = sub.add_parser("quiver").add_subparsers(dest="action", required=True)
    p = quiver.add_parser("check", help="classify a quiver (or the quiver of a representation)")
    p.add_argument("file")
    _out(p)
    p.set_defaults(func=cmd_quiver_check)

    rep = sub.add_parser("rep").add_subparsers(dest="action", required=True)
    p = rep.add_parser("validate", help="check a representation's data")
    p.add_argument("file")
    _out(p)
    p.set_defaults(func=cmd_rep_validate)

    phi = sub.add_parser("phi").add_subparsers(dest="action", required=True)
    p = phi.add_parser("classify", help="decide membership in Φ(C) (or Ψ(C) with --psi)")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", choices=CLASSES, default="all")
    p.add_argument("--psi", action="store_true")
    _out(p)
    p.set_defaults(func=cmd_phi_classify)

    p = sub.add_parser("filtrate", help="build a filtration certificate")
    p.add_argument("file")
    p.add_argument("--class", dest="cls", choices=CLASSES, default="all")
    _out(p)
    p.set_defaults(func=cmd_filtrate)

    cert = sub.add_parser("cert").add_subparsers(dest="action", required=True)
    p = cert.add_parser("verify", help="recheck a filtration certificate")
    p.add_argument("cert")
    p.add_argument("--rep", help="representation the certificate must describe")
    p.add_argument("--class", dest="cls", choices=CLASSES, default=None)
    _out(p)
    p.set_defaults(func=cmd_cert_verify)

    p = sub.add_parser("dual", help="transpose dual of an object or representation")
    p.add_argument("file")
    _out(p)
    p.set_defaults(func=cmd_dual)

    gproj = sub.add_parser("gproj").add_subparsers(dest="action", required=True)
    p = gproj.add_parser("check", help="Gorenstein projectivity with a verified witness")
    p.add_argument("file")
    p.add_argument("--method", choices=("phi", "ext"), default=None)
    p.add_argument("--injective", action="store_true", help="test Gorenstein injectivity instead")
    _out(p)
    p.set_defaults(func=cmd_gproj_check)

    flat = sub.add_parser("flat").add_subparsers(dest="action", required=True)
    p = flat.add_parser("check", help="flatness, weak Gorenstein flatness and flat resolutions")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=3)
    _out(p)
    p.set_defaults(func=cmd_flat_check)

    p = sub.add_parser("audit", help="seeded agreement audit")
    p.add_argument("--theorem", choices=tuple(THEOREMS), required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _out(p)
    p.set_defaults(func=cmd_audit)

    suite = sub.add_parser("suite").add_subparsers(dest="action", required=True)
    p = suite.add_parser("run", help="run every command listed in a manifest")
    p.add_argument("manifest")
    _out(p)
    p.set_defaults(func=cmd_suite_run)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except RepkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (KeyError, TypeError, ValueError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return INPUT_ERROR
