"""Command-line harness: load algebra documents, run verification pipelines,
build doubles and biproducts, and emit deterministic reports.

Exit codes: 0 all requested verifications pass, 2 a verification failed,
3 I/O, parse, or usage error (including dimension-cap refusals).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import biproduct as bp
from . import document
from .derived import derive_all, verify_derived
from .double import build_double, verify_generating_relations
from .dual import build_dual, verify_convolution_quasi_associative, verify_dual
from .quasihopf import validate_quasi_hopf
from .quasitriangular import RMatrix, validate_r_matrix
from .report import ValidationReport, VerificationFailed

DEFAULT_DIM_CAP = 32
DIM_CAP_ENV = "QUASIDOUBLE_DIM_CAP"

EXIT_OK = 0
EXIT_VERIFICATION = 2
EXIT_USAGE = 3


class CliError(Exception):
    """Raised for I/O, parse, and usage problems (exit code 3)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def dim_cap() -> int:
    raw = os.environ.get(DIM_CAP_ENV)
    if raw is None:
        return DEFAULT_DIM_CAP
    try:
        cap = int(raw)
        if cap < 1:
            raise ValueError
        return cap
    except ValueError:
        raise CliError(f"{DIM_CAP_ENV} must be a positive integer, got {raw!r}")


def _load(path) -> document.AlgebraDocument:
    try:
        return document.load(path)
    except document.ParseError as exc:
        raise CliError(str(exc))


def _require_r(doc: document.AlgebraDocument, command: str) -> RMatrix:
    if doc.R is None:
        raise CliError(f"'{command}' needs a document with an R-matrix entry")
    return RMatrix.from_r(doc.H, doc.R)


def _tensor_records(e) -> list:
    return e.to_records()


def _emit(out: dict, fmt: str, reports: list) -> None:
    if fmt == "json":
        out = dict(out)
        out["stages"] = [r.to_dict() for r in reports]
        print(json.dumps(out, sort_keys=True, indent=1))
    else:
        for key in sorted(out):
            if key in ("command", "passed"):
                continue
            print(f"{key}: {out[key]}")
        for r in reports:
            print(str(r))
        print("result:", "PASS" if out["passed"] else "FAIL")


def cmd_validate(args) -> int:
    doc = _load(args.document)
    reports = [validate_quasi_hopf(doc.H)]
    if doc.R is not None:
        rm = RMatrix.from_r(doc.H, doc.R)
        reports.append(validate_r_matrix(doc.H, rm).report)
    passed = all(r.all_passed for r in reports)
    _emit({"command": "validate", "dim": doc.H.dim, "passed": passed},
          args.format, reports)
    return EXIT_OK if passed else EXIT_VERIFICATION


def cmd_derive(args) -> int:
    doc = _load(args.document)
    H = doc.H
    der = derive_all(H)
    reports = [verify_derived(H, der)]
    out = {
        "command": "derive",
        "gamma": _tensor_records(der.gamma),
        "delta": _tensor_records(der.delta),
        "f": _tensor_records(der.f),
        "f_inv": _tensor_records(der.f_inv),
        "p_R": _tensor_records(der.p_R),
        "q_R": _tensor_records(der.q_R),
    }
    if doc.R is not None:
        rm = RMatrix.from_r(H, doc.R)
        cert = validate_r_matrix(H, rm)
        reports.append(cert.report)
        if cert.u is not None:
            out["u"] = _tensor_records(cert.u)
            out["u_inv"] = _tensor_records(cert.u_inv)
    passed = all(r.all_passed for r in reports)
    out["passed"] = passed
    _emit(out, args.format, reports)
    return EXIT_OK if passed else EXIT_VERIFICATION


def _checked_double(H, cap: int):
    if H.dim > cap:
        raise CliError(
            f"refusing to double a dim-{H.dim} algebra (cap {cap}; "
            f"set {DIM_CAP_ENV} to raise it)")
    reports = []
    try:
        D = build_double(H, check=True)
    except VerificationFailed as exc:
        if exc.report is not None:
            reports.append(exc.report)
        return None, reports
    reports.append(validate_quasi_hopf(D.inner))
    reports.append(validate_r_matrix(D.inner, D.R_D).report)
    reports.append(verify_generating_relations(D))
    return D, reports


def cmd_double(args) -> int:
    doc = _load(args.document)
    D, reports = _checked_double(doc.H, dim_cap())
    passed = D is not None and all(r.all_passed for r in reports)
    out = {"command": "double", "dim": doc.H.dim,
           "double_dim": doc.H.dim ** 2, "passed": passed}
    if passed and args.output:
        document.save(document.AlgebraDocument(
            D.inner, D.R_D.R, notes="quantum double"), args.output)
        out["output"] = args.output
    _emit(out, args.format, reports)
    return EXIT_OK if passed else EXIT_VERIFICATION


def cmd_project(args) -> int:
    doc = _load(args.document)
    H = doc.H
    rm = _require_r(doc, "project")
    reports = [validate_r_matrix(H, rm).report]
    D, dreports = _checked_double(H, dim_cap())
    reports.extend(dreports)
    if D is None or not all(r.all_passed for r in reports):
        _emit({"command": "project", "passed": False}, args.format, reports)
        return EXIT_VERIFICATION

    pi = bp.projection_pi(H, rm, D)
    reports.append(bp.verify_projection(H, rm, D, pi))
    try:
        pd = bp.bi_extract(H, rm, D, pi)
    except bp.RankMismatch as exc:
        rep = ValidationReport("bi-extract")
        rep.add("image-rank", False, (str(exc),))
        reports.append(rep)
        _emit({"command": "project", "passed": False}, args.format, reports)
        return EXIT_VERIFICATION
    reports.append(bp.verify_membership(H, D, pd))
    reports.append(bp.verify_pi_lemma(H, D, pd))
    reports.append(bp.validate_braided_hopf(pd.B))

    der = derive_all(H)
    ds = build_dual(H, check=False)
    Bc = bp.braided_dual(H, rm, der, ds)
    rep = ValidationReport("mu-transport")
    rep.add("multiplication", Bc.mult.matrix == pd.B.mult.matrix)
    rep.add("unit", Bc.unit == pd.B.unit)
    rep.add("comultiplication", Bc.comult.matrix == pd.B.comult.matrix)
    rep.add("counit", Bc.counit.matrix == pd.B.counit.matrix)
    rep.add("antipode", Bc.antipode.matrix == pd.B.antipode.matrix)
    rep.add("action", Bc.module.action.matrix == pd.B.module.action.matrix)
    rep.add("coaction", Bc.module.coaction.matrix == pd.B.module.coaction.matrix)
    reports.append(rep)

    BxH = bp.build_biproduct(pd.B, H, check=False)
    reports.append(validate_quasi_hopf(BxH))
    chi = bp.chi_iso(H, rm, D, der, ds)
    reports.append(bp.verify_chi(BxH, D, chi))

    passed = all(r.all_passed for r in reports)
    _emit({"command": "project", "dim": H.dim, "double_dim": D.inner.dim,
           "passed": passed}, args.format, reports)
    return EXIT_OK if passed else EXIT_VERIFICATION


def cmd_braided_dual(args) -> int:
    doc = _load(args.document)
    H = doc.H
    rm = _require_r(doc, "braided-dual")
    reports = [validate_r_matrix(H, rm).report]
    der = derive_all(H)
    ds = build_dual(H, check=False)
    reports.append(verify_dual(ds))
    reports.append(verify_convolution_quasi_associative(ds))
    B = bp.braided_dual(H, rm, der, ds)
    reports.append(bp.validate_braided_hopf(B))

    D, dreports = _checked_double(H, dim_cap())
    reports.extend(dreports)
    rep = ValidationReport("mu-transport")
    if D is not None:
        try:
            pd = bp.bi_extract(H, rm, D)
            rep.add("multiplication", B.mult.matrix == pd.B.mult.matrix)
            rep.add("unit", B.unit == pd.B.unit)
            rep.add("comultiplication", B.comult.matrix == pd.B.comult.matrix)
            rep.add("counit", B.counit.matrix == pd.B.counit.matrix)
            rep.add("antipode", B.antipode.matrix == pd.B.antipode.matrix)
            rep.add("action", B.module.action.matrix == pd.B.module.action.matrix)
            rep.add("coaction", B.module.coaction.matrix == pd.B.module.coaction.matrix)
        except bp.RankMismatch as exc:
            rep.add("image-rank", False, (str(exc),))
    else:
        rep.add("double-construction", False)
    reports.append(rep)

    passed = all(r.all_passed for r in reports)
    out = {
        "command": "braided-dual",
        "multiplication": B.mult.to_records(),
        "comultiplication": B.comult.to_records(),
        "counit": B.counit.to_records(),
        "antipode": B.antipode.to_records(),
        "action": B.module.action.to_records(),
        "coaction": B.module.coaction.to_records(),
        "passed": passed,
    }
    _emit(out, args.format, reports)
    return EXIT_OK if passed else EXIT_VERIFICATION


def cmd_tower(args) -> int:
    doc = _load(args.document)
    H = doc.H
    K = args.levels
    cap = dim_cap()
    if K < 1:
        raise CliError("tower needs -n >= 1")
    final_dim = H.dim ** (2 ** K)
    if final_dim > cap:
        raise CliError(
            f"tower of height {K} from dim {H.dim} reaches dim {final_dim}, "
            f"above the cap {cap} (set {DIM_CAP_ENV} to raise it)")
    reports = [validate_quasi_hopf(H)]
    dims = [H.dim]
    current = H
    D = None
    for level in range(K):
        D, dreports = _checked_double(current, cap)
        for r in dreports:
            r.stage = f"level-{level + 1} {r.stage}"
            reports.append(r)
        if D is None or not all(r.all_passed for r in dreports):
            _emit({"command": "tower", "dims": dims, "passed": False},
                  args.format, reports)
            return EXIT_VERIFICATION
        current = D.inner
        dims.append(current.dim)
    passed = all(r.all_passed for r in reports)
    out = {"command": "tower", "dims": dims, "passed": passed}
    if passed and args.output and D is not None:
        document.save(document.AlgebraDocument(
            D.inner, D.R_D.R, notes=f"double tower, height {K}"), args.output)
        out["output"] = args.output
    _emit(out, args.format, reports)
    return EXIT_OK if passed else EXIT_VERIFICATION


def cmd_report(args) -> int:
    doc = _load(args.document)
    H = doc.H
    reports = [validate_quasi_hopf(H)]
    der = derive_all(H)
    reports.append(verify_derived(H, der))
    ds = build_dual(H, check=False)
    reports.append(verify_dual(ds))
    reports.append(verify_convolution_quasi_associative(ds))
    if doc.R is not None:
        rm = RMatrix.from_r(H, doc.R)
        reports.append(validate_r_matrix(H, rm).report)
    passed = all(r.all_passed for r in reports)
    _emit({"command": "report", "dim": H.dim, "passed": passed},
          args.format, reports)
    return EXIT_OK if passed else EXIT_VERIFICATION


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quasidouble",
                     description="exact verification of quasi-Hopf algebras "
                                 "and their quantum doubles")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("document", help="algebra document (JSON)")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, help="run the full axiom suite")
    add("derive", cmd_derive, help="emit gamma, delta, f, p_R, q_R and their identity suite")
    p = add("double", cmd_double, help="build and verify the quantum double")
    p.add_argument("-o", "--output", help="write D(H) as a document")
    add("project", cmd_project, help="projection pipeline D(H) -> H through chi")
    add("braided-dual", cmd_braided_dual, help="braided Hopf structure on H* with transport check")
    p = add("tower", cmd_tower, help="iterate the double construction")
    p.add_argument("-n", "--levels", type=int, required=True)
    p.add_argument("-o", "--output", help="write the top algebra as a document")
    add("report", cmd_report, help="aggregate validation, derived and dual suites")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
