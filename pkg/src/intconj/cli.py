"""Command-line front end.

Every command reads JSON files and writes one JSON document to stdout with
sorted keys; rationals are written as ["num", "den"] string pairs.  Exit
code 0 means a decided verdict, 2 an honest Inconclusive, 1 a usage or data
error (including a table row that fails to reproduce).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import is_dataclass
from fractions import Fraction
from pathlib import Path

from sympy import primefactors

from . import fixtures
from .cfsearch import load_catalog, search_catalog
from .conjtest.certificate import (
    CONJUGATE,
    INCONCLUSIVE,
    ConjCertificate,
    ObstructionTranscript,
    check_conjugator,
)
from .conjtest.exttest import test_ext
from .conjtest.padic import test_local, test_zp
from .conjtest.split import split_obstruction
from .conjtest.ztest import test_z
from .exactmath.linalg import as_matrix, char_poly
from .exactmath.poly import IntPoly, discriminant, is_squarefree
from .lm import classify, matrix_to_ideal
from .numberfield.algebra import NFElem, NumberField
from .numberfield.extension import DEFAULT_BOUND_FACTOR, DEFAULT_PRECISION
from .numberfield.module import ZModule, colon, module_norm
from .numberfield.verdicts import Found, NotFoundWithinBound, NotPrincipal


class DataError(ValueError):
    """Malformed or inconsistent input file."""


# -- serialization -----------------------------------------------------------

def rational(x):
    x = Fraction(x)
    return [str(x.numerator), str(x.denominator)]


def parse_rational(v):
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return Fraction(int(v[0]), int(v[1]))
    if isinstance(v, str):
        return Fraction(v)
    raise DataError(f"not a rational: {v!r}")


def module_doc(M):
    return {"basis": [list(r) for r in M.basis], "denominator": M.denominator}


def to_json(obj):
    """Plain JSON value for the objects the library returns."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return int(obj)
    if isinstance(obj, Fraction):
        return rational(obj)
    if hasattr(obj, "dtype"):
        return to_json(obj.item())
    if isinstance(obj, NFElem):
        return [rational(c) for c in obj.coords]
    if isinstance(obj, IntPoly):
        return list(obj.coeffs)
    if isinstance(obj, ZModule):
        return module_doc(obj)
    if isinstance(obj, ConjCertificate):
        return certificate_doc(obj)
    if isinstance(obj, ObstructionTranscript):
        return to_json(obj.to_dict())
    if isinstance(obj, Found):
        return {"verdict": "Found", "generator": to_json(obj.generator), "details": to_json(obj.details)}
    if isinstance(obj, NotPrincipal):
        return {"verdict": "NotPrincipal", "transcript": to_json(obj.transcript)}
    if isinstance(obj, NotFoundWithinBound):
        return {"verdict": "NotFoundWithinBound", "bound": rational(obj.bound), "details": to_json(obj.details)}
    if isinstance(obj, dict):
        return {str(k): to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    if is_dataclass(obj):
        return {k: to_json(v) for k, v in vars(obj).items()}
    if isinstance(obj, float):
        return obj
    return str(obj)


def certificate_doc(cert, A=None, B=None, order_F=None):
    ring = dict(cert.ring)
    if ring["kind"] == "OF" and cert.field is not None:
        ring["poly"] = list(cert.field.poly.coeffs)
    doc = {"verdict": cert.verdict, "ring": ring}
    if cert.C is not None:
        doc["C"] = [[to_json(x) if isinstance(x, NFElem) else rational(x) for x in row] for row in cert.C]
        if A is not None:
            doc["checks"] = check_conjugator(A, B, cert.C, cert.ring, cert.field, order_F)
    if cert.prime is not None:
        doc["p"] = cert.prime
    if cert.k_prime is not None:
        doc["k_prime"] = cert.k_prime
    if cert.parts:
        doc["parts"] = [certificate_doc(c, A, B) for c in cert.parts]
    if cert.transcript is not None:
        doc["transcript"] = to_json(cert.transcript)
    return doc


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


# -- input -------------------------------------------------------------------

def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise DataError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON: {exc}") from exc


def load_problem(path, need_b=True):
    d = _read_json(path)
    try:
        f = IntPoly([int(c) for c in d["f"]])
        A = as_matrix(d["A"])
        B = as_matrix(d["B"]) if "B" in d else None
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"{path}: malformed problem: {exc}") from exc
    if need_b and B is None:
        raise DataError(f"{path}: problem needs both A and B")
    for name, M in (("A", A), ("B", B)):
        if M is not None and char_poly(M) != f:
            raise DataError(f"{path}: char poly of {name} is {char_poly(M).format()}, not {f.format()}")
    if not is_squarefree(f):
        raise DataError(f"{path}: f is not square-free")
    return f, A, B, d.get("options", {})


def load_entries(path):
    try:
        return load_catalog(_read_json(path))
    except ValueError as exc:
        raise DataError(str(exc)) from exc


def pick_entry(entries, name):
    if not entries:
        raise DataError("catalog is empty")
    if name is None:
        return entries[0]
    for e in entries:
        if e.name == name:
            return e
    raise DataError(f"no catalog entry named {name!r}")


def _options(args, opts):
    bf = args.bound_factor if args.bound_factor is not None else opts.get("bound_factor", DEFAULT_BOUND_FACTOR)
    prec = args.precision if args.precision is not None else opts.get("precision", DEFAULT_PRECISION)
    return parse_rational(bf), int(prec)


# -- verification ------------------------------------------------------------

def parse_matrix_entries(rows, field):
    """C from its JSON form: rationals over Q, coordinate lists over F."""
    out = []
    for row in rows:
        r = []
        for x in row:
            if field is not None:
                r.append(field.elem([parse_rational(c) for c in x]))
            else:
                q = parse_rational(x)
                if q.denominator != 1:
                    raise DataError("non-integral entry in an integer certificate")
                r.append(int(q))
        out.append(tuple(r))
    return tuple(out)


def verify_document(doc, A, B, entries=()):
    """Re-verify a certificate document exactly; returns (ok, checks)."""
    if doc.get("verdict") != CONJUGATE:
        return True, {}
    ring = doc["ring"]
    if ring["kind"] == "local":
        results = [verify_document(p, A, B, entries) for p in doc.get("parts", [])]
        return all(ok for ok, _ in results), {"parts": [c for _, c in results]}
    if "C" not in doc:
        return False, {}
    field = order = None
    if ring["kind"] == "OF":
        entry = next((e for e in entries if e.name == ring.get("field")), None)
        if entry is not None:
            field, order = entry.order.algebra, entry.order
        else:
            field = NumberField(ring["poly"])
    C = parse_matrix_entries(doc["C"], field)
    checks = check_conjugator(A, B, C, ring, field, order)
    return all(checks.values()), checks


def emit_certificate(cert, A, B, entries=(), order_F=None):
    doc = certificate_doc(cert, A, B, order_F)
    round_trip = json.loads(dumps(doc))
    ok, _ = verify_document(round_trip, A, B, entries)
    if not ok:
        raise AssertionError("emitted certificate failed re-verification")
    return doc, (2 if cert.verdict == INCONCLUSIVE else 0)


# -- commands ----------------------------------------------------------------

def cmd_classify(args):
    if args.poly:
        f = IntPoly([int(c) for c in args.poly.split(",")])
    elif args.problem:
        f = load_problem(args.problem, need_b=False)[0]
    else:
        raise DataError("classify needs a problem file or --poly")
    pairs = classify(f)
    doc = {
        "f": list(f.coeffs),
        "class_count": len(pairs),
        "classes": [{
            "matrix": [list(r) for r in P.matrix],
            "ideal": module_doc(P.ideal),
            "multiplicator_ring": module_doc(colon(P.ideal, P.ideal)),
        } for P in pairs],
    }
    return doc, 0


def cmd_lm_ideal(args):
    f, A, B, _ = load_problem(args.problem, need_b=False)
    K = NumberField(f)
    out = {}
    for name, M in (("A", A), ("B", B)):
        if M is None:
            continue
        P = matrix_to_ideal(M, f, K)
        O = colon(P.ideal, P.ideal)
        out[name] = {
            "eigenvector": [to_json(x) for x in P.eigenbasis],
            "ideal": module_doc(P.ideal),
            "multiplicator_ring": module_doc(O),
            "index_in_ring": rational(module_norm(P.ideal, O)),
        }
    return {"f": list(f.coeffs), "ideals": out}, 0


def cmd_test_z(args):
    _, A, B, _ = load_problem(args.problem)
    return emit_certificate(test_z(A, B), A, B)


def _primes(args, opts, f):
    if args.primes:
        return [int(p) for p in args.primes.split(",")]
    if "primes" in opts:
        return [int(p) for p in opts["primes"]]
    return list(primefactors(abs(discriminant(f))))


def cmd_test_zp(args):
    f, A, B, opts = load_problem(args.problem)
    certs = [test_zp(A, B, p) for p in _primes(args, opts, f)]
    docs = [emit_certificate(c, A, B) for c in certs]
    code = 2 if any(c == 2 for _, c in docs) else 0
    return {"results": [d for d, _ in docs]}, code


def cmd_test_local(args):
    _, A, B, _ = load_problem(args.problem)
    return emit_certificate(test_local(A, B), A, B)


def cmd_test_ext(args):
    f, A, B, opts = load_problem(args.problem)
    entries = load_entries(args.catalog)
    entry = pick_entry(entries, args.entry)
    bf, prec = _options(args, opts)
    cert = test_ext(A, B, entry, bf, prec, args.max_candidates)
    return emit_certificate(cert, A, B, entries, entry.order)


def cmd_search_ext(args):
    f, A, B, opts = load_problem(args.problem)
    entries = load_entries(args.catalog)
    bf, prec = _options(args, opts)
    exhaustive = args.exhaustive or bool(opts.get("exhaustive", False))
    report = search_catalog(A, B, entries, exhaustive, bf, prec, args.route_split,
                            Path(args.problem).stem, args.max_candidates)
    outcomes = []
    for out in report.outcomes:
        d = {"entry": out.entry, "status": out.status, "details": to_json(out.details)}
        if out.certificate is not None:
            entry = pick_entry(entries, out.entry)
            d["certificate"], _ = emit_certificate(out.certificate, A, B, entries, entry.order)
        outcomes.append(d)
    doc = {"problem": report.problem_id, "outcomes": outcomes, "first_pass": report.first_pass}
    return doc, 0 if report.passed else 2


def cmd_obstruct_split(args):
    f, A, B, opts = load_problem(args.problem, need_b=args.ideal == "colon")
    entries = load_entries(args.catalog)
    entry = pick_entry(entries, args.entry)
    bf, prec = _options(args, opts)
    K = NumberField(f)
    if args.ideal == "colon":
        I = colon(matrix_to_ideal(A, f, K).ideal, matrix_to_ideal(B, f, K).ideal)
        basis = None
    else:
        P = matrix_to_ideal(A if args.ideal == "A" else B, f, K)
        I, basis = P.ideal, P.eigenbasis
    direction = [int(c) for c in args.direction.split(",")] if args.direction else None
    verdict = split_obstruction(I, entry, basis=basis, direction=direction, bound_factor=bf, precision=prec)
    doc = {"entry": entry.name, "ideal": module_doc(I), "result": to_json(verdict)}
    return doc, 0 if verdict.decided else 2


def reproduce_row(row, catalog, max_degree, bound_factor, precision):
    f = IntPoly(row["f"])
    A = as_matrix(row["A"])
    n = f.degree
    companion_t = as_matrix([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n - 1)]
                            + [[-c for c in f.coeffs[:-1]]])
    out = {"f": list(f.coeffs)}
    classes = classify(f)
    out["class_count"] = len(classes)
    out["class_count_ok"] = len(classes) == row["h"]
    z = test_z(companion_t, A)
    out["non_principal"] = z.verdict == "NotConjugate"
    loc = test_local(companion_t, A)
    out["locally_conjugate"] = loc.verdict == CONJUGATE
    out["genus_same"] = loc.transcript["genus_same"]
    out["per_prime"] = loc.transcript["per_prime"]
    ok = out["class_count_ok"] and out["non_principal"] and out["locally_conjugate"]
    inconclusive = False
    success = row["success"]
    if success["kind"] == "field":
        entry = next((e for e in catalog if list(e.defining_poly.coeffs) == success["poly"]), None)
        if entry is None:
            out["extension"] = {"status": "NoCatalogEntry"}
        elif entry.defining_poly.degree > max_degree:
            out["extension"] = {"status": "Skipped", "reason": f"field degree above {max_degree}"}
        else:
            cert = test_ext(companion_t, A, entry, bound_factor, precision)
            out["extension"] = {"entry": entry.name, "verdict": cert.verdict}
            if cert.verdict == CONJUGATE:
                out["extension"]["certificate"], _ = emit_certificate(cert, companion_t, A, catalog, entry.order)
            else:
                out["extension"]["transcript"] = to_json(cert.transcript)
                inconclusive = True
    out["pass"] = ok
    return out, ok, inconclusive


def cmd_reproduce_tables(args):
    doc = _read_json(args.table)
    catalog = load_entries(args.catalog) if args.catalog else load_entries(fixtures.path("catalogs/table_fields.json"))
    bf, prec = _options(args, {})
    rows = []
    all_ok, any_inconclusive = True, False
    for row in doc["rows"]:
        out, ok, inc = reproduce_row(row, catalog, args.max_degree, bf, prec)
        rows.append(out)
        all_ok &= ok
        any_inconclusive |= inc
    report = {"table": doc.get("table"), "rows": rows, "all_pass": all_ok}
    return report, 1 if not all_ok else (2 if any_inconclusive else 0)


def cmd_verify(args):
    cert = _read_json(args.certificate)
    _, A, B, _ = load_problem(args.problem)
    entries = load_entries(args.catalog) if args.catalog else []
    ok, checks = verify_document(cert, A, B, entries)
    return {"verified": ok, "checks": to_json(checks)}, 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="intconj", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound-factor", type=str, default=None)
    common.add_argument("--precision", type=int, default=None)
    common.add_argument("--max-candidates", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="one matrix per Z-conjugacy class")
    p.add_argument("problem", nargs="?")
    p.add_argument("--poly", help="coefficients, lowest degree first, comma separated")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lm-ideal", help="ideals attached to A and B")
    p.add_argument("problem")
    p.set_defaults(func=cmd_lm_ideal)

    p = sub.add_parser("test-z", help="conjugacy over Z")
    p.add_argument("problem")
    p.set_defaults(func=cmd_test_z)

    p = sub.add_parser("test-zp", help="conjugacy over Z_p")
    p.add_argument("problem")
    p.add_argument("-p", "--primes", help="comma separated primes (default: primes dividing disc f)")
    p.set_defaults(func=cmd_test_zp)

    p = sub.add_parser("test-local", help="local conjugacy, two ways")
    p.add_argument("problem")
    p.set_defaults(func=cmd_test_local)

    p = sub.add_parser("test-ext", parents=[common], help="conjugacy over O_F for one catalog entry")
    p.add_argument("problem")
    p.add_argument("catalog")
    p.add_argument("--entry")
    p.set_defaults(func=cmd_test_ext)

    p = sub.add_parser("search-ext", parents=[common], help="search a catalog of fields")
    p.add_argument("problem")
    p.add_argument("catalog")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--route-split", action="store_true")
    p.set_defaults(func=cmd_search_ext)

    p = sub.add_parser("obstruct-split", parents=[common], help="obstruction when f splits over F")
    p.add_argument("problem")
    p.add_argument("catalog")
    p.add_argument("--entry")
    p.add_argument("--ideal", choices=["colon", "A", "B"], default="colon")
    p.add_argument("--direction", help="comma separated O_F coordinates of a line to analyse")
    p.set_defaults(func=cmd_obstruct_split)

    p = sub.add_parser("reproduce-tables", parents=[common], help="re-derive every row of a table fixture")
    p.add_argument("table")
    p.add_argument("--catalog")
    p.add_argument("--max-degree", type=int, default=2)
    p.set_defaults(func=cmd_reproduce_tables)

    p = sub.add_parser("verify", help="re-check a certificate document")
    p.add_argument("certificate")
    p.add_argument("problem")
    p.add_argument("--catalog")
    p.set_defaults(func=cmd_verify)
    return parser


def run_command(argv, out=None):
    """Run one command; returns (exit code, document or None)."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (1 if exc.code else 0), None
    try:
        doc, code = args.func(args)
    except (DataError, ValueError) as exc:
        print(dumps({"error": str(exc)}), end="", file=sys.stderr)
        return 1, None
    out.write(dumps(doc))
    return code, doc


def main(argv=None):
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
