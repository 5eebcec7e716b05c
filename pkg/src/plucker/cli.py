"""Command-line front end.

Every command parses a curve (or a corpus of curves), runs the exact
machinery, and prints either a human-oriented text report or a JSON
document.  JSON output is deterministic for a fixed seed: keys are
sorted, every number is rendered as a string, and the timing field is
always null so that two runs of the same invocation are byte-identical.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .algebra.fields import PrimeField, Rationals
from .algebra.parser import parse_poly, poly_to_string, scalar_to_string
from .curve import PlaneCurve, PointP2
from .duality import (DUAL_CLASS_LIMIT, class_of, dual_curve, duality_report,
                      bidual_check, plucker_suite, translation_pencil_audit)
from .errors import (GenericityError, InvariantViolation, ParseError,
                     PluckerError, PrecisionExhausted, UnsupportedFieldError,
                     ValidationError)
from .genus import differential_decomposition, genus, genus_from_singularities
from .sampling import RESAMPLE_BUDGET, Sampler
from .series import INFINITY, Pencil


# ---------------------------------------------------------------- options


def _parse_field(spec):
    if spec == "Q":
        return Rationals()
    if spec.startswith("Fp:"):
        tail = spec[3:]
        if not tail.isdigit():
            raise UnsupportedFieldError(
                "bad field %r: the prime in Fp:<p> must be an integer" % spec)
        return PrimeField(int(tail))
    raise UnsupportedFieldError(
        "unknown field %r: use Q or Fp:<p>" % spec)


def _sampler(args):
    budget = args.max_retries if args.max_retries is not None else RESAMPLE_BUDGET
    if budget < 1:
        raise ValidationError("--max-retries must be at least 1")
    return Sampler(seed=args.seed, budget=budget)


def _curve(args):
    field = _parse_field(args.field)
    return PlaneCurve(parse_poly(args.curve, field))


def _parse_coordinate(text, field):
    text = text.strip()
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError("bad coordinate %r" % text)
    c = field.coerce(q.numerator)
    if q.denominator != 1:
        c = c / field.coerce(q.denominator)
    return c


def _parse_point(text, field):
    parts = text.split(",")
    coords = [_parse_coordinate(p, field) for p in parts]
    if len(coords) == 2:
        coords.append(field.one)
    if len(coords) != 3:
        raise ParseError(
            "a point needs two affine or three projective coordinates, "
            "got %d" % len(coords))
    return PointP2(tuple(coords), field)


# ----------------------------------------------------------------- output


def _stringify(value):
    """Rewrite a report tree for JSON: ints and scalars become strings,
    booleans and None survive, floats are banned outright."""
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        raise InvariantViolation("a float leaked into a report")
    if isinstance(value, Fraction):
        return scalar_to_string(value)
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return scalar_to_string(value)


def _emit(args, payload, text_lines):
    if args.fmt == "json":
        doc = json.dumps(_stringify(payload), indent=2, sort_keys=True)
        sys.stdout.write(doc + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _fmt_point(pt):
    return "(%s)" % " : ".join(scalar_to_string(c) for c in pt.coords)


def _fmt_line(field, coeffs):
    pieces = []
    for c, v in zip(coeffs, ("X", "Y", "Z")):
        if not c:
            continue
        s = scalar_to_string(c, wrap=True)
        pieces.append(v if s == "1" else "%s*%s" % (s, v))
    return " + ".join(pieces) if pieces else "0"


def _fmt_series(s, var="t", depth=8):
    lim = min(depth, s.prec)
    pieces = []
    for k in range(lim):
        c = s.coeff_at(k)
        if not c:
            continue
        cs = scalar_to_string(c, wrap=True)
        if k == 0:
            pieces.append(cs)
        elif k == 1:
            pieces.append(var if cs == "1" else "%s*%s" % (cs, var))
        else:
            mono = "%s^%d" % (var, k)
            pieces.append(mono if cs == "1" else "%s*%s" % (cs, mono))
    head = " + ".join(pieces) if pieces else "0"
    if lim < s.prec:
        return head + " + ..."
    return "%s + O(%s^%d)" % (head, var, s.prec)


def _fmt_level(val):
    if val is INFINITY or (isinstance(val, str) and val == INFINITY):
        return "inf"
    return scalar_to_string(val)


def _yesno(flag):
    if flag is None:
        return "unknown"
    return "yes" if flag else "no"


def _branch_text(br, indent="  "):
    beta = "inf" if br.beta is None else str(br.beta)
    return ("%sbranch at %s: character (%d, %s), tangent %s, conjugates %d"
            % (indent, _fmt_point(br.point), br.alpha, beta,
               _fmt_line(br.point.field, br.tangent), br.multiplicity()))


# ---------------------------------------------------------------- analyze


def cmd_analyze(args):
    curve = _curve(args)
    smp = _sampler(args)
    t0 = time.monotonic()
    flex_note = None
    try:
        verdict = plucker_suite(curve, sampler=smp)
    except UnsupportedFieldError as e:
        verdict = None
        flex_note = str(e)
    reports = curve.singularities()
    try:
        flexrecs = curve.flexes()
    except UnsupportedFieldError as e:
        flexrecs = None
        flex_note = str(e)
    duality = None
    duality_note = None
    try:
        duality = duality_report(curve, sampler=smp)
    except UnsupportedFieldError as e:
        duality_note = str(e)
    elapsed = time.monotonic() - t0

    payload = {
        "command": "analyze",
        "field": args.field,
        "seed": args.seed,
        "curve": poly_to_string(curve.form),
        "degree": curve.degree,
        "invariants": verdict.json_dict() if verdict is not None else None,
        "flex_note": flex_note,
        "singularities": [rep.json_dict() for rep in reports],
        "flexes": ([rec.json_dict() for rec in flexrecs]
                   if flexrecs is not None else None),
        "duality": duality.json_dict() if duality is not None else None,
        "duality_note": duality_note,
        "timing_ms": None,
    }

    lines = ["curve: %s" % payload["curve"],
             "field: %s   degree: %d" % (args.field, curve.degree)]
    if verdict is not None:
        inv = ["n=%d" % verdict.n]
        if verdict.d is not None:
            inv.append("d=%d" % verdict.d)
        if verdict.m is not None:
            inv.append("m=%d" % verdict.m)
        if verdict.i is not None:
            inv.append("i=%d" % verdict.i)
        if verdict.rho is not None:
            inv.append("rho=%d" % verdict.rho)
        lines.append("invariants: " + "  ".join(inv))
        lines.append("normal: %s   node-only: %s   ordinary flexes: %s"
                     % (_yesno(verdict.normal), _yesno(verdict.node_only),
                        _yesno(verdict.ordinary_flexes)))
    if flex_note:
        lines.append("note: %s" % flex_note)
    if reports:
        lines.append("singular points:")
        for rep in reports:
            lines.append("  %s at %s, multiplicity %d, %d branch(es)"
                         % (rep.kind, _fmt_point(rep.point),
                            rep.multiplicity, len(rep.branches)))
            for br in rep.branches:
                lines.append(_branch_text(br, indent="    "))
    else:
        lines.append("singular points: none")
    if flexrecs is not None:
        total = sum(rec.multiplicity() for rec in flexrecs)
        lines.append("flexes: %d counted with conjugates" % total)
        for rec in flexrecs:
            lines.append("  at %s: weight %d, conjugates %d"
                         % (_fmt_point(rec.point), rec.weight,
                            rec.multiplicity()))
    if verdict is not None:
        lines.append("identities:")
        for chk in verdict.checks:
            if not chk.applicable:
                lines.append("  %-26s suppressed (%s)" % (chk.name, chk.reason))
            else:
                word = "pass" if chk.ok else "FAIL"
                lines.append("  %-26s %s   lhs %d, rhs %d"
                             % (chk.name, word, chk.lhs, chk.rhs))
        lines.append("all identities hold: %s" % _yesno(verdict.all_pass))
    if duality is not None:
        lines.append("duality:")
        lines.append("  class: %d" % duality.m)
        if duality.dual is not None:
            lines.append("  dual: %s" % duality.dual_form_string())
            lines.append("  bidual matches: %s" % _yesno(duality.bidual))
            for rec in duality.transforms:
                lines.append("  transport %s -> %s at %s: %s"
                             % (rec.branch.characters(), rec.found,
                                _fmt_point(rec.branch.point),
                                _yesno(rec.ok)))
            if duality.tangents:
                for tan in duality.tangents:
                    lines.append("  multiple tangent %s touching %d branches"
                                 % (_fmt_line(curve.field, tan.line),
                                    tan.count))
            else:
                lines.append("  multiple tangents: none")
        else:
            lines.append("  dual: skipped (%s)" % duality.skip_reason)
    elif duality_note:
        lines.append("duality: skipped (%s)" % duality_note)
    lines.append("elapsed: %.2fs" % elapsed)
    _emit(args, payload, lines)
    return 0


# ----------------------------------------------------------------- verify


def _check_entry(name, status, detail):
    return {"name": name, "status": status, "detail": detail}


def _run_check(name, fn, checks, ranks):
    """Run one named verification, folding errors into a status."""
    try:
        ok, detail = fn()
    except (ValidationError, UnsupportedFieldError) as e:
        checks.append(_check_entry(name, "skip", str(e)))
        return
    except GenericityError as e:
        checks.append(_check_entry(name, "error", str(e)))
        ranks.append(4)
        return
    except (InvariantViolation, PrecisionExhausted) as e:
        checks.append(_check_entry(name, "fail", str(e)))
        ranks.append(5)
        return
    if ok:
        checks.append(_check_entry(name, "pass", detail))
    else:
        checks.append(_check_entry(name, "fail", detail))
        ranks.append(5)


def _verify_one(expr, field, args, ranks):
    entry = {"input": expr, "curve": None, "skipped": None,
             "error": None, "checks": []}
    try:
        curve = PlaneCurve(parse_poly(expr, field))
    except (ParseError, ValidationError, UnsupportedFieldError) as e:
        entry["error"] = str(e)
        ranks.append(e.exit_code if e.exit_code >= 2 else 2)
        return entry
    entry["curve"] = poly_to_string(curve.form)
    try:
        curve.flexes()
    except UnsupportedFieldError:
        entry["skipped"] = "infinitely many flexes"
        return entry

    checks = entry["checks"]
    state = {}

    def suite():
        verdict = plucker_suite(curve, sampler=_sampler(args))
        state["verdict"] = verdict
        applicable = [c for c in verdict.checks if c.applicable]
        if not applicable:
            return True, "all identities suppressed: %s" % verdict.checks[0].reason
        bad = [c.name for c in applicable if not c.ok]
        if bad:
            return False, "failed: %s" % ", ".join(bad)
        return True, "%d identities hold" % len(applicable)

    def bidual():
        verdict = state.get("verdict")
        m = verdict.m if verdict is not None else None
        if m is None:
            m = class_of(curve, sampler=_sampler(args))
        if m > DUAL_CLASS_LIMIT:
            raise UnsupportedFieldError(
                "class %d exceeds the dual elimination budget %d"
                % (m, DUAL_CLASS_LIMIT))
        ok = bidual_check(curve, sampler=_sampler(args))
        return ok, "the dual of the dual equals the curve"

    def translation():
        audit = translation_pencil_audit(curve, sampler=_sampler(args))
        detail = ("%d = %d class + %d infinity + %d node"
                  % (audit.class_count + audit.infinity_count
                     + audit.node_count,
                     audit.class_count, audit.infinity_count,
                     audit.node_count))
        return audit.ok, detail

    def decomposition():
        rep = differential_decomposition(curve, sampler=_sampler(args))
        return rep.matched, ("zeros %d, poles %d"
                             % (rep.zero_total, rep.pole_total))

    _run_check("plucker-suite", suite, checks, ranks)
    _run_check("bidual", bidual, checks, ranks)
    _run_check("translation-audit", translation, checks, ranks)
    _run_check("differential-decomposition", decomposition, checks, ranks)
    return entry


def cmd_verify(args):
    field = _parse_field(args.field)
    try:
        with open(args.corpus, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as e:
        raise ParseError("cannot read corpus %s: %s" % (args.corpus, e))
    exprs = []
    for line in raw.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            exprs.append(stripped)

    ranks = []
    entries = [_verify_one(expr, field, args, ranks) for expr in exprs]

    passed = failed = skipped = errors = 0
    for entry in entries:
        if entry["error"] is not None:
            errors += 1
        elif entry["skipped"] is not None:
            skipped += 1
        elif any(c["status"] in ("fail", "error") for c in entry["checks"]):
            failed += 1
        else:
            passed += 1
    exit_code = 0
    if any(r == 5 for r in ranks):
        exit_code = 5
    elif any(r == 4 for r in ranks):
        exit_code = 4
    elif ranks:
        exit_code = max(ranks)

    payload = {
        "command": "verify",
        "field": args.field,
        "seed": args.seed,
        "corpus": args.corpus,
        "curves": entries,
        "summary": {"curves": len(entries), "passed": passed,
                    "failed": failed, "skipped": skipped, "errors": errors},
        "exit_code": exit_code,
        "timing_ms": None,
    }

    lines = []
    for idx, entry in enumerate(entries, 1):
        lines.append("[%d/%d] %s" % (idx, len(entries), entry["input"]))
        if entry["error"] is not None:
            lines.append("  error: %s" % entry["error"])
            continue
        if entry["skipped"] is not None:
            lines.append("  skipped: %s" % entry["skipped"])
            continue
        for chk in entry["checks"]:
            lines.append("  %s: %s (%s)"
                         % (chk["name"], chk["status"], chk["detail"]))
    lines.append("summary: %d curve(s), %d passed, %d failed, %d skipped, "
                 "%d error(s)" % (len(entries), passed, failed, skipped,
                                  errors))
    _emit(args, payload, lines)
    return exit_code


# --------------------------------------------------------------- branches


def cmd_branches(args):
    curve = _curve(args)
    pt = _parse_point(args.at, curve.field)
    if not curve.contains(pt):
        raise ValidationError("the point %s is not on the curve"
                              % _fmt_point(pt))
    brs = curve.branches_at(pt, min_precision=args.precision)
    payload = {
        "command": "branches",
        "field": args.field,
        "seed": args.seed,
        "curve": poly_to_string(curve.form),
        "point": pt.json_dict(),
        "branches": [br.json_dict() for br in brs],
        "timing_ms": None,
    }
    lines = ["curve: %s" % payload["curve"],
             "point: %s" % _fmt_point(pt),
             "branches: %d" % len(brs)]
    for br in brs:
        lines.append(_branch_text(br))
        dx, dy = br.param.deviations()
        lines.append("    x - x0 = %s" % _fmt_series(dx))
        lines.append("    y - y0 = %s" % _fmt_series(dy))
    _emit(args, payload, lines)
    return 0


# ------------------------------------------------------------------- dual


def cmd_dual(args):
    curve = _curve(args)
    smp = _sampler(args)
    m = class_of(curve, sampler=smp)
    dual = dual_curve(curve, sampler=smp, certified_class=m)
    shown = poly_to_string(dual.form.rename_vars(("U", "V", "W")))
    payload = {
        "command": "dual",
        "field": args.field,
        "seed": args.seed,
        "curve": poly_to_string(curve.form),
        "class": m,
        "dual_form": shown,
        "timing_ms": None,
    }
    lines = ["curve: %s" % payload["curve"],
             "class: %d" % m,
             "dual: %s" % shown]
    _emit(args, payload, lines)
    return 0


# ----------------------------------------------------------------- pencil


def cmd_pencil(args):
    curve = _curve(args)
    field = curve.field
    phi = parse_poly(args.phi, field)
    psi = parse_poly(args.psi, field)
    pen = Pencil(curve, phi, psi)
    deg = pen.map_degree()
    fixed, table = pen.fixed_and_mobile()
    jac = pen.jacobian()
    levels = [{"center": br.point.json_dict(), "level": _fmt_level(val),
               "mobile_index": e, "fixed_weight": fixed.weight_of(br)}
              for br, val, e in table]
    payload = {
        "command": "pencil",
        "field": args.field,
        "seed": args.seed,
        "curve": poly_to_string(curve.form),
        "phi": poly_to_string(phi),
        "psi": poly_to_string(psi),
        "map_degree": deg,
        "fixed_levels": levels,
        "jacobian": jac.json_dict(),
        "timing_ms": None,
    }
    lines = ["curve: %s" % payload["curve"],
             "pencil: (%s) / (%s)" % (payload["phi"], payload["psi"]),
             "map degree: %d" % deg]
    if table:
        lines.append("fixed part:")
        for br, val, e in table:
            lines.append("  at %s: weight %d, level %s, mobile index %d"
                         % (_fmt_point(br.point), fixed.weight_of(br),
                            _fmt_level(val), e))
    else:
        lines.append("fixed part: empty")
    lines.append("jacobian order: %d%s"
                 % (jac.order, "  (wild index present)" if jac.wild else ""))
    for br, w in jac.weights:
        lines.append("  at %s: weight %d" % (_fmt_point(br.point), w))
    _emit(args, payload, lines)
    return 0


# ------------------------------------------------------------------ genus


def cmd_genus(args):
    curve = _curve(args)
    smp = _sampler(args)
    rho = genus(curve, sampler=smp)
    try:
        by_nodes = genus_from_singularities(curve)
    except (ValidationError, UnsupportedFieldError):
        by_nodes = None
    if by_nodes is not None and by_nodes != rho:
        raise InvariantViolation(
            "pencil genus %d disagrees with the node count genus %d"
            % (rho, by_nodes))
    payload = {
        "command": "genus",
        "field": args.field,
        "seed": args.seed,
        "curve": poly_to_string(curve.form),
        "genus": rho,
        "genus_from_nodes": by_nodes,
        "timing_ms": None,
    }
    lines = ["curve: %s" % payload["curve"], "genus: %d" % rho]
    if by_nodes is not None:
        lines.append("node count route agrees: %d" % by_nodes)
    _emit(args, payload, lines)
    return 0


# ------------------------------------------------------------------- main


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", metavar="F",
                        help="coefficient field: Q (default) or Fp:<p> "
                             "for a prime field of odd order")
    common.add_argument("--seed", type=int, default=0,
                        help="sampler seed, default 0")
    common.add_argument("--format", choices=("json", "text"), default="text",
                        dest="fmt", help="output format")
    common.add_argument("--precision", type=int, default=None, metavar="N",
                        help="minimum series truncation order for "
                             "branch expansions")
    common.add_argument("--max-retries", type=int, default=None, metavar="K",
                        help="resampling budget for generic choices")

    ap = argparse.ArgumentParser(
        prog="plucker",
        description="Exact invariants of plane projective curves: "
                    "branches, genus, duals, and the classical "
                    "degree-class-singularity identities.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="full report: singular points, branches, "
                            "flexes, invariants, identities, duality")
    p.add_argument("curve", help="polynomial in X,Y,Z (or affine x,y)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common],
                       help="run the identity and duality checks over a "
                            "corpus file, one curve per line")
    p.add_argument("corpus", help="path to the corpus file; # starts a "
                                  "comment")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("branches", parents=[common],
                       help="Puiseux branches of a curve at a point")
    p.add_argument("curve")
    p.add_argument("--at", required=True, metavar="PT",
                   help="point, affine 'x,y' or projective 'x,y,z'")
    p.set_defaults(func=cmd_branches)

    p = sub.add_parser("dual", parents=[common],
                       help="class and dual curve equation")
    p.add_argument("curve")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("pencil", parents=[common],
                       help="map degree, fixed part and jacobian of a "
                            "pencil of forms on a curve")
    p.add_argument("curve")
    p.add_argument("--phi", required=True, help="first form")
    p.add_argument("--psi", required=True, help="second form")
    p.set_defaults(func=cmd_pencil)

    p = sub.add_parser("genus", parents=[common],
                       help="geometric genus through a generic line pencil")
    p.add_argument("curve")
    p.set_defaults(func=cmd_genus)
    return ap


def main(argv=None):
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except PluckerError as e:
        sys.stderr.write("error: %s\n" % e)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
