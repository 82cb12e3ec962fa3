"""Command line front end.

Exit codes: 0 success, 1 the method does not apply to this input, 2 bad input,
3 an internal invariant failed (including a failing ``replicate`` check).
"""

import argparse
import json
import sys
import time

from . import errors
from .decide import decide_saturable, sticky_screen
from .hilbert import hilbert_function
from .ideal import Ideal, saturate
from .limits import limit_ideal, verify_limit_forms
from .obstruction import hom0, hom0_table, obfib_dimension, obfib_table, verdict
from .problem import load_problem

NOT_APPLICABLE = (
    errors.HypothesesNotMet,
    errors.UnsupportedHilbertFunction,
    errors.WrongCharacteristic,
    errors.ShapeMismatch,
    errors.SquareDoesNotAnnihilate,
    errors.NotStabilized,
    errors.MembershipFails,
    errors.DependentLimits,
    errors.LinearSolveFailed,
    errors.NoTransverseElement,
    errors.NotTransverse,
    errors.PointsCollideIdentically,
)
BAD_INPUT = (errors.ParseError, errors.NotClosedUnderContraction, errors.CandidateNotBetween, OSError)


class Report:
    def __init__(self, command, problem=None):
        self.command = command
        self.input_hash = problem.input_hash if problem is not None else None
        self.payload = {}
        self.certificates = []
        self.assumptions = []
        self.lines = []
        self.code = 0

    def as_dict(self, elapsed):
        out = {"command": self.command, "input_hash": self.input_hash}
        out.update(self.payload)
        out["certificates"] = self.certificates
        out["assumptions"] = self.assumptions
        out["timing_ms"] = round(elapsed * 1000, 3)
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


def _table_text(table):
    return ", ".join(f"{k}: {v}" for k, v in sorted(table.items()))


# -- subcommands ------------------------------------------------------------------------
def cmd_saturate(args, rep):
    P = load_problem(args.file)
    rep.input_hash = P.input_hash
    I = P.ideal()
    Isat = saturate(I, method=args.method)
    rep.payload["value"] = [str(g) for g in Isat.generators]
    rep.payload["saturated"] = Isat.issubset(I)
    rep.lines.append(str(Isat))


def cmd_hilbert(args, rep):
    P = load_problem(args.file)
    rep.input_hash = P.input_hash
    I = P.ideal()
    if args.power > 1:
        I = I**args.power
    if args.saturate:
        I = saturate(I)
    if args.multigraded:
        H = hilbert_function(I, args.bound, multigraded=True)
        rep.payload["value"] = {str(k): v for k, v in sorted(H.values.items())}
        rep.lines.append(str(H))
        return
    bound = max(args.bound, args.at or 0)
    H = hilbert_function(I, bound)
    if args.at is not None:
        rep.payload["value"] = H[args.at]
        rep.lines.append(str(H[args.at]))
    else:
        rep.payload["value"] = str(H)
        rep.payload["values"] = H.as_list(bound)
        rep.lines.append(str(H))
    if H.certified:
        rep.certificates.append(
            {"dimension": H.dimension, "eventual_value": H.eventual_value, "stabilization_degree": H.stabilization_degree}
        )


def cmd_obfib(args, rep):
    P = load_problem(args.file)
    rep.input_hash = P.input_hash
    I = P.ideal()
    if I.ring.rank > 1 or args.table:
        table = obfib_table(I)
        rep.payload["value"] = {str(k): v for k, v in table.items()}
        rep.certificates.append({"method": "underived_hom", "degrees": "(0, k)"})
        rep.lines.append("ObFib by second degree: {" + _table_text(table) + "}")
        return
    J = P.ideal("target") if P.has("target") else None
    report = obfib_dimension(I, J, method=args.method)
    rep.payload["value"] = report.dimension
    rep.certificates.append(report.as_dict())
    rep.lines.append(f"ObFib = {report.dimension} ({report.method})")
    if J is None:
        v = verdict(I, assert_smooth_Jsat=args.assert_smooth)
        rep.payload["verdict"] = v.outcome
        rep.payload.update({k: v.as_dict()[k] for k in ("route", "obfib_dim", "jump_degree", "reasons")})
        rep.assumptions.extend(v.assumptions)
        rep.certificates.extend(v.certificates)
        rep.lines.append(f"verdict: {v.outcome}")


def cmd_hom0(args, rep):
    P = load_problem(args.file)
    rep.input_hash = P.input_hash
    K = P.ideal()
    J = P.ideal("target") if P.has("target") else K
    if K.ring.rank > 1 or args.table:
        table = hom0_table(K, J)
        rep.payload["value"] = {str(k): v for k, v in table.items()}
        rep.lines.append("Hom(K, S/J)_(0,k): {" + _table_text(table) + "}")
        return
    h = hom0(K, J)
    rep.payload["value"] = h.dimension
    rep.certificates.append(h.as_dict())
    rep.lines.append(f"dim Hom(K, S/J)_0 = {h.dimension}")


def cmd_decide(args, rep):
    P = load_problem(args.file)
    rep.input_hash = P.input_hash
    I = P.ideal()
    if args.screen:
        res = sticky_screen(I, assert_smooth=args.assert_smooth)
        rep.payload["verdict"] = res["outcome"]
        rep.certificates.extend(res["entries"])
        rep.lines.append(res["outcome"])
        return
    v = decide_saturable(I)
    rep.payload["verdict"] = v.outcome
    rep.payload["route"] = v.route
    rep.payload["reasons"] = v.reasons
    rep.certificates.extend(v.certificates)
    rep.assumptions.extend(v.assumptions)
    rep.lines.append(v.outcome)


def cmd_limit(args, rep):
    P = load_problem(args.file)
    rep.input_hash = P.input_hash
    if P.has("points"):
        L = limit_ideal(P.points(), args.degree_bound, P.ring, route=args.route)
    else:
        L = limit_ideal(P.family(), args.degree_bound)
    H = L.hilbert()
    rep.payload["value"] = [str(g) for g in L.ideal.generators]
    rep.payload["hilbert"] = H
    rep.payload["generic_dims"] = {str(e): v for e, v in sorted(L.generic_dims.items())}
    rep.payload["complete_signal"] = L.complete_signal
    rep.lines.append(str(L.ideal))
    rep.lines.append("H = (" + ",".join(map(str, H)) + ")")
    if not L.complete_signal:
        rep.lines.append(f"generators reach degree {args.degree_bound}; a larger bound may add more")


def cmd_verify(args, rep):
    P = load_problem(args.file)
    rep.input_hash = P.input_hash
    fam, forms, exps = P.family(), P.limit_forms(), P.exponents()
    results = {}
    for e in sorted(forms):
        if e not in fam or e not in exps:
            raise errors.ParseError(f"limit-forms({e}) needs family({e}) and exponents({e})")
        r = verify_limit_forms(fam[e], forms[e], exps[e])
        results[str(e)] = r.as_dict()
        rep.lines.append(f"degree {e}: certified, limit spanned by {', '.join(map(str, r.limit))}")
    if not results:
        raise errors.ParseError("no limit-forms(e) sections")
    rep.payload["value"] = "certified"
    rep.certificates.append(results)


def _ell(P, text):
    from .rank3 import primal_ring

    S = primal_ring(P.form())
    return S.parse(text)


def _matrix(text):
    return [[int(x) for x in row.split()] for row in text.split("/")]


def cmd_rank3(args, rep):
    from . import rank3

    P = load_problem(args.file)
    rep.input_hash = P.input_hash
    F = P.form()
    sub = args.sub
    if sub == "ann":
        A, H = rank3.apolar_ideal(F)
        rep.payload["value"] = [str(g) for g in A.generators]
        rep.payload["hilbert"] = H
        rep.lines.append(str(A))
        rep.lines.append("H = (" + ",".join(map(str, H)) + ")")
        return
    if sub == "middle":
        sigma = rank3.middle_generator(F, _ell(P, args.ell))
        rep.payload["value"] = str(sigma)
        rep.lines.append(str(sigma))
        return
    if sub == "exclude-wild":
        changes = [_matrix(m) for m in args.change]
        out = rank3.exclude_wild(F, args.assumed_br, changes, search=not args.no_search)
        rep.payload["verdict"] = out["status"]
        rep.assumptions.extend(out["assumptions"])
        if "certificate" in out:
            rep.certificates.append(out["certificate"])
            rep.payload["pattern"] = out["pattern"]
            rep.payload["change"] = out["change"]
            rep.lines.append(f"{out['status']}: {out['conclusion']}")
        else:
            rep.lines.append(out["status"])
            rep.code = 1
        return
    if sub == "square-cert":
        cert = rank3.cactus_via_square(F, _ell(P, args.ell))
    elif sub == "special3":
        cert = rank3.special_case_3(F)
    else:
        cert = rank3.special_case_4(F)
    rep.payload["value"] = cert.r
    rep.certificates.append(cert.as_dict())
    rep.lines.append(f"cactus rank <= {cert.r} via {cert.route}: {cert.ideal}")
    rep.lines.append("checks: " + ", ".join(f"{k}={v}" for k, v in cert.checks.items()))


def cmd_replicate(args, rep):
    from .replication import replicate

    rows = replicate(jobs=args.jobs, names=args.only or None)
    width = max(len(r[0]) for r in rows)
    ok = True
    results = []
    for name, passed, detail, secs in rows:
        ok = ok and passed
        rep.lines.append(f"{'PASS' if passed else 'FAIL'}  {name:<{width}}  {detail}")
        results.append({"name": name, "passed": passed, "detail": detail, "seconds": round(secs, 3)})
    rep.payload["verdict"] = "all passed" if ok else "failures"
    rep.certificates.extend(results)
    if not ok:
        rep.code = 3


# -- argument parsing --------------------------------------------------------------------
def build_parser():
    p = argparse.ArgumentParser(prog="saturable", description="Saturability of homogeneous ideals, exactly.")
    p.add_argument("--json", action="store_true", help="print a JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(fn=fn)
        return sp

    s = add("saturate", cmd_saturate, "saturation I^sat")
    s.add_argument("--method", default="auto", choices=["auto", "colon", "irrelevant"])

    s = add("hilbert", cmd_hilbert, "Hilbert function of S/I")
    s.add_argument("--power", type=int, default=1)
    s.add_argument("--at", type=int)
    s.add_argument("--bound", type=int, default=10)
    s.add_argument("--saturate", action="store_true", help="use I^sat")
    s.add_argument("--multigraded", action="store_true")

    s = add("obfib", cmd_obfib, "fiber obstruction dimension and verdict")
    s.add_argument("--method", default="auto", choices=["auto", "gorenstein_formula", "line_and_points_formula", "underived_hom"])
    s.add_argument("--table", action="store_true", help="table over the second grading coordinate")
    s.add_argument("--assert-smooth", action="store_true", help="take [I^sat] to be a smooth point")

    s = add("hom0", cmd_hom0, "dim Hom(I, S/J) in degree 0")
    s.add_argument("--table", action="store_true")

    s = add("decide", cmd_decide, "saturability for H = (1,d,d,...), d <= 5")
    s.add_argument("--screen", action="store_true", help="sticky-ideal screen instead")
    s.add_argument("--assert-smooth", action="store_true")

    s = add("limit", cmd_limit, "degreewise limit at t = 0")
    s.add_argument("--degree-bound", type=int, required=True)
    s.add_argument("--route", default="dual", choices=["dual", "kernel"])

    add("verify-limit-forms", cmd_verify, "check claimed limit forms")

    s = add("rank3", cmd_rank3, "cactus-rank certificates for ternary forms", file=False)
    s.add_argument("sub", choices=["ann", "middle", "square-cert", "special3", "special4", "exclude-wild"])
    s.add_argument("file")
    s.add_argument("--ell", default="a0", help="linear form for middle / square-cert")
    s.add_argument("--assumed-br", type=int, default=None, help="border rank bound supplied by the caller")
    s.add_argument("--change", action="append", default=[], help="extra coordinate change, rows separated by '/'")
    s.add_argument("--no-search", action="store_true", help="only the given coordinates and --change matrices")

    s = add("replicate", cmd_replicate, "re-derive the worked examples", file=False)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--only", action="append", help="run only the named check (repeatable)")
    return p


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    rep = Report(args.command)
    t0 = time.perf_counter()
    code = 0
    try:
        if args.command == "rank3" and args.sub == "exclude-wild" and args.assumed_br is None:
            raise errors.ParseError("exclude-wild needs --assumed-br")
        args.fn(args, rep)
        code = rep.code
    except BAD_INPUT as exc:
        code, msg = 2, f"input error: {exc}"
    except errors.InternalError as exc:
        code, msg = 3, f"internal error: {exc}"
    except NOT_APPLICABLE as exc:
        code, msg = 1, f"not applicable: {type(exc).__name__}: {exc}"
    except errors.SaturableError as exc:
        code, msg = 1, f"{type(exc).__name__}: {exc}"
    except ValueError as exc:
        code, msg = 2, f"input error: {exc}"
    else:
        msg = None
    elapsed = time.perf_counter() - t0
    if msg is not None:
        rep.payload.setdefault("verdict", "error" if code != 1 else "not applicable")
        rep.payload["error"] = msg
        rep.lines.append(msg)
    if getattr(args, "json", False):
        out.write(json.dumps(_jsonable(rep.as_dict(elapsed)), indent=2, sort_keys=False) + "\n")
    else:
        out.write("\n".join(rep.lines) + "\n")
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
