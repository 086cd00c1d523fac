"""Command-line front end.

Verbs: tutte, char, coboundary, invariants, poset, family, arith, toric,
multivariate, check.  Output is deterministic: polynomials print in graded
lexicographic order, highest term first.  Exit code 1 signals a parse or
input-format problem, 2 a computation error (bad prime, non-central query,
exceeded budget); either prints a one-line machine-readable `error:` record.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import families
from .arithmetic import (
    VectorConfig,
    arithmetic_char_poly,
    arithmetic_tutte,
    multivariate_tutte,
    toric_point_profile,
    zonotope_evaluations,
)
from .arrangement import Arrangement
from .errors import InputFormatError, TuttekitError
from .finite_field import DEFAULT_BUDGET, coboundary_ffm, point_profile, select_primes
from .poset import intersection_poset
from .tutte import (
    char_poly,
    coboundary_transform,
    scalar_invariants,
    tutte_activity,
    tutte_delcon,
    tutte_from_coboundary,
    tutte_subset,
    validate_chi_shape,
    whitney_char,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print("error: parse: %s" % message, file=sys.stderr)
        raise SystemExit(1)


def _budget(args):
    if getattr(args, "budget", None):
        return int(args.budget)
    env = os.environ.get("TUTTEKIT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _load_arrangement(path):
    try:
        with open(path) as f:
            text = f.read()
    except OSError as exc:
        raise InputFormatError("cannot read %s: %s" % (path, exc))
    return Arrangement.from_json(text)


def _load_config(path):
    try:
        with open(path) as f:
            text = f.read()
    except OSError as exc:
        raise InputFormatError("cannot read %s: %s" % (path, exc))
    return VectorConfig.from_text(text)


def _load_edges(path):
    try:
        with open(path) as f:
            lines = f.read().splitlines()
    except OSError as exc:
        raise InputFormatError("cannot read %s: %s" % (path, exc))
    edges = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputFormatError("graph line must be 'i j': %r" % line)
        edges.append((int(parts[0]), int(parts[1])))
    return edges


def _emit_poly(poly, args, extra=None):
    fmt = getattr(args, "format", "text")
    if fmt == "latex":
        print(poly.to_latex())
    elif fmt == "structured":
        record = {"polynomial": poly.term_list(), "text": poly.format()}
        if extra:
            record.update(extra)
        print(json.dumps(record, sort_keys=True))
    else:
        print(poly.format())


def _tutte_by_method(arr, args):
    method = getattr(args, "method", "auto") or "auto"
    if method == "auto":
        method = "subset" if arr.n <= 10 else "finite-field"
    if method == "subset":
        return tutte_subset(arr)
    if method == "delcon":
        return tutte_delcon(arr, memoize=True)
    if method == "activity":
        return tutte_activity(arr)[0]
    if method == "finite-field":
        cob = _coboundary_by_ffm(arr, args)
        r = arr.rank
        tut = tutte_from_coboundary(cob, r)
        from .tutte import TutteResult
        return TutteResult(tut, r, arr.n, "finite-field")
    raise InputFormatError("unknown method %r" % method)


def _coboundary_by_ffm(arr, args):
    primes = None
    spec = getattr(args, "primes", None)
    if spec and spec != "auto":
        primes = [int(p) for p in spec.split(",")]
    reduction = getattr(args, "reduction", None) or "auto"
    return coboundary_ffm(arr, primes=primes, reduction=reduction,
                          budget=_budget(args))


def _add_output_flags(p):
    p.add_argument("--format", choices=["text", "structured", "latex"],
                   default="text")


def _add_method_flags(p):
    p.add_argument("--method",
                   choices=["auto", "subset", "delcon", "activity",
                            "finite-field"], default="auto")
    p.add_argument("--primes", default="auto",
                   help="'auto' or comma-separated primes for finite-field")
    p.add_argument("--reduction", choices=["auto", "bound", "verified"],
                   default="auto")
    p.add_argument("--budget", type=int, default=None)


def build_parser():
    top = _Parser(prog="tuttekit",
                  description="Tutte polynomials of hyperplane arrangements")
    sub = top.add_subparsers(dest="verb", required=True)

    for verb in ("tutte", "char", "coboundary", "invariants", "poset",
                 "multivariate", "check"):
        p = sub.add_parser(verb, parents=[], add_help=True)
        p.add_argument("--input", required=True)
        _add_method_flags(p)
        _add_output_flags(p)

    p = sub.add_parser("family")
    p.add_argument("tag")
    p.add_argument("action", nargs="?", default="char",
                   choices=["tutte", "char", "coboundary", "invariants",
                            "poset", "multivariate", "check"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int, help="thicken: replace each hyperplane by k copies")
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--graph", help="edge file, one 'i j' per line, 1-indexed")
    _add_method_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("arith")
    p.add_argument("action", choices=["tutte", "zonotope", "toric", "char"])
    p.add_argument("--input", required=True)
    p.add_argument("--q", type=int)
    _add_output_flags(p)

    p = sub.add_parser("toric")
    p.add_argument("--input", required=True)
    p.add_argument("--q", type=int, required=True)
    _add_output_flags(p)

    return top


def _run_action(action, arr, args):
    if action == "tutte":
        result = _tutte_by_method(arr, args)
        _emit_poly(result.tutte, args,
                   {"method": result.engine, "rank": result.rank,
                    "n": result.n_hyperplanes, "dim": arr.dim})
    elif action == "char":
        chi = char_poly(arr)
        _emit_poly(chi, args, {"rank": arr.rank, "n": arr.n, "dim": arr.dim})
    elif action == "coboundary":
        method = getattr(args, "method", "auto") or "auto"
        if method == "finite-field" or (method == "auto" and arr.n > 10):
            cob = _coboundary_by_ffm(arr, args)
        else:
            cob = coboundary_transform(tutte_subset(arr).tutte, arr.rank)
        _emit_poly(cob, args, {"rank": arr.rank, "n": arr.n, "dim": arr.dim})
    elif action == "invariants":
        inv = scalar_invariants(arr)
        fmt = getattr(args, "format", "text")
        record = {
            "regions": str(inv["regions"]),
            "bounded_regions": str(inv["bounded_regions"]),
            "poincare": inv["poincare"].format(),
            "complement_size": inv["complement_size"].format(),
            "general_position_bounded": str(inv["general_position_bounded"]),
            "beta": None if inv["beta"] is None else str(inv["beta"]),
        }
        if fmt == "structured":
            print(json.dumps(record, sort_keys=True))
        else:
            for key in sorted(record):
                print("%s = %s" % (key, record[key]))
    elif action == "poset":
        poset = intersection_poset(arr)
        poset.verify_mobius()
        fmt = getattr(args, "format", "text")
        rows = [{"hyperplanes": sorted(f.hyperplane_set), "rank": f.rank,
                 "dim": f.dim, "mobius": poset.mobius[f.hyperplane_set]}
                for f in poset.flats]
        if fmt == "structured":
            print(json.dumps(rows))
        else:
            for row in rows:
                print("rank=%d dim=%d mu=%d hyperplanes=%s" % (
                    row["rank"], row["dim"], row["mobius"], row["hyperplanes"]))
    elif action == "multivariate":
        mv = multivariate_tutte(arr)
        _emit_poly(mv.poly, args, {"rank": mv.rank, "n": mv.n})
    elif action == "check":
        _run_check(arr, args)
    else:
        raise InputFormatError("unknown action %r" % action)


def _run_check(arr, args):
    """Cross-engine and identity consistency report; exits 2 on any failure."""
    failures = []

    def report(name, ok):
        print("%s %s" % ("ok  " if ok else "FAIL", name))
        if not ok:
            failures.append(name)

    t_sub = tutte_subset(arr).tutte
    t_dc = tutte_delcon(arr).tutte
    t_act = tutte_activity(arr)[0].tutte
    report("engine-agreement subset/delcon", t_sub == t_dc)
    report("engine-agreement subset/activity", t_sub == t_act)
    poset = intersection_poset(arr)
    try:
        poset.verify_mobius()
        report("mobius-recursion", True)
    except AssertionError:
        report("mobius-recursion", False)
    chi = poset.char_poly()
    report("whitney-theorem", chi == whitney_char(arr, tutte=t_sub))
    shape = validate_chi_shape(chi)
    report("chi-sign-and-logconcavity", shape["ok"])
    cob = coboundary_transform(t_sub, arr.rank)
    report("coboundary-roundtrip",
           tutte_from_coboundary(cob, arr.rank) == t_sub)
    if arr.prime is None:
        try:
            mods = select_primes(arr, 1, reduction="auto", budget=_budget(args))
            profile = point_profile(mods[0], budget=_budget(args))
            p = mods[0].prime
            report("profile-sums-to-p^d",
                   sum(profile.counts) == p ** arr.dim)
            report("profile-t0-slice",
                   profile.counts[0] == chi.evaluate({"q": p}))
        except TuttekitError as exc:
            report("finite-field-profile (%s)" % exc.code, False)
    if failures:
        raise SystemExit(2)


def _family_arrangement(args):
    if args.tag == "graphical":
        if not args.graph:
            raise InputFormatError("graphical family needs --graph edges.txt")
        edges = _load_edges(args.graph)
        if not args.n:
            raise InputFormatError("graphical family needs --n vertices")
        arr = families.graphical(args.n, edges)
    else:
        arr = families.build_family(args.tag, n=args.n, p=args.p,
                                    d=args.d, m=args.m)
    if args.k:
        arr = families.thicken(arr, args.k)
    return arr


_VALUE_FLAGS = {"--n", "--p", "--k", "--d", "--m", "--graph", "--method",
                "--primes", "--reduction", "--budget", "--format", "--input",
                "--q"}


def _reorder_family_argv(argv):
    """Allow `family braid --n 3 char`: move bare words before the flags.

    argparse matches positionals in a single pass, so a trailing action word
    after options would otherwise be rejected.
    """
    if not argv or argv[0] != "family":
        return argv
    positionals, flags = [], []
    i = 1
    while i < len(argv):
        tok = argv[i]
        if tok.startswith("-"):
            flags.append(tok)
            if "=" not in tok and tok in _VALUE_FLAGS and i + 1 < len(argv):
                flags.append(argv[i + 1])
                i += 1
        else:
            positionals.append(tok)
        i += 1
    return ["family"] + positionals + flags


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    argv = _reorder_family_argv(list(argv))
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "family":
            arr = _family_arrangement(args)
            _run_action(args.action, arr, args)
        elif args.verb == "arith":
            config = _load_config(args.input)
            if args.action == "tutte":
                _emit_poly(arithmetic_tutte(config), args,
                           {"rank": config.rank, "n": config.n})
            elif args.action == "char":
                _emit_poly(arithmetic_char_poly(config), args)
            elif args.action == "zonotope":
                z = zonotope_evaluations(config)
                record = {"volume": str(z["volume"]),
                          "lattice_points": str(z["lattice_points"]),
                          "interior_points": str(z["interior_points"]),
                          "ehrhart": z["ehrhart"].format()}
                if getattr(args, "format", "text") == "structured":
                    print(json.dumps(record, sort_keys=True))
                else:
                    for key in sorted(record):
                        print("%s = %s" % (key, record[key]))
            else:
                if not args.q:
                    raise InputFormatError("toric point count needs --q")
                prof = toric_point_profile(config, args.q)
                _emit_poly(prof["polynomial"], args,
                           {"q": args.q, "counts": list(prof["counts"])})
        elif args.verb == "toric":
            config = _load_config(args.input)
            prof = toric_point_profile(config, args.q)
            _emit_poly(prof["polynomial"], args,
                       {"q": args.q, "counts": list(prof["counts"])})
        else:
            arr = _load_arrangement(args.input)
            _run_action(args.verb, arr, args)
    except InputFormatError as exc:
        print("error: %s: %s" % (exc.code, exc), file=sys.stderr)
        return 1
    except TuttekitError as exc:
        print("error: %s: %s" % (exc.code, exc), file=sys.stderr)
        return 2
    except SystemExit as exc:
        return exc.code or 0
    return 0


if __name__ == "__main__":
    sys.exit(main())
