"""Command-line driver: verification suites, exact evaluation, tables."""

import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction

from . import __version__
from . import suites
from .characters import SymplecticChar, symbolic_char
from .csmodel import CSInput, Q_poly, cs_value_compact, theta_normalized_value
from .exactalg import LaurentPoly
from .hallittlewood import even_partitions, hl_P
from .padicweil import GaussConvention, check_prime, hilbert2, legendre, weil_gamma
from .zetagj import satake_params, zeta_series

log = logging.getLogger("metacs")


class UsageError(Exception):
    pass


# argument parsing

def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text):
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}")


def _eps(text):
    if text in ("1", "+1", "+"):
        return 1
    if text in ("-1", "-"):
        return -1
    raise argparse.ArgumentTypeError("eps must be +1 or -1")


def _common(p):
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--trunc", type=int)
    p.add_argument("--max-norm", type=int, dest="max_norm")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--eps", type=_eps)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out")
    p.add_argument("--timings", action="store_true", help="record wall-clock durations (breaks byte-determinism)")


def build_parser():
    parser = argparse.ArgumentParser(prog="metacs", description="Exact checks for the metaplectic Shalika model.")
    parser.add_argument("--version", action="version", version=f"metacs {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=("all",) + tuple(suites.SUITES))
    _common(v)

    e = sub.add_parser("eval", help="evaluate one exact value")
    e.add_argument("target", choices=("cs", "hl", "zeta-coeff", "hilbert", "gamma"))
    _common(e)
    e.add_argument("--lambda", type=_int_list, dest="lam")
    group = e.add_mutually_exclusive_group()
    group.add_argument("--theta", action="store_true")
    group.add_argument("--char", type=_rational_list)
    e.add_argument("--degree", type=int)
    e.add_argument("--x", type=_rational_list, help="numeric Satake parameters")
    e.add_argument("--a", type=_rational)
    e.add_argument("--b", type=_rational)
    e.add_argument("--convention", choices=[c.value for c in GaussConvention], default="plus")

    t = sub.add_parser("table", help="write a table of values")
    t.add_argument("target", choices=("theta", "cs", "hl", "q", "hilbert"))
    _common(t)
    return parser


# validation helpers

def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return value


def _prime(p):
    try:
        return check_prime(p)
    except ValueError as exc:
        raise UsageError(str(exc))


def _k(args, lo=1, hi=3, default=None):
    k = args.k if args.k is not None else default
    if k is None:
        raise UsageError("--k is required")
    if not lo <= k <= hi:
        raise UsageError(f"--k must be between {lo} and {hi}")
    return k


def _nonneg(value, name):
    if value is not None and value < 0:
        raise UsageError(f"--{name} must be nonnegative")
    return value


def _lambda(args, k):
    lam = _need(args, "lam")
    if len(lam) > k or any(x < 0 for x in lam) or list(lam) != sorted(lam, reverse=True):
        raise UsageError(f"malformed partition {','.join(map(str, lam))} for k={k}")
    return lam + (0,) * (k - len(lam))


# verify

def suite_kwargs(name, args):
    """Translate command-line flags into suite parameters."""
    kw = {}
    if name in ("hl", "zeta", "theta", "clifford") and args.k is not None:
        kw["ks"] = (_k(args),)
    if name in ("hl", "zeta") and args.trunc is not None:
        kw["N"] = _nonneg(args.trunc, "trunc")
    if name == "theta" and args.max_norm is not None:
        kw["max_norm"] = _nonneg(args.max_norm, "max-norm")
    if name == "cs":
        if args.k is not None:
            k = _k(args)
            kw["ks"] = (k,) if k <= 2 else ()
            kw["k3_trials"] = (args.trials or 20) if k == 3 else 0
        elif args.trials is not None:
            kw["k3_trials"] = args.trials
        if args.max_norm is not None:
            kw["max_norm"] = _nonneg(args.max_norm, "max-norm")
        if args.eps is not None:
            kw["eps_values"] = (args.eps,)
    if name in ("cocycle", "hilbert", "weil") and args.p is not None:
        kw["ps"] = (_prime(args.p),)
    if name == "cocycle" and args.n is not None:
        if args.n < 2 or args.n % 2:
            raise UsageError("--n must be even and at least 2")
        kw["ns"] = (args.n,)
    if name in ("cocycle", "hilbert", "weil") and args.trials is not None:
        if args.trials < 1:
            raise UsageError("--trials must be positive")
        kw["trials"] = args.trials
    return kw


def cmd_verify(args):
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    plans = [(name, suite_kwargs(name, args) if args.suite != "all" else {}) for name in names]
    ctx = suites.Context(seed=args.seed, timings=args.timings)
    reports = []
    for name, kw in plans:
        log.info("suite %s %s", name, kw)
        reports.extend(suites.SUITES[name](ctx, **kw))
    doc = {
        "version": __version__,
        "command": f"verify {args.suite}",
        "seed": args.seed,
        "reports": [r.to_dict() for r in reports],
    }
    _emit(args, render_reports(doc, args.format))
    return 0 if all(r.status == "pass" for r in reports) else 1


def render_reports(doc, fmt):
    if fmt == "json":
        return dump_json(doc)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "status", "params", "witness", "duration_ms"])
        for r in doc["reports"]:
            w.writerow([r["check"], r["status"], _compact(r["params"]),
                        "" if r["witness"] is None else _compact(r["witness"]), r["duration_ms"]])
        return buf.getvalue()
    lines = []
    for r in doc["reports"]:
        line = f"{r['status'].upper():5} {r['check']} {_compact(r['params'])}"
        if r["status"] != "pass" and r["witness"] is not None:
            line += f" witness={_compact(r['witness'])}"
        lines.append(line)
    failed = sum(r["status"] != "pass" for r in doc["reports"])
    lines.append(f"{len(doc['reports'])} checks, {failed} not passing")
    return "\n".join(lines) + "\n"


def dump_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _compact(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# eval

def _grouped_hl(poly):
    """Group a polynomial in x's and t by x-monomial: x1^2 + (1 - t)*x1*x2 + ..."""
    xs = [v for v in poly.variables if v.startswith("x")]
    groups = {}
    for e, c in poly.terms.items():
        powers = dict(zip(poly.variables, e))
        key = tuple(powers.get(v, 0) for v in xs)
        rest = {v: x for v, x in powers.items() if not v.startswith("x")}
        groups[key] = groups.get(key, LaurentPoly.const(0)) + LaurentPoly.monomial(c, rest)
    parts = []
    for key in sorted(groups, key=lambda e: (-sum(e), tuple(-x for x in e))):
        mono = "*".join(f"{v}^{x}" if x != 1 else v for v, x in zip(xs, key) if x)
        coeff = groups[key]
        if coeff.is_constant():
            c = coeff.constant_value()
            text = mono if c == 1 and mono else f"{c}*{mono}" if mono else str(c)
        else:
            text = f"({_ascending_t(coeff)})*{mono}" if mono else str(coeff)
        parts.append(text)
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _ascending_t(coeff):
    """1 - t rather than -t + 1."""
    if coeff.variables != ("t",):
        return str(coeff)
    out = []
    for (d,), c in sorted(coeff.terms.items()):
        mono = "" if d == 0 else "t" if d == 1 else f"t^{d}"
        if not mono:
            s = str(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = f"-{mono}"
        else:
            s = f"{c}*{mono}"
        out.append(s)
    return " + ".join(out).replace("+ -", "- ")


def cmd_eval(args):
    target = args.target
    params = {}
    if target == "cs":
        k = _k(args)
        lam = _lambda(args, k)
        eps = args.eps if args.eps is not None else 1
        params = {"k": k, "lambda": list(lam), "eps": eps}
        if args.theta:
            if eps != 1:
                raise UsageError("the theta point uses eps=+1")
            params["theta"] = True
            value = str(theta_normalized_value(k, lam).ratio)
        else:
            if args.char is not None:
                if len(args.char) != k or any(z == 0 for z in args.char):
                    raise UsageError(f"--char needs {k} nonzero rationals")
                eta = SymplecticChar(args.char, eps)
                params["char"] = [str(z) for z in args.char]
            else:
                eta = symbolic_char(k, eps)
            try:
                value = str(cs_value_compact(CSInput(eta, eps), lam))
            except ZeroDivisionError as exc:
                raise UsageError(f"character is not regular: {exc}")
    elif target == "hl":
        k = _k(args, hi=6)
        lam = _lambda(args, k)
        params = {"k": k, "lambda": list(lam)}
        value = _grouped_hl(hl_P(lam, k))
    elif target == "zeta-coeff":
        k = _k(args)
        d = _need(args, "degree")
        _nonneg(d, "degree")
        params = {"k": k, "degree": d}
        try:
            x = satake_params(k, args.x) if args.x is not None else None
        except ValueError as exc:
            raise UsageError(str(exc))
        if args.x is not None:
            params["x"] = [str(v) for v in args.x]
        value = str(zeta_series(k, x, d).coeff(d))
    elif target == "hilbert":
        p = _prime(_need(args, "p"))
        a, b = _need(args, "a"), _need(args, "b")
        if a == 0 or b == 0:
            raise UsageError("--a and --b must be nonzero")
        params = {"p": p, "a": str(a), "b": str(b)}
        value = str(hilbert2(a, b, p))
    else:
        p = _prime(_need(args, "p"))
        a = _need(args, "a")
        if a == 0:
            raise UsageError("--a must be nonzero")
        params = {"p": p, "a": str(a), "convention": args.convention}
        value = str(weil_gamma(a, p, GaussConvention(args.convention)))
    doc = {"version": __version__, "command": f"eval {target}", "seed": args.seed,
           "result": {"params": params, "value": value}}
    if args.format == "json":
        text = dump_json(doc)
    elif args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows([["target", "params", "value"], [target, _compact(params), value]])
        text = buf.getvalue()
    else:
        text = value + "\n"
    _emit(args, text)
    return 0


# table

def table_rows(args):
    target = args.target
    if target in ("theta", "cs", "hl"):
        k = _k(args, hi=3)
        N = _nonneg(args.max_norm if args.max_norm is not None else 6, "max-norm")
        header = ["lambda", "value"]
        rows = []
        eps = args.eps if args.eps is not None else 1
        for lam in even_partitions(k, N):
            if target == "theta":
                value = theta_normalized_value(k, lam).ratio
            elif target == "cs":
                value = cs_value_compact(CSInput(symbolic_char(k, eps), eps), lam)
            else:
                value = _grouped_hl(hl_P(lam, k))
            rows.append([",".join(map(str, lam)), str(value)])
        return header, rows
    if target == "q":
        n = args.n if args.n is not None else 6
        if not 1 <= n <= 7:
            raise UsageError("--n must be between 1 and 7")
        return ["n", "Q"], [[m, str(Q_poly(m))] for m in range(1, n + 1)]
    p = _prime(args.p if args.p is not None else 5)
    nonsquare = next(a for a in range(2, p) if legendre(a, p) == -1)
    reps = [1, nonsquare, p, nonsquare * p]
    return ["a", "b", "symbol"], [[a, b, hilbert2(a, b, p)] for a in reps for b in reps]


def cmd_table(args):
    header, rows = table_rows(args)
    if args.format == "json":
        doc = {"version": __version__, "command": f"table {args.target}", "seed": args.seed,
               "columns": header, "rows": rows}
        text = dump_json(doc)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    _emit(args, text)
    return 0


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _setup_logging():
    level = os.environ.get("METACS_LOG", "error").lower()
    if level not in ("error", "info", "debug"):
        level = "error"
    logging.basicConfig(level=getattr(logging, level.upper()), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


COMMANDS = {"verify": cmd_verify, "eval": cmd_eval, "table": cmd_table}


def main(argv=None):
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.exit(2, f"metacs: error: {exc}\n")
    except OSError as exc:
        sys.stderr.write(f"metacs: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
