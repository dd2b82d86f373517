"""Command-line front end.

Subcommands: rep (representation counts), charge (exact charge and
boundary term), extrema (critical-value candidates and grid scans),
obstruct (obstruction reports), selfcheck (internal identity suite).

Exit codes: 0 success, 1 usage or parse error, 2 domain error,
3 self-check or oracle failure.  JSON output is an envelope
{command, inputs, result, elapsed_ms} with sorted keys, so identical
inputs give identical payloads apart from the timing field.
"""

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import gauge, obstruct, repnum


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _ints_csv(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fracs_csv(text: str) -> list[Fraction]:
    try:
        return [Fraction(p) for p in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals like 1/2, got {text!r}")


def _frac_str(x) -> str:
    return str(Fraction(x))


def build_parser() -> _Parser:
    parser = _Parser(prog="thetacharge", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    rep = sub.add_parser("rep", help="representation counts")
    rep.add_argument("--kind", choices=("r", "R"), required=True,
                     help="r: plain counts; R: all-coordinates-nonzero counts")
    target = rep.add_mutually_exclusive_group(required=True)
    target.add_argument("--squares", type=int, metavar="K", help="sums of K squares")
    target.add_argument("--form", metavar="FORM",
                        help="matrix file path, or an:N for the 2/1 Gram matrix of rank N")
    span = rep.add_mutually_exclusive_group(required=True)
    span.add_argument("--n", type=int, help="single N")
    span.add_argument("--nmax", type=int, help="table for N = 0..nmax")
    rep.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    rep.add_argument("--oracle", action="store_true",
                     help="cross-check against brute enumeration; mismatch exits 3")
    rep.add_argument("--cache", metavar="PATH", help="advisory JSON count cache")

    charge = sub.add_parser("charge", help="exact rational charge")
    charge.add_argument("--k", type=int, required=True)
    charge.add_argument("--l", type=_ints_csv, required=True, metavar="CSV")
    charge.add_argument("--alpha", type=_fracs_csv, required=True, metavar="CSV")
    charge.add_argument("--sigma", type=int, required=True)
    charge.add_argument("--cs", action="store_true", help="also report the boundary term mod 1")

    extrema = sub.add_parser("extrema", help="critical-value candidates")
    extrema.add_argument("--k", type=int, required=True)
    extrema.add_argument("--l", type=_ints_csv, required=True, metavar="CSV")
    extrema.add_argument("--sigma", type=int, required=True)
    extrema.add_argument("--grid", type=int, metavar="D", help="also scan the 1/D grid")
    extrema.add_argument("--all-subsets", action="store_true",
                         help="sweep every vanishing subset on the boundary strata")

    obs = sub.add_parser("obstruct", help="irreducible-representation obstruction scan")
    obs.add_argument("--rank", type=int, required=True, help="n of SU(n+1)")
    obs.add_argument("--sigma", type=int, required=True)
    obs.add_argument("--case", choices=("diagonal", "general"), required=True)
    obs.add_argument("--witnesses", action="store_true",
                     help="also enumerate sign-constrained defeating monopole vectors")

    check = sub.add_parser("selfcheck", help="run the internal identity suite")
    check.add_argument("--level", choices=("quick", "full"), default="quick")

    return parser


def _emit(command: str, inputs: dict, result: dict, t0: float) -> None:
    payload = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "elapsed_ms": int((time.monotonic() - t0) * 1000),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))


# ---------------------------------------------------------------------------
# advisory count cache

def _cache_load(path: str) -> list:
    try:
        with open(path) as fh:
            data = json.load(fh)
        if not isinstance(data, list):
            raise ValueError("cache root must be a list")
        for entry in data:
            if not (isinstance(entry, dict)
                    and isinstance(entry.get("kind"), str)
                    and isinstance(entry.get("key"), str)
                    and isinstance(entry.get("nmax"), int)
                    and isinstance(entry.get("counts"), list)
                    and all(isinstance(c, str) for c in entry["counts"])):
                raise ValueError("malformed cache entry")
            if len(entry["counts"]) != entry["nmax"] + 1:
                raise ValueError("cache entry length mismatch")
        return data
    except FileNotFoundError:
        return []
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"warning: ignoring corrupt cache {path}: {exc}", file=sys.stderr)
        return []


def _cache_find(entries: list, kind: str, key: str, need: int):
    for entry in entries:
        if entry["kind"] == kind and entry["key"] == key and entry["nmax"] >= need:
            return [int(c) for c in entry["counts"][: need + 1]]
    return None


def _cache_store(path: str, entries: list, kind: str, key: str, nmax: int, counts) -> None:
    kept = [e for e in entries if not (e["kind"] == kind and e["key"] == key and e["nmax"] <= nmax)]
    # counts serialize as decimal strings so width is never lost
    kept.append({"kind": kind, "key": key, "nmax": nmax,
                 "counts": [str(c) for c in counts]})
    try:
        with open(path, "w") as fh:
            json.dump(kept, fh)
    except OSError as exc:
        print(f"warning: could not write cache {path}: {exc}", file=sys.stderr)


# ---------------------------------------------------------------------------
# subcommands

def _parse_form_arg(arg: str) -> repnum.QuadForm:
    if arg.startswith("an:"):
        try:
            rank = int(arg[3:])
        except ValueError:
            raise ValueError(f"bad form argument {arg!r}; want an:N or a file path") from None
        return repnum.an_form(rank)
    try:
        with open(arg) as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read form file {arg}: {exc}") from None
    return repnum.parse_form_text(text)


def _cmd_rep(args, t0: float) -> int:
    last = args.n if args.n is not None else args.nmax
    if last < 0:
        raise ValueError("N must be nonnegative")
    nonzero = args.kind == "R"

    if args.squares is not None:
        kind = "nonvanishing-squares" if nonzero else "squares"
        key = f"k={args.squares}"
        inputs = {"kind": args.kind, "squares": args.squares}
    else:
        form = _parse_form_arg(args.form)
        kind = "nonvanishing-form" if nonzero else "form"
        key = hashlib.sha256(repr(form.entries).encode()).hexdigest()[:16]
        inputs = {"kind": args.kind, "form": args.form}

    cache_entries = _cache_load(args.cache) if args.cache else []
    counts = _cache_find(cache_entries, kind, key, last) if args.cache else None
    if counts is None:
        if args.squares is not None:
            if nonzero:
                counts = list(repnum.nonzero_squares_table(args.squares, last).counts)
            else:
                counts = list(repnum.squares_table(args.squares, last).counts)
        else:
            if nonzero:
                counts = list(repnum.nonzero_form_table(form, last).counts)
            else:
                counts = list(repnum.form_table(form, last).counts)
        if args.cache:
            _cache_store(args.cache, cache_entries, kind, key, last, counts)

    if args.n is not None:
        inputs["n"] = args.n
        result = {"N": args.n, "count": counts[args.n]}
    else:
        inputs["nmax"] = args.nmax
        result = {"nmax": args.nmax, "counts": counts}

    if args.format == "json":
        _emit("rep", inputs, result, t0)
    elif args.format == "csv":
        print("N,count")
        if args.n is not None:
            print(f"{args.n},{counts[args.n]}")
        else:
            for N, c in enumerate(counts):
                print(f"{N},{c}")
    else:
        if args.n is not None:
            print(f"{args.n} {counts[args.n]}")
        else:
            for N, c in enumerate(counts):
                print(f"{N} {c}")

    if args.oracle and not _oracle_agrees(args, form if args.squares is None else None,
                                          counts, last, nonzero):
        print("oracle mismatch: enumeration disagrees with the reported counts",
              file=sys.stderr)
        return 3
    return 0


def _oracle_agrees(args, form, counts, last, nonzero: bool) -> bool:
    singles = [args.n] if args.n is not None else range(0, last + 1)
    if args.squares is not None:
        table = repnum.brute_squares_table(args.squares, last, require_nonzero=nonzero)
        return all(counts[N] == table[N] for N in singles)
    for N in singles:
        if N == 0:
            expect = 0 if nonzero else 1
        else:
            expect = repnum.brute_form_count(form, N, require_nonzero=nonzero)
        if counts[N] != expect:
            return False
    return True


def _cmd_charge(args, t0: float) -> int:
    H = gauge.HolonomyClass(tuple(args.alpha))
    B = gauge.BundleTopology(args.k, tuple(args.l), args.sigma)
    value = gauge.chern_weil_charge(B, H)
    inputs = {
        "k": args.k,
        "l": list(args.l),
        "alpha": [_frac_str(a) for a in args.alpha],
        "sigma": args.sigma,
        "cs": args.cs,
    }
    result = {"charge": _frac_str(value)}
    if args.cs:
        result["chern_simons"] = _frac_str(gauge.chern_simons(B, H))
    _emit("charge", inputs, result, t0)
    return 0


def _cmd_extrema(args, t0: float) -> int:
    B = gauge.BundleTopology(args.k, tuple(args.l), args.sigma)
    ext = gauge.charge_extrema(B, all_subsets=args.all_subsets)
    cands = []
    for c in ext.candidates:
        entry = {
            "stratum": c.stratum,
            "j": c.j,
            "m": c.m,
            "alpha": [_frac_str(a) for a in c.alpha_point],
            "value": _frac_str(c.value),
            "s_j": c.s_j,
            "feasible": c.feasible,
        }
        if c.kept is not None:
            entry["kept"] = list(c.kept)
        cands.append(entry)
    result = {
        "base_value": _frac_str(ext.base_value),
        "candidates": cands,
        "feasible_min": _frac_str(ext.feasible_min()),
        "feasible_max": _frac_str(ext.feasible_max()),
    }
    inputs = {"k": args.k, "l": list(args.l), "sigma": args.sigma,
              "grid": args.grid, "all_subsets": args.all_subsets}
    if args.grid is not None:
        scan = gauge.charge_grid_scan(B, args.grid)
        result["grid"] = {
            "denominator": scan.denominator,
            "min": _frac_str(scan.minimum),
            "max": _frac_str(scan.maximum),
            "argmin": [_frac_str(a) for a in scan.argmin],
            "argmax": [_frac_str(a) for a in scan.argmax],
        }
    _emit("extrema", inputs, result, t0)
    return 0


def _cmd_obstruct(args, t0: float) -> int:
    if args.case == "diagonal":
        report = obstruct.obstruction_diagonal(args.rank, args.sigma)
    else:
        report = obstruct.obstruction_general(args.rank, args.sigma)
    result = report.as_dict()
    if args.witnesses:
        result["candidate_l"] = [list(v) for v in obstruct.witness_enumerate(args.rank, args.sigma)]
    inputs = {"rank": args.rank, "sigma": args.sigma, "case": args.case,
              "witnesses": args.witnesses}
    _emit("obstruct", inputs, result, t0)
    return 0


# ---------------------------------------------------------------------------
# selfcheck

def _check_squares(kmax: int, nmax: int) -> bool:
    rtabs = repnum.squares_tables(kmax, nmax)
    for k in range(1, kmax + 1):
        direct = repnum.nonzero_squares_table(k, nmax)
        brute = repnum.brute_squares_table(k, nmax, require_nonzero=True)
        for N in range(1, nmax + 1):
            if not (repnum.nonzero_squares_binomial(k, N, rtabs) == direct[N] == brute[N]):
                return False
    return True


def _check_divisor(nmax: int) -> bool:
    r2 = repnum.squares_table(2, nmax)
    r4 = repnum.squares_table(4, nmax)
    return all(r2[N] == repnum.two_squares_divisor(N)
               and r4[N] == repnum.four_squares_divisor(N)
               for N in range(1, nmax + 1))


def _check_three_square(nmax: int) -> bool:
    r3 = repnum.squares_table(3, nmax)
    return all((r3[N] > 0) == repnum.three_squares_possible(N) for N in range(1, nmax + 1))


def _check_forms(fdim: int, fnmax: int) -> bool:
    for n in range(1, fdim + 1):
        Q = repnum.an_form(n)
        for N in range(1, fnmax + 1):
            if repnum.nonzero_form_count(Q, N) != repnum.brute_form_count(Q, N, True):
                return False
    return True


def _check_extrema() -> bool:
    for k, l, sigma in [(0, (0, 0), 2), (1, (1, -1), 3), (0, (2, -1, -1), 4),
                        (-1, (1, 0, -1), -3), (2, (1, 1, -1, -1), 5)]:
        B = gauge.BundleTopology(k, l, sigma)
        gauge.charge_extrema(B)  # raises on closed-form vs substitution mismatch
        lo = gauge.charge_grid_scan(B, 6)
        hi = gauge.charge_grid_scan(B, 12)
        if not (hi.minimum <= lo.minimum and lo.maximum <= hi.maximum):
            return False
        if not (lo.minimum <= k <= lo.maximum):
            return False
    return True


def _check_theta(full: bool) -> bool:
    forms = [repnum.an_form(1)] + ([repnum.an_form(2)] if full else [])
    for Q in forms:
        if repnum.theta_transform_check(Q, 1j, cutoff=1e-10).absdiff >= 1e-6:
            return False
    return True


def _cmd_selfcheck(args, t0: float) -> int:
    full = args.level == "full"
    kmax, nmax = (6, 200) if full else (4, 100)
    fdim, fnmax = (4, 60) if full else (2, 30)
    suite = [
        ("squares-binomial-direct-brute", lambda: _check_squares(kmax, nmax)),
        ("two-four-square-divisor", lambda: _check_divisor(nmax)),
        ("three-square-criterion", lambda: _check_three_square(nmax)),
        ("form-deletion-vs-box", lambda: _check_forms(fdim, fnmax)),
        ("extrema-substitution-grid", _check_extrema),
        ("theta-inversion", lambda: _check_theta(full)),
    ]
    checks = []
    first_failure = None
    for name, fn in suite:
        try:
            ok = fn()
        except Exception:
            ok = False
        checks.append({"name": name, "status": "ok" if ok else "failed"})
        if not ok and first_failure is None:
            first_failure = name
    result = {"level": args.level, "checks": checks}
    if first_failure is not None:
        result["first_failure"] = first_failure
    _emit("selfcheck", {"level": args.level}, result, t0)
    return 3 if first_failure else 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    t0 = time.monotonic()
    handler = {
        "rep": _cmd_rep,
        "charge": _cmd_charge,
        "extrema": _cmd_extrema,
        "obstruct": _cmd_obstruct,
        "selfcheck": _cmd_selfcheck,
    }[args.command]
    try:
        return handler(args, t0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
