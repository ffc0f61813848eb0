"""Command-line front end: bound runs, oracles, constructions, rank runs,
and comparison sweeps with a soundness column.

Exit codes: 0 success, 2 domain/usage error, 3 resource-cap error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Optional

from . import bounds, clp, constructions, intersective, oracle
from .bounds import BoundReport, report_to_json
from .errors import DomainError, ResourceLimitError
from .weights import (
    DistanceSet,
    WeightScheme,
    consecutive_scheme,
    custom_scheme,
    distance_set,
    kleitman_even,
    kleitman_odd,
    scheme_for_diameter,
)

SCHEME_NAMES = ("kleitman-even", "kleitman-odd", "consecutive", "custom")
BOUND_METHODS = (
    "spectral",
    "kleitman-closed-form",
    "consecutive-closed-form",
    "parity",
    "frankl-wilson-form",
    "intersective-spectral",
    "intersective-closed-form",
)
COMPARE_FAMILIES = ("upto", "consecutive", "pairs")


def parse_distance_spec(spec: str, n: int) -> DistanceSet:
    """Parse an allowed-distance spec: '1,2,5', ranges '1-6', 'upto:d'
    (meaning {1..d}), and 'not-div:m' (distances not divisible by m; m may
    be written '2^k')."""
    spec = spec.strip()
    if spec.startswith("upto:"):
        d = int(spec[len("upto:"):])
        if not 1 <= d <= n:
            raise DomainError(f"upto:{d} needs 1 <= d <= n={n}")
        return distance_set(n, range(1, d + 1))
    if spec.startswith("not-div:"):
        raw = spec[len("not-div:"):]
        if "^" in raw:
            b, e = raw.split("^", 1)
            m = int(b) ** int(e)
        else:
            m = int(raw)
        if m < 2:
            raise DomainError(f"not-div modulus must be >= 2, got {m}")
        return distance_set(n, (d for d in range(1, n + 1) if d % m))
    members: list[int] = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        if "-" in token and not token.startswith("-"):
            a, b = token.split("-", 1)
            members.extend(range(int(a), int(b) + 1))
        else:
            members.append(int(token))
    if not members:
        raise DomainError(f"empty distance spec {spec!r}")
    return distance_set(n, members)


def _read_scheme_file(path: str) -> list[int]:
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                values.append(int(line))
    return values


def _build_scheme(args: argparse.Namespace, n: int) -> WeightScheme:
    name = args.scheme
    if name is None:
        raise DomainError(
            f"--method spectral needs --scheme (one of {', '.join(SCHEME_NAMES)})"
        )
    if name == "kleitman-even":
        if args.t is None:
            raise DomainError("scheme kleitman-even needs --t")
        return kleitman_even(n, args.t)
    if name == "kleitman-odd":
        if args.t is None:
            raise DomainError("scheme kleitman-odd needs --t")
        return kleitman_odd(n, args.t)
    if name == "consecutive":
        if args.t is None or args.s is None:
            raise DomainError("scheme consecutive needs --s and --t")
        return consecutive_scheme(n, args.s, args.t)
    if name == "custom":
        if not args.scheme_file:
            raise DomainError("scheme custom needs --scheme-file (one integer per line)")
        values = _read_scheme_file(args.scheme_file)
        if len(values) != n:
            raise DomainError(
                f"scheme file has {len(values)} values but n={n}"
            )
        return custom_scheme(values)
    raise DomainError(f"unknown scheme {name!r}; valid: {', '.join(SCHEME_NAMES)}")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _report_csv(report: BoundReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "L", "method", "value"])
    writer.writerow([
        report.n,
        report.L.compact() if report.L is not None else "",
        report.method,
        str(report.value),
    ])
    return buf.getvalue().rstrip("\n")


def _emit_report(report: BoundReport, args: argparse.Namespace) -> None:
    if getattr(args, "format", "json") == "csv":
        _emit(_report_csv(report), args.output)
    else:
        _emit(report_to_json(report), args.output)


def _cmd_bound(args: argparse.Namespace) -> int:
    method = args.method
    if method.startswith("intersective"):
        if args.p is None or args.N is None:
            raise DomainError(f"method {method} needs --p and --N")
        params = intersective.FpParams(args.p, args.N)
        if method == "intersective-closed-form":
            report = intersective.closed_form_bound(params)
        else:
            report = intersective.spectral_bound_fp(params, refine=args.refine)
        _emit_report(report, args)
        return 0
    if args.n is None or args.L is None:
        raise DomainError(f"method {method} needs --n and --L")
    n = args.n
    L = parse_distance_spec(args.L, n)
    if method == "spectral":
        scheme = _build_scheme(args, n)
        report = bounds.cvetkovic_bound(n, L, scheme)
    elif method == "kleitman-closed-form":
        d = args.d
        if d is None:
            if L.is_consecutive_block and L.members[0] == 1:
                d = L.members[-1]
            else:
                raise DomainError("kleitman-closed-form needs --d unless L is {1..d}")
        report = bounds.kleitman_closed_form(n, d)
    elif method == "consecutive-closed-form":
        if args.s is None or args.t is None:
            raise DomainError("consecutive-closed-form needs --s and --t")
        report = bounds.consecutive_closed_form(n, args.s, args.t)
    elif method == "parity":
        maybe = bounds.parity_bound(L)
        if maybe is None:
            raise DomainError("parity bound does not apply: L contains an even distance")
        report = maybe
    elif method == "frankl-wilson-form":
        report = bounds.frankl_wilson_form(n, L)
    else:
        raise DomainError(f"unknown method {method!r}; valid: {', '.join(BOUND_METHODS)}")
    _emit_report(report, args)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.p is not None or args.N is not None:
        if args.p is None or args.N is None:
            raise DomainError("F_p oracle needs both --p and --N")
        report = oracle.oracle_fp_exact(args.p, args.N, max_points=args.max_points)
    else:
        if args.n is None or args.L is None:
            raise DomainError("oracle needs --n and --L (or --p and --N)")
        L = parse_distance_spec(args.L, args.n)
        report = oracle.oracle_exact(args.n, L, max_n=args.max_oracle_n)
    if args.witness:
        with open(args.witness, "w", encoding="utf-8") as fh:
            for line in report.witness["family"]:
                fh.write(line + "\n")
    _emit_report(report, args)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    kind = args.type
    if kind == "hamming-ball":
        if args.r is None:
            raise DomainError("hamming-ball needs --r")
        cons = constructions.hamming_ball(args.n, args.r)
    elif kind == "prism":
        if args.r is None:
            raise DomainError("prism needs --r")
        cons = constructions.prism(args.n, args.r)
    elif kind == "packing":
        if args.s is None or args.t is None:
            raise DomainError("packing needs --s and --t")
        cons = constructions.packing_family(args.n, args.s, args.t)
    else:
        raise DomainError(f"unknown construction type {kind!r}")
    _emit("\n".join(cons.family.to_lines()), args.output)
    return 0


def _cmd_clp_rank(args: argparse.Namespace) -> int:
    n = args.n
    if (args.t is None) == (args.k is None):
        raise DomainError("clp-rank needs exactly one of --t or --k")
    if args.t is not None:
        matrix = clp.build_kleitman_matrix(n, args.t)
        degree_bound = clp.clp_degree_bound(n, 2 * args.t)
        L = distance_set(n, range(1, min(2 * args.t, n) + 1))
        extra = {"matrix": "kleitman", "t": args.t}
    else:
        matrix = clp.build_divisibility_matrix(n, args.k)
        degree_bound = clp.divisibility_bound(n, args.k)
        L = distance_set(n, (d for d in range(1, n + 1) if d % (1 << args.k)))
        extra = {"matrix": "divisibility", "k": args.k}
    rank = clp.f2_rank(matrix)
    witness = {"rank": rank, "degree_bound": str(degree_bound), **extra}
    report = BoundReport(n, L, "clp-rank", rank, witness)
    _emit_report(report, args)
    return 0


# ---------------------------------------------------------------------------
# comparison sweeps
# ---------------------------------------------------------------------------

def _soundness(orc: Optional[int], construction: Optional[int],
               uppers: list[int]) -> str:
    violated = False
    if construction is not None and uppers and construction > min(uppers):
        violated = True
    if orc is not None:
        if any(u < orc for u in uppers):
            violated = True
        if construction is not None and construction > orc:
            violated = True
    if violated:
        return "VIOLATION"
    return "ok" if orc is not None else ""


def _fmt(value: Optional[int]) -> str:
    return "" if value is None else str(value)


def _oracle_value(n: int, L: DistanceSet, cap: int) -> Optional[int]:
    if n > cap:
        return None
    return oracle.oracle_exact(n, L, max_n=cap).value


def compare_table(
    family: str,
    n_min: int,
    n_max: int,
    *,
    t_max: int = 5,
    s_max: int = 2,
    max_oracle_n: Optional[int] = None,
) -> tuple[list[str], list[list[str]]]:
    """Rows of bound/oracle/construction values over a parameter grid.

    Families: 'upto' (L = {1..d} for every d < n), 'consecutive'
    (L = {2s+1..2t} for every s < t <= t_max with 2t < n), 'pairs'
    (L = {2s+1, 2s+2} for s <= s_max).  Rows are emitted in deterministic
    (n, L) order; every row re-checks that no upper bound undercuts the
    oracle or the best construction.
    """
    cap = max_oracle_n if max_oracle_n is not None else oracle.DEFAULT_MAX_N
    rows: list[tuple] = []
    if family == "upto":
        header = ["n", "d", "L", "construction", "oracle", "spectral",
                  "closed_form", "parity", "frankl_wilson", "soundness"]
        for n in range(n_min, n_max + 1):
            for d in range(1, n):
                L = distance_set(n, range(1, d + 1))
                t = d // 2
                spectral = bounds.cvetkovic_bound(n, L, scheme_for_diameter(n, d)).value
                closed = bounds.kleitman_closed_form(n, d).value
                par = bounds.parity_bound(L)
                fw = bounds.frankl_wilson_form(n, L).value
                if d % 2 == 0:
                    cons = constructions.hamming_ball(n, t).size
                else:
                    cons = constructions.prism(n, t).size
                orc = _oracle_value(n, L, cap)
                uppers = [spectral, closed, fw] + ([par.value] if par else [])
                rows.append((n, L.members, [
                    str(n), str(d), L.compact(), _fmt(cons), _fmt(orc),
                    _fmt(spectral), _fmt(closed),
                    _fmt(par.value if par else None), _fmt(fw),
                    _soundness(orc, cons, uppers),
                ]))
    elif family == "consecutive":
        header = ["n", "s", "t", "L", "construction", "oracle", "spectral",
                  "closed_form", "frankl_wilson", "soundness"]
        for n in range(n_min, n_max + 1):
            for t in range(1, t_max + 1):
                for s in range(t):
                    if 2 * t >= n:
                        continue
                    L = distance_set(n, range(2 * s + 1, 2 * t + 1))
                    spectral = bounds.cvetkovic_bound(
                        n, L, consecutive_scheme(n, s, t)).value
                    closed = bounds.consecutive_closed_form(n, s, t).value
                    fw = bounds.frankl_wilson_form(n, L).value
                    cons = constructions.packing_family(n, s, t).size
                    orc = _oracle_value(n, L, cap)
                    uppers = [spectral, closed, fw]
                    rows.append((n, L.members, [
                        str(n), str(s), str(t), L.compact(), _fmt(cons),
                        _fmt(orc), _fmt(spectral), _fmt(closed), _fmt(fw),
                        _soundness(orc, cons, uppers),
                    ]))
    elif family == "pairs":
        header = ["n", "s", "L", "construction", "oracle", "spectral",
                  "chain", "closed_form", "frankl_wilson", "soundness"]
        for n in range(n_min, n_max + 1):
            for s in range(s_max + 1):
                if 2 * s + 2 > n:
                    continue
                L = distance_set(n, (2 * s + 1, 2 * s + 2))
                t = s + 1
                spectral = None
                closed = None
                if 2 * t < n:
                    spectral = bounds.cvetkovic_bound(
                        n, L, consecutive_scheme(n, s, t)).value
                    closed = bounds.consecutive_closed_form(n, s, t).value
                chain = constructions.pair_chain_bound(n, s)
                fw = bounds.frankl_wilson_form(n, L).value
                if n > 2 * t:
                    cons = constructions.packing_family(n, s, t).size
                else:
                    cons = None
                orc = _oracle_value(n, L, cap)
                uppers = [u for u in (spectral, closed, chain, fw) if u is not None]
                rows.append((n, L.members, [
                    str(n), str(s), L.compact(), _fmt(cons), _fmt(orc),
                    _fmt(spectral), _fmt(chain), _fmt(closed), _fmt(fw),
                    _soundness(orc, cons, uppers),
                ]))
    else:
        raise DomainError(
            f"unknown compare family {family!r}; valid: {', '.join(COMPARE_FAMILIES)}"
        )
    rows.sort(key=lambda item: (item[0], item[1]))
    return header, [row for _, _, row in rows]


def render_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_compare(args: argparse.Namespace) -> int:
    header, rows = compare_table(
        args.family,
        args.n_min,
        args.n_max,
        t_max=args.t_max,
        s_max=args.s_max,
        max_oracle_n=args.max_oracle_n,
    )
    text = render_csv(header, rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    violations = sum(1 for row in rows if row[-1] == "VIOLATION")
    if violations:
        print(f"soundness violations: {violations}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ksb",
        description="Exact spectral and rank bounds for Hamming-distance-"
                    "constrained vector families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="compute one upper bound")
    p_bound.add_argument("--n", type=int)
    p_bound.add_argument("--L", type=str, help="allowed distances, e.g. 1,2 or 1-6 or upto:4 or not-div:2^2")
    p_bound.add_argument("--method", required=True, choices=BOUND_METHODS)
    p_bound.add_argument("--scheme", choices=SCHEME_NAMES)
    p_bound.add_argument("--scheme-file", type=str)
    p_bound.add_argument("--t", type=int)
    p_bound.add_argument("--s", type=int)
    p_bound.add_argument("--d", type=int)
    p_bound.add_argument("--p", type=int)
    p_bound.add_argument("--N", type=int)
    p_bound.add_argument("--refine", action="store_true",
                         help="interval-arithmetic refinement pass (intersective-spectral)")
    p_bound.add_argument("--format", choices=("json", "csv"), default="json")
    p_bound.add_argument("--output", type=str)
    p_bound.set_defaults(func=_cmd_bound)

    p_oracle = sub.add_parser("oracle", help="exact brute-force value")
    p_oracle.add_argument("--n", type=int)
    p_oracle.add_argument("--L", type=str)
    p_oracle.add_argument("--p", type=int)
    p_oracle.add_argument("--N", type=int)
    p_oracle.add_argument("--max-oracle-n", type=int, default=None)
    p_oracle.add_argument("--max-points", type=int, default=None)
    p_oracle.add_argument("--witness", type=str, help="write the witness family to this file")
    p_oracle.add_argument("--format", choices=("json", "csv"), default="json")
    p_oracle.add_argument("--output", type=str)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_cons = sub.add_parser("construct", help="emit a lower-bound family")
    p_cons.add_argument("--type", required=True,
                        choices=("hamming-ball", "prism", "packing"))
    p_cons.add_argument("--n", type=int, required=True)
    p_cons.add_argument("--r", type=int)
    p_cons.add_argument("--s", type=int)
    p_cons.add_argument("--t", type=int)
    p_cons.add_argument("--output", type=str)
    p_cons.set_defaults(func=_cmd_construct)

    p_clp = sub.add_parser("clp-rank", help="GF(2) rank of a distance-indicator matrix")
    p_clp.add_argument("--n", type=int, required=True)
    p_clp.add_argument("--t", type=int)
    p_clp.add_argument("--k", type=int)
    p_clp.add_argument("--format", choices=("json", "csv"), default="json")
    p_clp.add_argument("--output", type=str)
    p_clp.set_defaults(func=_cmd_clp_rank)

    p_cmp = sub.add_parser("compare", help="bound/oracle/construction sweep as CSV")
    p_cmp.add_argument("--family", required=True, choices=COMPARE_FAMILIES)
    p_cmp.add_argument("--n-min", type=int, required=True)
    p_cmp.add_argument("--n-max", type=int, required=True)
    p_cmp.add_argument("--t-max", type=int, default=5)
    p_cmp.add_argument("--s-max", type=int, default=2)
    p_cmp.add_argument("--max-oracle-n", type=int, default=None)
    p_cmp.add_argument("--output", type=str)
    p_cmp.set_defaults(func=_cmd_compare)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
