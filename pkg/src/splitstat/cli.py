"""Command-line front end.

Every command is pure with respect to its arguments and prints
deterministic output; rationals are rendered as "a/b" strings, never
floats.  Exit codes: 0 on success, 2 on usage errors (unknown statistic,
exceeded budget, unstabilized limit, bad flags), 1 on an internal
consistency failure, i.e. a violated identity that should never occur.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    BudgetExceeded,
    ConsistencyError,
    DegreeMismatch,
    InvalidCharacteristic,
    NotStabilized,
    SeriesError,
    UnknownStatistic,
)
from .exact import UPoly, format_rational, parse_rational
from .expect import (
    NORM_Q_POWER,
    NORM_SF_COUNT,
    expected,
    expected_sf,
    stable_limit,
)
from .gf import DEFAULT_BUDGET, census, irreducibles, make_field
from .lie_chars import phi_table, psi_table
from .measures import necklace, sf_splitting_measure, splitting_measure
from .partitions import Partition, partitions_of
from .sym_chars import (
    ClassFunction,
    builtin,
    builtin_names,
    builtin_polynomial,
    decompose,
    indicator,
    parse_character_polynomial,
)


def _parse_q(text: str) -> tuple[int, int]:
    body = text.strip().replace("**", "^")
    if "^" in body:
        p_str, n_str = body.split("^", 1)
    else:
        p_str, n_str = body, "1"
    try:
        return int(p_str), int(n_str)
    except ValueError:
        raise UnknownStatistic(f"--q expects p or p^n, got {text!r}") from None


def resolve_stat(spec: str, d: int) -> ClassFunction:
    """Resolve a --stat argument into a class function on partitions of d."""
    s = spec.strip()
    if s in builtin_names() or s == "1":
        return builtin(s, d)
    if s.startswith("ind:"):
        lam = Partition.parse(s[len("ind:"):])
        if lam.d != d:
            raise UnknownStatistic(
                f"indicator partition {lam.label()} has size {lam.d}, not d={d}"
            )
        return indicator(lam)
    if s.startswith("@"):
        with open(s[1:], encoding="utf-8") as fh:
            raw = json.load(fh)
        values = {
            Partition.parse(key): parse_rational(str(v)) for key, v in raw.items()
        }
        return ClassFunction(d, values, name=s)
    return parse_character_polynomial(s).class_function(d)


def _resolve_polynomial_stat(spec: str):
    s = spec.strip()
    if s in ("one", "1", "R", "Q"):
        return builtin_polynomial(s)
    if s in ("sgn", "ET") or s.startswith(("ind:", "@")):
        raise UnknownStatistic(
            f"limits need a statistic defined uniformly in d: {s!r} is not "
            "a character polynomial (use one, R, Q, or an expression in x1, x2, ...)"
        )
    return parse_character_polynomial(s)


def format_inverse_powers(p: UPoly) -> str:
    """Render a u-polynomial in the 1/q table style: "2/q + 1/q^2"."""
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            term = format_rational(c)
        else:
            qk = "q" if k == 1 else f"q^{k}"
            num = abs(c)
            if num.denominator == 1:
                term = f"{num.numerator}/{qk}"
            else:
                term = f"{num.numerator}/({num.denominator}*{qk})"
            if c < 0:
                term = "-" + term
        parts.append(term)
    text = parts[0]
    for term in parts[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text


def _emit(args: argparse.Namespace, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_measure(args: argparse.Namespace) -> int:
    m = sf_splitting_measure(args.d) if args.sf else splitting_measure(args.d)
    payload = {
        "d": m.d,
        "flavor": m.flavor,
        "values": {lam.label(): poly.json_coeffs() for lam, poly in m.items()},
    }
    lines = [f"splitting measure, d={m.d}, flavor={m.flavor}"]
    width = max(len(lam.label()) for lam in partitions_of(m.d))
    for lam, poly in m.items():
        lines.append(f"  {lam.label():<{width}}  {format_inverse_powers(poly)}")
    _emit(args, payload, lines)
    return 0


def _cmd_char_table(args: argparse.Namespace, kind: str) -> int:
    table = psi_table(args.d) if kind == "psi" else phi_table(args.d)
    payload = table.to_json()
    lams = partitions_of(args.d)
    width = max(len(lam.label()) for lam in lams)
    header = "  k | " + " ".join(f"{lam.label():>{width}}" for lam in lams)
    lines = [f"{kind} character table, d={args.d}", header]
    for k in table.degrees:
        row = " ".join(f"{table.value(k, lam):>{width}}" for lam in lams)
        lines.append(f"{k:>3} | {row}")
    _emit(args, payload, lines)
    return 0


def cmd_psi(args: argparse.Namespace) -> int:
    return _cmd_char_table(args, "psi")


def cmd_phi(args: argparse.Namespace) -> int:
    return _cmd_char_table(args, "phi")


def cmd_expect(args: argparse.Namespace) -> int:
    P = resolve_stat(args.stat, args.d)
    result = expected(args.d, P, name=args.stat)
    payload = {
        "d": result.d,
        "stat": result.statistic,
        "coeffs": result.value.json_coeffs(),
        "route": result.route,
        "checks": list(result.checks),
    }
    lines = [f"{args.d:>3} | {format_inverse_powers(result.value)}"]
    _emit(args, payload, lines)
    return 0


def cmd_sf_expect(args: argparse.Namespace) -> int:
    normalization = NORM_SF_COUNT if args.normalization == "sfcount" else NORM_Q_POWER
    P = resolve_stat(args.stat, args.d)
    result = expected_sf(
        args.d, P, normalization=normalization, series_order=args.order, name=args.stat
    )
    payload = {
        "d": result.d,
        "stat": result.statistic,
        "normalization": result.normalization,
        "coeffs": result.value.json_coeffs(),
        "route": result.route,
        "checks": list(result.checks),
    }
    if result.truncated_at is not None:
        payload["truncated_at"] = result.truncated_at
    suffix = " (truncated series)" if result.truncated_at is not None else ""
    lines = [f"{args.d:>3} | {format_inverse_powers(result.value)}{suffix}"]
    _emit(args, payload, lines)
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    P = resolve_stat(args.stat, args.d)
    components = decompose(P)
    ordered = [(shape, components[shape]) for shape in partitions_of(args.d) if shape in components]
    payload = {
        "d": args.d,
        "stat": args.stat,
        "components": {shape.label(): format_rational(c) for shape, c in ordered},
    }
    lines = [f"decomposition of {args.stat} into irreducibles, d={args.d}"]
    for shape, c in ordered:
        lines.append(f"  {shape.label()}: {format_rational(c)}")
    if not ordered:
        lines.append("  (zero class function)")
    _emit(args, payload, lines)
    return 0


def cmd_limit(args: argparse.Namespace) -> int:
    P = _resolve_polynomial_stat(args.stat)
    result = stable_limit(P, args.order, d_cap=args.d_cap)
    payload = {
        "stat": result.statistic,
        "order": result.order,
        "coeffs": [format_rational(c) for c in result.coeffs],
        "stabilized_at": {str(k): result.stabilized_at[k] for k in range(args.order + 1)},
    }
    lines = [f"limit of expected {args.stat} as d grows (coefficients of 1/q^k)"]
    for k in range(args.order + 1):
        lines.append(
            f"  k={k}: {format_rational(result.coeffs[k])}"
            f"  (stable from d={result.stabilized_at[k]})"
        )
    _emit(args, payload, lines)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    p, n = _parse_q(args.q)
    field = make_field(p, n)
    P = resolve_stat(args.stat, args.d)
    ok = True
    rows = []
    for label, squarefree in (("all", False), ("squarefree", True)):
        c = census(
            field, args.d, P, squarefree_only=squarefree,
            budget=args.budget, threads=args.threads,
        )
        if squarefree:
            formula = expected_sf(args.d, P, name=args.stat).at_q(field.q)
        else:
            formula = expected(args.d, P, name=args.stat).at_q(field.q)
        match = c == formula
        ok = ok and match
        rows.append((label, c, formula, match))
    payload = {
        "d": args.d,
        "q": field.q,
        "stat": args.stat,
        "results": {
            label: {
                "census": format_rational(c),
                "formula": format_rational(f),
                "match": match,
            }
            for label, c, f, match in rows
        },
        "ok": ok,
    }
    lines = [f"verify d={args.d} q={field.q} stat={args.stat}"]
    for label, c, f, match in rows:
        status = "OK" if match else "MISMATCH"
        lines.append(
            f"  {label:<10} census {format_rational(c)}"
            f" vs formula {format_rational(f)}: {status}"
        )
    _emit(args, payload, lines)
    if not ok:
        print("verification failed: census and formula disagree", file=sys.stderr)
        return 1
    return 0


def cmd_irreducibles(args: argparse.Namespace) -> int:
    p, n = _parse_q(args.q)
    field = make_field(p, n)
    table = irreducibles(field, args.max_degree, budget=args.budget)
    counts = {deg: len(table[deg]) for deg in sorted(table)}
    match = all(
        counts[deg] == necklace(deg).evaluate(field.q) for deg in counts
    )
    payload: dict = {
        "q": field.q,
        "counts": {str(deg): counts[deg] for deg in counts},
        "count_polynomial_match": match,
    }
    lines = [f"monic irreducibles over F_{field.q}"]
    for deg in counts:
        lines.append(f"  degree {deg}: {counts[deg]}")
    lines.append(f"  counts match the count polynomial: {'yes' if match else 'NO'}")
    if args.list:
        payload["polys"] = {
            str(deg): [list(f.coeffs) for f in table[deg]] for deg in counts
        }
        for deg in counts:
            for f in table[deg]:
                lines.append(f"    {f}")
    _emit(args, payload, lines)
    if not match:
        print("irreducible counts disagree with the count polynomial", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitstat",
        description=(
            "Exact expected values of factorization statistics on monic "
            "polynomials over finite fields, the symmetric-group characters "
            "behind them, and a brute-force census to verify everything."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        s = sub.add_parser(name, help=help_text)
        s.set_defaults(fn=fn)
        s.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return s

    s = add("measure", cmd_measure, "splitting measure for one degree")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--sf", action="store_true", help="squarefree flavor")

    s = add("psi", cmd_psi, "character table of configuration-space cohomology (R^3)")
    s.add_argument("--d", type=int, required=True)

    s = add("phi", cmd_phi, "character table of configuration-space cohomology (R^2)")
    s.add_argument("--d", type=int, required=True)

    s = add("expect", cmd_expect, "expected value of a statistic")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--stat", required=True)

    s = add("sf-expect", cmd_sf_expect, "squarefree expected value of a statistic")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--stat", required=True)
    s.add_argument(
        "--normalization", choices=("qpower", "sfcount"), default="qpower",
        help="divide by q^d (qpower) or by the squarefree count (sfcount)",
    )
    s.add_argument("--order", type=int, default=None,
                   help="series order when sfcount division is not exact")

    s = add("decompose", cmd_decompose, "decompose a statistic into irreducibles")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--stat", required=True)

    s = add("limit", cmd_limit, "coefficientwise limit of expected values as d grows")
    s.add_argument("--stat", required=True)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--d-cap", type=int, default=30, dest="d_cap")

    s = add("verify", cmd_verify, "compare the brute-force census with the formula")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--q", required=True, help="field size, p or p^n")
    s.add_argument("--stat", required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--threads", type=int, default=1)

    s = add("irreducibles", cmd_irreducibles, "sieve monic irreducibles and check counts")
    s.add_argument("--q", required=True, help="field size, p or p^n")
    s.add_argument("--max-degree", type=int, required=True, dest="max_degree")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--list", action="store_true", help="list the polynomials")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 1
    except (
        UnknownStatistic,
        BudgetExceeded,
        NotStabilized,
        SeriesError,
        DegreeMismatch,
        InvalidCharacteristic,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
