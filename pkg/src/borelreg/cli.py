"""Command-line interface.

Exit codes: 0 success; 1 a checked predicate or property failed (e.g.
``is-borel`` on a non-Borel-type ideal, ``verify`` with failures); 2 usage
or parse errors, including oracle-budget refusals; 3 an internal
consistency check tripped (always a bug, never bad input).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .betti import betti_table, reg_oracle
from .borel import is_borel_type, is_stable
from .chain import build_chain, chain_to_dict, regularity_upper_bound
from .errors import (
    InternalCheckError,
    NotBorelTypeError,
    OracleInfeasibleError,
    ParseError,
    UsageError,
)
from .files import format_ideal_text, ideal_to_json, parse_ideal_text
from .generators import InstanceKind, generate
from .ideal import MonomialIdeal
from .regularity import RegularityReport, check_sum_bound, reg_auto, reg_borel_checked, reg_via_truncation
from .ring import RingContext
from .rng import stream
from .verify import VerifyConfig, property_names, run_verify

EXIT_OK = 0
EXIT_PREDICATE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _load_ideal(path: str) -> MonomialIdeal:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_ideal_text(text)


def _emit(data: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(human)


def _cmd_info(args) -> int:
    I = _load_ideal(args.ideal)
    data = ideal_to_json(I)
    data["zero"] = I.is_zero
    data["improper"] = I.improper
    if I.gens:
        data.update(
            deg=I.deg,
            max_var=I.max_var,
            artinian=I.is_artinian,
            reg_degree_bound=regularity_upper_bound(I),
        )
    lines = [f"ring: {I.ring.n} variables ({', '.join(I.ring.names)})", f"ideal: {I}"]
    if I.gens:
        lines += [
            f"generators: {len(I.gens)}",
            f"deg(I): {I.deg}",
            f"m(I): {I.max_var}",
            f"artinian: {I.is_artinian}",
            f"degree bound n(deg-1)+1: {regularity_upper_bound(I)}",
        ]
    _emit(data, args.json, "\n".join(lines))
    return EXIT_OK


def _cmd_is_borel(args) -> int:
    I = _load_ideal(args.ideal)
    verdict = is_borel_type(I)
    if verdict:
        _emit({"borel_type": True, "witness": None}, args.json, "Borel type: yes")
        return EXIT_OK
    w = verdict.witness
    data = {
        "borel_type": False,
        "witness": {
            "j": w.j,
            "variable_route": [str(g) for g in w.variable_route.gens] or "improper",
            "prime_route": [str(g) for g in w.prime_route.gens] or "improper",
        },
    }
    human = (
        f"Borel type: no (witness j={w.j}: "
        f"(I:x{w.j}^inf) = {w.variable_route} but (I:(x1..x{w.j})^inf) = {w.prime_route})"
    )
    _emit(data, args.json, human)
    return EXIT_PREDICATE


def _cmd_is_stable(args) -> int:
    I = _load_ideal(args.ideal)
    verdict = is_stable(I)
    if verdict:
        _emit({"stable": True, "witness": None}, args.json, "stable: yes")
        return EXIT_OK
    w = verdict.witness
    data = {
        "stable": False,
        "witness": {"generator": str(w.generator), "i": w.i, "moved": str(w.moved)},
    }
    _emit(
        data,
        args.json,
        f"stable: no (x{w.i} * {w.generator} / x{w.generator.max_var} = {w.moved} escapes the ideal)",
    )
    return EXIT_PREDICATE


def _cmd_chain(args) -> int:
    I = _load_ideal(args.ideal)
    chain = build_chain(I)
    data = chain_to_dict(chain)
    lines = [f"saturation chain of {I} (Borel type: {chain.borel_type})"]
    for st in data["stages"]:
        sat = st["saturation"] if st["saturation"] == "improper" else "(" + ", ".join(st["saturation"]) + ")"
        lines.append(
            f"  stage {st['index']}: n_l={st['n_l']}  J=({', '.join(st['restricted'])})  "
            f"J^sat={sat}  s={st['s']}"
        )
    lines.append(f"  r = {data['r']}")
    if data["regularity"] is not None:
        lines.append(f"  regularity (max s + 1) = {data['regularity']}")
    _emit(data, args.json, "\n".join(lines))
    return EXIT_OK


def _cmd_reg(args) -> int:
    I = _load_ideal(args.ideal)
    try:
        if args.method == "auto":
            report = reg_auto(I)
        elif args.method == "chain":
            value, agreement = reg_borel_checked(I)
            report = RegularityReport(value, "chain", agreement, regularity_upper_bound(I))
        elif args.method == "truncation":
            value = reg_via_truncation(I)
            report = RegularityReport(value, "truncation", {"truncation": value}, regularity_upper_bound(I))
        else:
            value = reg_oracle(I)
            report = RegularityReport(value, "oracle", {"oracle": value}, regularity_upper_bound(I))
    except NotBorelTypeError as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_PREDICATE
    agreement = ", ".join(f"{k}={v}" for k, v in sorted(report.agreement.items()))
    _emit(
        report.to_dict(),
        args.json,
        f"regularity = {report.value} (method {report.method}; {agreement}; bound {report.bound})",
    )
    return EXIT_OK


def _cmd_truncate(args) -> int:
    I = _load_ideal(args.ideal)
    cut = I.truncate(args.degree)
    data = {"e": args.degree, **ideal_to_json(cut)}
    _emit(data, args.json, format_ideal_text(cut).rstrip("\n"))
    return EXIT_OK


def _cmd_sum(args) -> int:
    parts = [_load_ideal(p) for p in args.ideals]
    total = parts[0]
    for p in parts[1:]:
        total = total.sum(p)
    if args.reg:
        report = check_sum_bound(parts)
        data = report.to_dict()
        human = (
            f"sum = {report.sum_ideal}\n"
            f"part regularities: {list(report.part_values)}\n"
            f"sum regularity: {report.sum_value}\n"
            f"bound holds: {report.bound_holds}; truncation decomposes: "
            f"{report.truncation_decomposes}; truncation stable: {report.truncation_stable}"
        )
        _emit(data, args.json, human)
        return EXIT_OK if report.ok else EXIT_PREDICATE
    _emit(ideal_to_json(total), args.json, format_ideal_text(total).rstrip("\n"))
    return EXIT_OK


def _cmd_ass(args) -> int:
    from .primes import associated_primes

    I = _load_ideal(args.ideal)
    result = associated_primes(I)
    primes = [[I.ring.name(i) for i in sorted(p)] for p in result.primes]
    data = {
        "primes": primes,
        "totally_ordered": result.totally_ordered,
        "renumbering": list(result.renumbering) if result.renumbering else None,
    }
    lines = ["associated primes: " + "; ".join("(" + ", ".join(p) + ")" for p in primes)]
    lines.append(f"totally ordered: {result.totally_ordered}")
    if result.renumbering:
        lines.append(f"renumbering (old -> new): {list(result.renumbering)}")
    _emit(data, args.json, "\n".join(lines))
    return EXIT_OK


def _cmd_betti(args) -> int:
    I = _load_ideal(args.ideal)
    table = betti_table(I)
    data = {
        "coefficients": table.coefficients,
        "entries": [
            {"i": i, "degree": sum(exps), "multidegree": list(exps), "beta": beta}
            for i, exps, beta in table.entries
        ],
        "graded": [
            {"i": i, "degree": j, "beta": beta} for (i, j), beta in sorted(table.graded().items())
        ],
        "regularity": table.regularity,
    }
    human = (
        table.render()
        + f"\nregularity = {table.regularity} (coefficients: {table.coefficients})"
    )
    _emit(data, args.json, human)
    return EXIT_OK


def _parse_range(text: str, what: str) -> tuple[int, int]:
    if ":" in text:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo > hi or lo < 1:
        raise UsageError(f"bad {what} range {text!r}")
    return lo, hi


def _cmd_gen(args) -> int:
    n_lo, n_hi = _parse_range(args.n, "--n")
    deg_lo, deg_hi = _parse_range(args.deg, "--deg")
    outputs = []
    for k in range(args.count):
        rng = stream(args.seed, args.kind, k)
        ring = RingContext(rng.randint(n_lo, n_hi))
        ideal = generate(InstanceKind(args.kind), rng, ring, rng.randint(deg_lo, deg_hi))
        outputs.append(format_ideal_text(ideal))
    if args.out:
        directory = Path(args.out)
        directory.mkdir(parents=True, exist_ok=True)
        for k, text in enumerate(outputs):
            (directory / f"{args.kind}-{args.seed}-{k}.ideal").write_text(text)
        print(f"wrote {len(outputs)} ideal file(s) to {directory}")
    else:
        print(("# ---\n").join(outputs), end="")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.list:
        print("\n".join(property_names()))
        return EXIT_OK
    cfg = VerifyConfig(
        seed=args.seed,
        count=args.count,
        n_range=_parse_range(args.n, "--n"),
        deg_range=_parse_range(args.deg, "--deg"),
        properties=tuple(args.properties.split(",")) if args.properties else None,
        kind=args.kind,
        oracle_max_gens=args.oracle_budget,
    )
    report = run_verify(cfg, index=args.index)
    if args.json:
        print(report.to_json(), end="")
    else:
        print(report.render(), end="")
    return EXIT_OK if report.ok else EXIT_PREDICATE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelreg",
        description="Exact computations with Borel-type monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("info", _cmd_info, "summary of an ideal file").add_argument("ideal")
    add("is-borel", _cmd_is_borel, "Borel-type test with witness").add_argument("ideal")
    add("is-stable", _cmd_is_stable, "stability test with witness").add_argument("ideal")
    add("chain", _cmd_chain, "saturation chain with per-stage data").add_argument("ideal")

    p = add("reg", _cmd_reg, "Castelnuovo-Mumford regularity")
    p.add_argument("--method", choices=["auto", "chain", "truncation", "oracle"], default="auto")
    p.add_argument("ideal")

    p = add("truncate", _cmd_truncate, "generators of the degree->=e truncation")
    p.add_argument("degree", type=int)
    p.add_argument("ideal")

    p = add("sum", _cmd_sum, "sum of ideals; --reg adds the regularity bound report")
    p.add_argument("--reg", action="store_true")
    p.add_argument("ideals", nargs="+")

    add("ass", _cmd_ass, "associated primes, chain order, renumbering").add_argument("ideal")
    add("betti", _cmd_betti, "multigraded Betti table (rational coefficients)").add_argument("ideal")

    p = add("gen", _cmd_gen, "generate seeded instance files")
    p.add_argument("--kind", choices=[k.value for k in InstanceKind], default="random_monomial")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--n", default="2:4")
    p.add_argument("--deg", default="1:4")
    p.add_argument("--out", default=None, help="directory for the generated files")

    p = add("verify", _cmd_verify, "run the property-verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--n", default="2:4")
    p.add_argument("--deg", default="1:4")
    p.add_argument("--properties", default=None, help="comma-separated property names")
    p.add_argument("--kind", choices=[k.value for k in InstanceKind], default=None)
    p.add_argument("--index", type=int, default=None, help="replay a single instance index")
    p.add_argument("--oracle-budget", type=int, default=20)
    p.add_argument("--list", action="store_true", help="list property names and exit")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except (ParseError, OracleInfeasibleError, UsageError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalCheckError, AssertionError) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
