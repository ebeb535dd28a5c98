"""
DRINFELD Command Line

Subcommands:
    expand    u-expansion of a generator (cache format or JSON)
    carlitz   the additive polynomial ρ_a
    goss      Goss polynomial rows of a lattice
    hecke     T_P, U_P or δ_P applied to a form
    matrix    T_P on a level-one monomial basis with its verdicts
    verify    run a named verification suite
    suites    list the verification suites

Exit codes: 0 success, 1 a check failed, 2 usage or configuration error,
3 resource ceiling hit.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import ValidationError
from sympy import factorint

from ..algebra.field import FiniteField, get_field
from ..algebra.scalar import Scalar
from ..algebra.text import parse_poly
from ..carlitz.additive import carlitz_poly
from ..carlitz.context import get_context
from ..carlitz.goss import goss_table
from ..core.config import Config
from ..core.exceptions import (
    DrinfeldError,
    FieldError,
    GradingError,
    LevelError,
    NotIrreducibleError,
    OracleDomainError,
    ResourceLimitError,
    SuiteError,
)
from ..core.logger import Logger, set_log_level
from ..core.models import FieldConfig, OutputFormat, RunConfig, SuiteReport
from ..forms.generators import FormFactory, get_factory, parse_generator
from ..hecke.operators import PrimeP, op_delta_P, op_T, op_U
from ..series.codec import dump_series, series_payload
from ..series.useries import USeries
from ..spectral.report import hecke_matrix
from .suites import SUITES, run_suite, suite_names

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

USAGE_ERRORS = (FieldError, SuiteError, GradingError, NotIrreducibleError, LevelError, OracleDomainError)

SUITE_PARAMS = ("P", "Q", "P1", "P2", "kmax", "forms")

logger = Logger("cli")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    field = common.add_argument_group("field")
    field.add_argument("--q", type=int, help="Field size, a power of an odd prime")
    field.add_argument("--p", type=int, help="Characteristic (with --r)")
    field.add_argument("--r", type=int, help="Extension degree (with --p)")
    field.add_argument("--modulus", help="Comma-separated modulus coefficients over F_p, low degree first")
    run = common.add_argument_group("run")
    run.add_argument("--prec", type=int, help="Series precision")
    run.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value,
                     help="Report format")
    run.add_argument("--seed", type=int, help="Seed for randomized checks")
    run.add_argument("--out", help="Write the report to this file instead of stdout")
    run.add_argument("--config", help="Configuration file (JSON or YAML)")
    run.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    run.add_argument("--timing", action="store_true", help="Include elapsed_ms in verify reports")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="drinfeld", description="Exact Drinfeld modular forms over F_q[T]")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="u-expansion of a generator")
    p.add_argument("--form", required=True, help="g1, gd:<d>, h, Delta, E, E_P, Delta_T, Delta_W")
    p.add_argument("--P", help="Prime for E_P")

    p = sub.add_parser("carlitz", parents=[common], help="Carlitz polynomial ρ_a")
    p.add_argument("--a", required=True, help="Nonzero polynomial in T")

    p = sub.add_parser("goss", parents=[common], help="Goss polynomial rows")
    p.add_argument("--lattice", required=True, help="torsion:<P>, period or toy")
    p.add_argument("--kmax", type=int, required=True)

    p = sub.add_parser("hecke", parents=[common], help="Apply T_P, U_P or δ_P to a form")
    p.add_argument("--op", required=True, choices=["T", "U", "deltaP"])
    p.add_argument("--P", required=True, help="Monic irreducible polynomial")
    p.add_argument("--form", required=True, help="Product of generators, e.g. g1^2*h or E_P:T")

    p = sub.add_parser("matrix", parents=[common], help="T_P on a level-one monomial basis")
    p.add_argument("--P", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--cusp", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="Run a verification suite")
    p.add_argument("suite", help="Suite name; see `suites`")
    p.add_argument("--P")
    p.add_argument("--Q")
    p.add_argument("--P1")
    p.add_argument("--P2")
    p.add_argument("--kmax", type=int)
    p.add_argument("--forms", type=int, help="Number of random forms (commute)")

    sub.add_parser("suites", parents=[common], help="List verification suites")
    return parser


def resolve_field(args: argparse.Namespace, settings: Config) -> Tuple[FieldConfig, FiniteField]:
    """F_q from --q, from --p/--r/--modulus, or from the configuration."""
    if args.q is not None:
        if args.p is not None or args.r is not None:
            raise FieldError("give either --q or --p/--r, not both")
        factors = factorint(args.q)
        if len(factors) != 1:
            raise FieldError(f"q = {args.q} is not a prime power")
        (p, r), = factors.items()
        modulus = None
    else:
        p = args.p if args.p is not None else settings.get("field.p", 3)
        r = args.r if args.r is not None else settings.get("field.r", 1)
        modulus = settings.get("field.modulus")
    if args.modulus:
        modulus = [int(c) for c in args.modulus.split(",")]
    try:
        field_config = FieldConfig(p=int(p), r=int(r), modulus=modulus)
    except ValidationError as e:
        raise FieldError(f"invalid field parameters: {e.errors()[0]['msg']}") from None
    modulus = tuple(field_config.modulus) if field_config.modulus else None
    return field_config, get_field(field_config.p, field_config.r, modulus)


def run_config(args: argparse.Namespace, settings: Config, field_config: FieldConfig) -> RunConfig:
    params = {}
    for key in SUITE_PARAMS:
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    return RunConfig(
        field=field_config,
        prec=args.prec if args.prec is not None else int(settings.get("precision.default", 60)),
        output_format=OutputFormat(args.format),
        suite=getattr(args, "suite", None),
        seed=args.seed if args.seed is not None else int(settings.get("verify.seed", 20240917)),
        timing=args.timing,
        params=params,
    )


def emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def parse_form(factory: FormFactory, text: str, prec: int) -> USeries:
    """Product of generators: 'g1^2*h', 'Delta*E_P:T', 'gd:2'; E_P factors take no exponent."""
    result = None
    for factor in text.split("*"):
        factor = factor.strip()
        name, _, exponent = factor.rpartition("^")
        if factor.startswith("E_P") or not exponent.isdigit():
            name, exponent = factor, ""
        series = factory.build(parse_generator(factory.field, name), prec)
        if exponent:
            series = series ** int(exponent)
        result = series if result is None else result * series
    if result is None:
        raise GradingError(f"empty form {text!r}")
    return result.truncate(prec)


# Subcommands

def cmd_expand(args: argparse.Namespace, field: FiniteField, config: RunConfig) -> int:
    form = args.form
    if args.P and form in ("E_P", "E_P:"):
        form = f"E_P:{args.P}"
    gid = parse_generator(field, form)
    series = get_factory(field).build(gid, config.prec)
    if config.output_format == OutputFormat.TEXT:
        emit(dump_series(series).rstrip("\n"), args.out)
    else:
        emit(series_payload(str(gid), series).model_dump_json(indent=2), args.out)
    return EXIT_OK


def cmd_carlitz(args: argparse.Namespace, field: FiniteField, config: RunConfig) -> int:
    a = parse_poly(field, args.a)
    rho = carlitz_poly(a)
    if config.output_format == OutputFormat.TEXT:
        emit(str(rho), args.out)
    else:
        coefficients = [str(rho.coefficient(i)) for i in range(rho.q_degree + 1)]
        emit(_json({"a": str(a), "q": field.q, "rho": str(rho), "coefficients": coefficients}), args.out)
    return EXIT_OK


def cmd_goss(args: argparse.Namespace, field: FiniteField, config: RunConfig) -> int:
    kind, _, spec = args.lattice.partition(":")
    ctx = get_context(field)
    if kind == "torsion":
        table = ctx.torsion_table(parse_poly(field, spec or "T"), args.kmax, scaled=False)
    elif kind == "period":
        table = ctx.period_table(args.kmax)
    elif kind == "toy":
        table = goss_table((Scalar.one(field), Scalar.from_int(field, -1)), args.kmax, lattice="toy")
    else:
        raise GradingError(f"unknown lattice {args.lattice!r}; expected torsion:<P>, period or toy")
    rows = [(i, table.row(i)) for i in range(1, args.kmax + 1)]
    if config.output_format == OutputFormat.TEXT:
        emit("\n".join(f"{i}\t{row}" for i, row in rows), args.out)
    else:
        emit(_json({"lattice": args.lattice, "q": field.q, "rows": [[i, row] for i, row in rows]}), args.out)
    return EXIT_OK


def cmd_hecke(args: argparse.Namespace, field: FiniteField, config: RunConfig) -> int:
    factory = get_factory(field)
    P = PrimeP(parse_poly(field, args.P), factory.ctx)
    out = config.prec
    if args.op == "deltaP":
        image = op_delta_P(parse_form(factory, args.form, out), P, out)
    else:
        f = parse_form(factory, args.form, out * P.qd)
        image = op_T(f, P, out) if args.op == "T" else op_U(f, P, out)
    name = f"{args.op}_{P}({args.form})"
    if config.output_format == OutputFormat.TEXT:
        emit(dump_series(image).rstrip("\n"), args.out)
    else:
        emit(series_payload(name, image).model_dump_json(indent=2), args.out)
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace, field: FiniteField, config: RunConfig) -> int:
    factory = get_factory(field)
    P = PrimeP(parse_poly(field, args.P), factory.ctx)
    report = hecke_matrix(P, args.k, args.l, args.cusp, factory)
    if config.output_format == OutputFormat.TEXT:
        lines = [f"T_{P} on {'S' if args.cusp else 'M'}_({args.k},{args.l}): {', '.join(report.basis.labels())}"]
        lines += ["  [" + ", ".join(row) + "]" for row in report.matrix.to_text()]
        lines.append(f"charpoly: {report.charpoly}")
        lines.append(f"minpoly: {report.minpoly}")
        lines += [f"{key}: {value}" for key, value in report.verdicts.model_dump().items()]
        emit("\n".join(lines), args.out)
    else:
        emit(report.to_model().model_dump_json(indent=2), args.out)
    return EXIT_OK


def render_text(report: SuiteReport) -> str:
    lines = [f"suite {report.suite}: {sum(c.passed for c in report.checks)}/{len(report.checks)} passed"]
    for c in report.checks:
        line = f"  {c.verdict.value.upper():4}  {c.name}  [{c.statement}]"
        if c.witness:
            line += f"  witness: {c.witness}"
        lines.append(line)
    if report.elapsed_ms is not None:
        lines.append(f"elapsed_ms: {report.elapsed_ms}")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace, field: FiniteField, config: RunConfig, settings: Config) -> int:
    if args.suite not in SUITES:
        raise SuiteError(f"unknown suite {args.suite!r}; expected one of {', '.join(suite_names())}")
    report = run_suite(args.suite, config, field, explicit_prec=args.prec is not None, settings=settings)
    if config.output_format == OutputFormat.TEXT:
        emit(render_text(report), args.out)
    else:
        emit(report.model_dump_json(indent=2), args.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_suites(args: argparse.Namespace, config: RunConfig) -> int:
    if config.output_format == OutputFormat.TEXT:
        emit("\n".join(f"{name}\t{SUITES[name][1]}" for name in suite_names()), args.out)
    else:
        emit(_json([{"name": name, "description": SUITES[name][1]} for name in suite_names()]), args.out)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, FiniteField, RunConfig], int]] = {
    "expand": cmd_expand,
    "carlitz": cmd_carlitz,
    "goss": cmd_goss,
    "hecke": cmd_hecke,
    "matrix": cmd_matrix,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        if args.log_level:
            set_log_level(args.log_level)
        settings = Config(args.config) if args.config else Config()
        field_config, field = resolve_field(args, settings)
        config = run_config(args, settings, field_config)
        logger.debug("run", command=args.command, q=field.q, prec=config.prec, seed=config.seed)
        if args.command == "suites":
            return cmd_suites(args, config)
        if args.command == "verify":
            return cmd_verify(args, field, config, settings)
        return COMMANDS[args.command](args, field, config)
    except ResourceLimitError as e:
        logger.error(f"Resource limit: {e}")
        return EXIT_RESOURCE
    except USAGE_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except (ValidationError, ValueError) as e:
        logger.error(f"Invalid argument: {e}")
        return EXIT_USAGE
    except DrinfeldError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
