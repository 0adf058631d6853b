"""Command-line front end: catalog listing, verification, sweeps and figure data.

Exit status is 0 when every requested verification passes, 1 when any fails
or errors, and 2 for configuration errors (detected before any evaluation).
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from fractions import Fraction

from mpmath import mpc

from . import limits, registry
from .errors import InvalidParams, MellinSumError
from .mpnum import DEFAULT_MAX_DIGITS, PrecisionContext, parse_number, to_decimal_string

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
REPORT_FIELDS = ("id", "params", "lhs", "rhs", "abs_diff", "digits_agreed", "digits_requested", "wall_ms",
                 "status")
FIGURES = {"fig1", "fig2"}


class ConfigError(Exception):
    """Invalid command-line configuration."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


# -- value grids ----------------------------------------------------------------------------


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"range endpoints must be rational, got {text!r}") from None


def expand_values(text: str) -> list[str]:
    """Expand ``v1,v2,...`` lists whose items may be ``start..stop[:step]`` ranges."""
    out: list[str] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise ConfigError(f"empty value in {text!r}")
        if ".." not in item:
            out.append(item)
            continue
        span, _, step_text = item.partition(":")
        start_text, _, stop_text = span.partition("..")
        start, stop = _fraction(start_text), _fraction(stop_text)
        step = _fraction(step_text) if step_text else Fraction(1)
        if step <= 0:
            raise ConfigError(f"range step must be positive in {item!r}")
        x = start
        while x <= stop:
            out.append(str(x))
            x += step
    return out


def _int_values(text: str, name: str) -> list[int]:
    values = []
    for v in expand_values(text):
        f = _fraction(v)
        if f.denominator != 1:
            raise ConfigError(f"--{name} values must be integers, got {v!r}")
        values.append(int(f))
    return values


def _param_grid(pairs: list[str], sweep: bool) -> list[dict]:
    names, choices = [], []
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise ConfigError(f"--param expects k=v, got {pair!r}")
        if name in names:
            raise ConfigError(f"parameter {name!r} given twice")
        values = expand_values(value) if sweep else [value]
        if not values:
            raise ConfigError(f"parameter {name!r} has an empty range")
        names.append(name)
        choices.append(values)
    return [dict(zip(names, combo)) for combo in itertools.product(*choices)]


# -- serialization --------------------------------------------------------------------------


def _num(x, digits):
    return None if x is None else to_decimal_string(x, digits)


def report_dict(rep: registry.VerificationReport) -> dict:
    d = rep.digits_requested
    out = {"id": rep.id, "params": dict(rep.params), "lhs": _num(rep.lhs, d), "rhs": _num(rep.rhs, d),
           "abs_diff": _num(rep.abs_diff, 5), "digits_agreed": rep.digits_agreed, "digits_requested": d,
           "wall_ms": str(int(round(rep.wall_time * 1000))), "status": rep.status}
    if rep.error:
        out["error"] = rep.error
    return out


def _params_text(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def format_reports(reports, fmt: str) -> str:
    rows = [report_dict(r) for r in reports]
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_FIELDS)
        for row in rows:
            writer.writerow([_params_text(row["params"]) if k == "params" else row[k] for k in REPORT_FIELDS])
        return buf.getvalue()
    lines = []
    for row, rep in zip(rows, reports):
        head = f"{row['status'].upper():5s} {row['id']}"
        if row["params"]:
            head += f" [{_params_text(row['params'])}]"
        if rep.status == "error":
            lines.append(f"{head}  {rep.error}")
            continue
        lines.append(f"{head}  digits={row['digits_agreed']}/{row['digits_requested']}  lhs={row['lhs']}"
                     f"  rhs={row['rhs']}  diff={row['abs_diff']}  {rep.wall_time:.2f}s")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


def format_listing(records, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.summary() for r in records], indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("id", "group", "kind", "title", "params"))
        for r in records:
            writer.writerow((r.id, r.group, r.kind, r.title, _params_text(r.default_params)))
        return buf.getvalue()
    lines = []
    for r in records:
        alias = f" (alias {', '.join(r.aliases)})" if r.aliases else ""
        params = f" [{_params_text(r.default_params)}]" if r.params else ""
        lines.append(f"{r.group:3s} {r.id}{alias}: {r.title}{params}")
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------------------


def _context(args) -> PrecisionContext:
    if args.digits < 10:
        raise ConfigError("--digits must be at least 10")
    max_digits = args.max_digits if args.max_digits is not None else max(DEFAULT_MAX_DIGITS, args.digits + 10)
    if max_digits < args.digits + 10:
        raise ConfigError("--max-digits must be at least --digits + 10")
    if args.jobs < 1:
        raise ConfigError("--jobs must be positive")
    try:
        return PrecisionContext(args.digits, max_digits=max_digits)
    except MellinSumError as exc:
        raise ConfigError(str(exc)) from None


def _record(id_: str):
    try:
        return registry.get(id_)
    except InvalidParams as exc:
        raise ConfigError(str(exc)) from None


def _validate(record, params: dict):
    try:
        _, parsed = record.resolve(params)
    except (InvalidParams, ValueError) as exc:
        raise ConfigError(str(exc)) from None
    problem = record.domain(parsed)
    if problem:
        raise ConfigError(f"{record.id}: {problem}")


def _split(text: str | None) -> list[str]:
    return [t for t in (text or "").split(",") if t]


def _selected_records(args):
    groups = _split(args.group)
    for g in groups:
        if g not in registry.GROUPS:
            raise ConfigError(f"unknown group {g!r}")
    ids = [_record(i).id for i in _split(args.id)]
    records = registry.list_identities(groups) if groups else registry.list_identities()
    if ids:
        records = [r for r in records if r.id in ids]
    return records


def cmd_list(args) -> tuple[str, int]:
    groups = _split(args.group)
    for g in groups:
        if g not in registry.GROUPS:
            raise ConfigError(f"unknown group {g!r}")
    records = registry.list_identities(groups or None)
    if args.id:
        records = [r for r in records if any(r.id.startswith(p) for p in _split(args.id))]
    return format_listing(records, args.format), EXIT_OK


def _run(tasks, args) -> tuple[str, int]:
    ctx = _context(args)
    reports = registry.run_tasks(tasks, ctx, args.jobs)
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    return format_reports(reports, args.format), status


def cmd_verify(args) -> tuple[str, int]:
    if not args.id:
        raise ConfigError("verify needs --id")
    _context(args)
    records = [_record(i) for i in _split(args.id)]
    params = _param_grid(args.param, sweep=False)[0]
    if params and len(records) > 1:
        raise ConfigError("--param applies to a single --id")
    for r in records:
        _validate(r, params)
    return _run([(r.id, params or None) for r in records], args)


def cmd_verify_all(args) -> tuple[str, int]:
    _context(args)
    if args.param:
        raise ConfigError("verify-all runs default parameters; use sweep for overrides")
    records = _selected_records(args)
    return _run([(r.id, None) for r in records], args)


def cmd_sweep(args) -> tuple[str, int]:
    if not args.id or len(_split(args.id)) != 1:
        raise ConfigError("sweep needs exactly one --id")
    if not args.param:
        raise ConfigError("sweep needs at least one --param")
    _context(args)
    record = _record(args.id)
    grid = _param_grid(args.param, sweep=True)
    for params in grid:
        _validate(record, params)
    return _run([(record.id, params) for params in grid], args)


def cmd_figure(args) -> tuple[str, int]:
    ctx = _context(args)
    if args.id not in FIGURES:
        raise ConfigError(f"figure needs --id fig1 or fig2, got {args.id!r}")
    n_values = _int_values(args.n, "n")
    if args.id == "fig1":
        if args.b:
            raise ConfigError("fig1 has no parameter b")
        specs = [limits.fig1()]
    else:
        specs = []
        for text in expand_values(args.b or "1,2,3"):
            with ctx.activate():
                try:
                    b = parse_number(text)
                except ValueError as exc:
                    raise ConfigError(str(exc)) from None
            if isinstance(b, mpc) or b <= 0:
                raise ConfigError(f"fig2 needs real b > 0, got {text!r}")
            specs.append(limits.fig2(b))
    for spec in specs:
        if any(n < spec.min_n for n in n_values):
            raise ConfigError(f"{spec.id} needs n ≥ {spec.min_n}")
    try:
        return limits.figure_data(specs, n_values, ctx), EXIT_OK
    except MellinSumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return "", EXIT_FAIL


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "verify-all": cmd_verify_all, "sweep": cmd_sweep,
            "figure": cmd_figure}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mellin-sum", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--id", help="identity id(s) or aliases, comma separated; fig1/fig2 for figure")
    parser.add_argument("--group", help="group filter, e.g. G3 or GA,GB")
    parser.add_argument("--digits", type=int, default=25, help="target digits (≥ 10)")
    parser.add_argument("--max-digits", type=int, help="working-precision ceiling (≥ digits + 10)")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--format", choices=("text", "json", "csv"), help="output format")
    parser.add_argument("--json", action="store_true", help="shorthand for --format json")
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument("--param", action="append", default=[], metavar="K=V",
                        help="parameter override; sweep accepts lists and start..stop[:step] ranges")
    parser.add_argument("--b", help="figure: values of b for fig2")
    parser.add_argument("--n", default="2..10", help="figure: values of n")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.json:
            if args.format not in (None, "json"):
                raise ConfigError("--json conflicts with --format")
            args.format = "json"
        args.format = args.format or ("csv" if args.command == "figure" else "text")
        if args.command == "figure" and args.format != "csv":
            raise ConfigError("figure writes CSV only")
        text, status = COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"mellin-sum: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status
