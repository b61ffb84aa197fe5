"""Command-line interface: ``sl3bracket <command> [input] [options]``.

Gauss-code commands (eval, free, kus, minimal, fuzz) read a code from a file,
``-c CODE`` or ``--named NAME``.  Web commands (reduce, canon) read web JSON
the same way.  Errors print ``error[kind]: message`` and exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .algebra import format_element, format_poly
from .bracket import free_bracket, minimality_certificate, report
from .canon import canonical_form
from .corpus import named
from .diagram import GaussCode, GaussCodeError, MoveError, parse_gauss, unoriented_state_web
from .fuzz import replay, run_fuzz
from .reduce import ReductionStrategy, normal_form
from .web import (BigonSite, SquareSite, Web, WebError, components, cube, heawood, k33,
                  ladder, mobius_kantor, theta)

CODE_COMMANDS = ("eval", "free", "kus", "minimal", "fuzz")
WEB_COMMANDS = ("reduce", "canon")
WEB_NAMES = {"theta": theta, "k33": k33, "heawood": heawood,
             "mobius-kantor": mobius_kantor, "ladder": ladder, "cube": cube}


class CliError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _check_sources(args) -> None:
    given = [x for x in (args.input, args.code, args.named) if x is not None]
    if len(given) > 1:
        raise CliError("usage", "give exactly one of INPUT, -c or --named")


def _read_input(args) -> str:
    _check_sources(args)
    if args.code is not None:
        return args.code
    if args.input is not None:
        if args.input == "-":
            return sys.stdin.read().strip()
        try:
            with open(args.input, encoding="utf-8") as fh:
                return fh.read().strip()
        except OSError as exc:
            raise CliError("io", f"{args.input}: {exc.strerror}") from None
    raise CliError("usage", "no input given")


def _code(args) -> GaussCode:
    _check_sources(args)
    if args.named is not None:
        try:
            code = named(args.named)
        except KeyError:
            raise CliError("unknown-name", f"no built-in code named {args.named!r}") from None
    else:
        code = parse_gauss(_read_input(args))
    if getattr(args, "free", False):
        code = code.forget()
    return code


def _web(args) -> Web:
    _check_sources(args)
    if args.named is not None:
        if args.named not in WEB_NAMES:
            raise CliError("unknown-name", f"no built-in web named {args.named!r}")
        return WEB_NAMES[args.named]()
    text = _read_input(args)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError("format", f"web JSON: {exc.msg} at line {exc.lineno}") from None
    if not isinstance(data, dict):
        raise CliError("format", "web JSON must be an object")
    return Web.from_json(data)


def _emit(args, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_eval(args) -> int:
    rep = report(_code(args), workers=args.workers)
    print(rep.to_json() if args.format == "json" else rep.to_text())
    return 0


def cmd_free(args) -> int:
    code = _code(args)
    values = {a: free_bracket(code, a, args.workers) for a in ((args.a,) if args.a else (1, -1))}
    lines = [f"free(A={a}): {format_element(v)}" for a, v in values.items()]
    payload = {"code": str(code)}
    payload.update({f"free_at_{'plus' if a > 0 else 'minus'}1": format_element(v)
                    for a, v in values.items()})
    _emit(args, "\n".join(lines), payload)
    return 0


def _kus_parts(code: GaussCode):
    kus = unoriented_state_web(code)
    parts, circles = components(kus)
    keys = sorted((canonical_form(p) for p in parts), key=lambda w: (w.n, w.key))
    return kus, [w.key for w in keys], circles


def cmd_kus(args) -> int:
    kus, keys, circles = _kus_parts(_code(args))
    if args.dot:
        print(kus.to_dot())
        return 0
    lines = list(keys)
    if circles:
        lines.append(f"circles: {circles}")
    _emit(args, "\n".join(lines), {"components": keys, "circles": circles})
    return 0


def cmd_minimal(args) -> int:
    cert = minimality_certificate(_code(args))
    girth = None if math.isinf(cert.girth) else int(cert.girth)
    payload = {"verdict": cert.verdict, "reason": cert.reason,
               "kus": [w.key for w in cert.kus], "kus_circles": cert.kus_circles,
               "girth": girth}
    _emit(args, str(cert), payload)
    return 0


def _site_text(site) -> str:
    if isinstance(site, BigonSite):
        return f"({site.u},{site.v})"
    if isinstance(site, SquareSite):
        return "(" + ",".join(map(str, site.cycle)) + ")"
    return str(site)


def cmd_reduce(args) -> int:
    w = _web(args)
    if args.dot:
        print(w.to_dot())
        return 0
    steps = []

    def trace(rule, site, coeff):
        steps.append(f"{rule} {_site_text(site)} {format_poly(coeff)}")

    strategy = ReductionStrategy(args.seed)
    result = format_element(normal_form(w, strategy, trace if args.trace else None))
    _emit(args, "\n".join(steps + [result]),
          {"normal_form": result, **({"trace": steps} if args.trace else {})})
    return 0


def cmd_canon(args) -> int:
    w = _web(args)
    if args.dot:
        print(canonical_form(w).to_web().to_dot())
        return 0
    cf = canonical_form(w)
    _emit(args, cf.key, {"canonical": cf.key, "n": cf.n})
    return 0


def cmd_fuzz(args) -> int:
    if args.replay is not None:
        try:
            with open(args.replay, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError("io", f"{args.replay}: {exc.strerror}") from None
        result = replay(text)
    else:
        result = run_fuzz(_code(args), args.moves, args.seed if args.seed is not None else 0,
                          max_crossings=args.max_crossings)
    payload = {"passed": result.passed, "steps": result.steps,
               "failure": result.failure, "transcript": result.transcript}
    if not result.passed:
        payload["orbit"] = result.orbit
    _emit(args, result.to_text(), payload)
    return 0 if result.passed else 1


COMMANDS = {"eval": cmd_eval, "free": cmd_free, "kus": cmd_kus, "minimal": cmd_minimal,
            "reduce": cmd_reduce, "canon": cmd_canon, "fuzz": cmd_fuzz}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl3bracket",
                                     description="sl(3) web bracket of virtual link diagrams")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "eval": "raw and normalized bracket of a signed Gauss code",
        "free": "bracket of a (free) code at A=+1 and A=-1",
        "kus": "canonical components of the all-unoriented state web",
        "minimal": "crossing-minimality certificate",
        "reduce": "normal form of a web given as JSON",
        "canon": "canonical form of a connected web given as JSON",
        "fuzz": "random move sequences checking invariance",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("input", nargs="?", help="file to read ('-' for stdin)")
        p.add_argument("-c", dest="code", metavar="TEXT", help="inline input")
        p.add_argument("--named", metavar="NAME", help="built-in code or web (e.g. trefoil, K7)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if name in ("eval", "free"):
            p.add_argument("--workers", type=int, default=1,
                           help="processes for the state sum (default 1)")
        if name == "free":
            p.add_argument("--a", type=int, choices=(1, -1), help="only this specialization")
        if name in ("free", "kus", "minimal", "fuzz"):
            p.add_argument("--free", action="store_true", help="forget signs and roles first")
        if name in ("kus", "reduce", "canon"):
            p.add_argument("--dot", action="store_true", help="print the web as DOT instead")
        if name in ("reduce", "fuzz"):
            p.add_argument("--seed", type=int, default=None,
                           help="64-bit seed (reduce: random site order)")
        if name == "reduce":
            p.add_argument("--trace", action="store_true", help="print each rewriting step")
        if name == "fuzz":
            p.add_argument("--moves", type=int, default=20)
            p.add_argument("--max-crossings", type=int, default=None,
                           help="cap for insertions (default: start + 2, at least 6)")
            p.add_argument("--replay", metavar="FILE", help="re-run a saved transcript")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", None) is not None and not -2**63 <= args.seed < 2**64:
        print("error[usage]: seed must fit in 64 bits", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except (CliError, WebError, GaussCodeError) as exc:
        print(f"error[{exc.kind}]: {exc}", file=sys.stderr)
    except MoveError as exc:
        print(f"error[{exc.kind}]: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"error[value]: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
