"""Command line entry point: ``solvkit run <script>`` and ``solvkit repl``."""

from __future__ import annotations

import argparse
import json
import sys

from ..fields import parse_field
from .parser import ParseError, _Parser
from .session import Session, SessionError


def _emit(out, result, as_json: bool):
    if as_json:
        out.write(json.dumps(result.as_json(), sort_keys=True) + "\n")
        return
    for step in result.trace:
        out.write(f"# {step}\n")
    out.write(result.text + "\n")


def _flush_warnings(session, err):
    for w in session.warnings:
        err.write(w + "\n")
    session.warnings.clear()


def run_script(text: str, *, as_json=False, field=None, trace=False, out=None, err=None) -> int:
    """Run a whole script, writing results to ``out``; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    kwargs = {"trace": trace}
    if field is not None:
        kwargs["default_field"] = field
    session = Session(**kwargs)
    try:
        script = _Parser(text).parse()
    except ParseError as exc:
        err.write(f"error: {exc}\n")
        return 2
    try:
        for result in session.run(script):
            _flush_warnings(session, err)
            _emit(out, result, as_json)
    except SessionError as exc:
        _flush_warnings(session, err)
        err.write(f"error: {exc}\n")
        return 1
    _flush_warnings(session, err)
    return 0


def repl(*, as_json=False, field=None, trace=False, inp=None, out=None, err=None) -> int:
    """Read statements line by line; errors are reported and the loop continues."""
    inp = inp or sys.stdin
    out = out or sys.stdout
    err = err or sys.stderr
    kwargs = {"trace": trace}
    if field is not None:
        kwargs["default_field"] = field
    session = Session(**kwargs)
    parser = _Parser("")
    interactive = hasattr(inp, "isatty") and inp.isatty()
    status = 0
    no = 0
    while True:
        if interactive:
            out.write("solv> ")
            out.flush()
        line = inp.readline()
        if not line:
            break
        no += 1
        try:
            st = parser.parse_line(line.rstrip("\n"), no)
            for result in session.execute(st) if st is not None else ():
                _flush_warnings(session, err)
                _emit(out, result, as_json)
        except (ParseError, SessionError) as exc:
            _flush_warnings(session, err)
            err.write(f"error: {exc}\n")
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object per result")
    common.add_argument("--field", type=parse_field, default=None,
                        help="coefficient field for algebras without a field clause (QQ or GF<p>)")
    common.add_argument("--trace-reductions", action="store_true", help="print each division step")
    p = argparse.ArgumentParser(prog="solvkit", description="Groebner bases over solvable polynomial algebras")
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", parents=[common], help="run a .solv script")
    r.add_argument("script")
    sub.add_parser("repl", parents=[common], help="read statements from standard input")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    # LF-only output regardless of platform
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(newline="\n")
    opts = {"as_json": args.json, "field": args.field, "trace": args.trace_reductions}
    if args.cmd == "run":
        try:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 2
        return run_script(text, **opts)
    return repl(**opts)


if __name__ == "__main__":
    sys.exit(main())
