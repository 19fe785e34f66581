"""Command-line interface.

Exit status: 0 on success, 1 when ``verify`` finds a failing case, 2 on a
domain error (``inv`` of a singular matrix, ``drazin`` of a nonsingular one),
64 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .circulant import Circulant, TwoParamCirculant, rank_circulant
from .closedform import det_closed, drazin_closed, inverse_closed, perm_closed
from .core import DomainError, format_rational, parse_rational
from .digraph import build_digraph, components, to_dot
from .sweep import DEFAULT_PAIRS, grid, verify_grid
from .untangle import block_diagonalize

EX_OK = 0
EX_FAILED = 1
EX_DOMAIN = 2
EX_USAGE = 64

_VALUE_FLAGS = {"--a", "--b", "--coeffs", "--pairs"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _join_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--b -5/7`` as ``--b=-5/7`` so argparse does not read the value as a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if tok in _VALUE_FLAGS and nxt.startswith("-") and not nxt.startswith("--"):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _add_matrix_args(p: argparse.ArgumentParser, ab_required: bool = True):
    p.add_argument("--n", type=int, required=True, help="matrix order")
    p.add_argument("--s1", type=int, required=True, help="power carrying a")
    p.add_argument("--s2", type=int, required=True, help="power carrying b (s1 < s2 < n)")
    default = None if ab_required else Fraction(1)
    p.add_argument("--a", type=_rational_arg, required=ab_required, default=default, help="coefficient, p/q")
    p.add_argument("--b", type=_rational_arg, required=ab_required, default=default, help="coefficient, p/q")


def _add_format(p: argparse.ArgumentParser, choices=("text", "json")):
    p.add_argument("--format", choices=choices, default="text")
    p.add_argument("--json", dest="format", action="store_const", const="json", help="same as --format json")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twocirc", description="Closed forms for circulants a P^s1 + b P^s2.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in [("det", "determinant"), ("perm", "permanent"),
                        ("inv", "inverse of a nonsingular matrix"),
                        ("drazin", "Drazin (group) inverse of a singular matrix")]:
        p = sub.add_parser(name, help=help_)
        _add_matrix_args(p)
        _add_format(p)

    p = sub.add_parser("rank", help="rank from the gcd of x^n - 1 and the associated polynomial")
    p.add_argument("--coeffs", help="comma separated first row; replaces --n/--s1/--s2/--a/--b")
    p.add_argument("--n", type=int)
    p.add_argument("--s1", type=int)
    p.add_argument("--s2", type=int)
    p.add_argument("--a", type=_rational_arg)
    p.add_argument("--b", type=_rational_arg)
    _add_format(p)

    p = sub.add_parser("untangle", help="block-diagonalizing permutation")
    _add_matrix_args(p, ab_required=False)
    p.add_argument("--dense", action="store_true", help="also print the block-diagonal matrix")
    _add_format(p)

    p = sub.add_parser("digraph", help="weighted digraph of the matrix")
    _add_matrix_args(p)
    _add_format(p, choices=("text", "json", "dot"))
    p.add_argument("--dot", dest="format", action="store_const", const="dot", help="same as --format dot")
    p.add_argument("--numeric", action="store_true", help="label arcs with weights instead of a/b")

    p = sub.add_parser("verify", help="check every closed form against the oracles on a grid")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--pairs", help="semicolon separated a,b pairs, e.g. '2,3;1,-1'")
    p.add_argument("--verbose", action="store_true", help="print every case, not only failures")
    _add_format(p)
    return parser


def _two_param(args) -> TwoParamCirculant:
    if not 0 <= args.s1 < args.s2 < args.n:
        raise UsageError(f"need 0 <= s1 < s2 < n, got n={args.n}, s1={args.s1}, s2={args.s2}")
    if args.a == 0 or args.b == 0:
        raise UsageError("a and b must be nonzero")
    return TwoParamCirculant(args.n, args.s1, args.s2, args.a, args.b)


def _parse_pairs(text: str | None):
    if text is None:
        return DEFAULT_PAIRS
    pairs = []
    for chunk in text.split(";"):
        try:
            a, b = (parse_rational(x) for x in chunk.split(","))
        except ValueError:
            raise UsageError(f"malformed pair {chunk!r}") from None
        if a == 0 or b == 0:
            raise UsageError("a and b must be nonzero")
        pairs.append((a, b))
    return pairs


def _emit(fmt: str, data: dict, text_lines: list[str], out):
    if fmt == "json":
        out.write(json.dumps(data) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _gen_inverse_lines(result) -> list[str]:
    d = result.to_dict()
    return [f"kind: {d['kind']}", f"scale: {d['scale']}", "coeffs: " + " ".join(d["coeffs"])]


def run(argv: list[str], out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(list(argv)))
    except SystemExit as exc:
        return EX_USAGE if exc.code not in (0, None) else EX_OK

    try:
        return _dispatch(args, out)
    except UsageError as exc:
        err.write(f"twocirc: usage error: {exc}\n")
        return EX_USAGE
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return EX_DOMAIN


def _dispatch(args, out) -> int:
    cmd, fmt = args.command, args.format

    if cmd == "det":
        r = det_closed(_two_param(args))
        d = r.to_dict()
        _emit(fmt, d, [f"det: {d['value']}",
                       f"sign_exponent: {d['sign_exponent']}",
                       f"base: {d['base']}",
                       f"multiplicity: {d['multiplicity']}"], out)
    elif cmd == "perm":
        v = format_rational(perm_closed(_two_param(args)))
        _emit(fmt, {"kind": "perm", "value": v}, [f"perm: {v}"], out)
    elif cmd in ("inv", "drazin"):
        t = _two_param(args)
        r = inverse_closed(t) if cmd == "inv" else drazin_closed(t)
        _emit(fmt, r.to_dict(), _gen_inverse_lines(r), out)
    elif cmd == "rank":
        c = _rank_input(args)
        r = rank_circulant(c)
        _emit(fmt, {"kind": "rank", "n": c.n, "rank": r}, [f"rank: {r}"], out)
    elif cmd == "untangle":
        t = _two_param(args)
        bd = block_diagonalize(t)
        data = {
            "sigma": list(bd.sigma.images),
            "sigma_cycles": bd.sigma.cycle_notation(),
            "block_count": bd.g,
            "block_size": bd.block.n,
            "block": bd.block.to_dict(),
        }
        lines = [f"sigma: {bd.sigma.cycle_notation()}",
                 f"blocks: {bd.g} x {bd.block.n}",
                 f"block: {bd.block!r}"]
        if args.dense:
            M = bd.block_form()
            data["dense"] = [[format_rational(x) for x in row] for row in M.to_rows()]
            lines += ["dense:", M.to_text()]
        _emit(fmt, data, lines, out)
    elif cmd == "digraph":
        t = _two_param(args)
        g = build_digraph(t)
        if fmt == "dot":
            out.write(to_dot(g, symbolic=not args.numeric))
        elif fmt == "json":
            out.write(g.to_json() + "\n")
        else:
            comps = components(t)
            lines = [f"{a.source} -> {a.target} [{a.label}={format_rational(a.weight)}]" for a in g.arcs]
            lines.append("stride classes: " + " ".join(
                "{" + ",".join(map(str, sorted(c))) + "}" for c in comps))
            out.write("\n".join(lines) + "\n")
    elif cmd == "verify":
        if args.n_min < 2 or args.n_max < args.n_min:
            raise UsageError("need 2 <= n-min <= n-max")
        reports = verify_grid(grid(args.n_min, args.n_max, _parse_pairs(args.pairs)))
        failed = [r for r in reports if not r.ok]
        if fmt == "json":
            out.write(json.dumps({
                "cases": len(reports),
                "failed": [{"case": r.label(), "checks": r.checks} for r in failed],
            }) + "\n")
        else:
            for r in reports:
                if args.verbose or not r.ok:
                    status = "PASS" if r.ok else "FAIL"
                    bad = [k for k, v in r.checks.items() if not v]
                    out.write(f"{status}  {r.label()}" + (f"  failed: {','.join(bad)}" if bad else "") + "\n")
            out.write(f"{len(reports) - len(failed)}/{len(reports)} cases passed\n")
        return EX_FAILED if failed else EX_OK
    return EX_OK


def _rank_input(args) -> Circulant:
    if args.coeffs is not None:
        try:
            return Circulant(parse_rational(x) for x in args.coeffs.split(","))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if None in (args.n, args.s1, args.s2, args.a, args.b):
        raise UsageError("rank needs --coeffs or all of --n --s1 --s2 --a --b")
    return _two_param(args).circulant()


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
