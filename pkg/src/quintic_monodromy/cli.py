"""Command-line front end.

    quintic-monodromy verify all --seed 0 --format json
    quintic-monodromy closure gens.txt --mod 5 --dump group.txt
    quintic-monodromy charpoly A.txt
    quintic-monodromy order T.txt --cap 100
    quintic-monodromy member group.txt x.txt
    quintic-monodromy sporder 2 5 1

Exit codes: 0 success, 1 a check failed or a cap was hit, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .formats import FormatError, format_group_dump, load_matrices, parse_group_dump
from .group_engine import (DEFAULT_CLOSURE_CAP, DEFAULT_ORDER_CAP, CapExceeded, GeneratorSet,
                           closure, element_order, group_from_codes, member, sp_order)
from .matrix_core import IntMatrix, MatrixError, ModMatrix, charpoly, det
from .verification import CHECK_NAMES, TARGETS, run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(path: str) -> list:
    try:
        return load_matrices(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except (FormatError, MatrixError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _as_modular(ms: list, modulus: int | None) -> list[ModMatrix]:
    out = []
    for m in ms:
        if isinstance(m, IntMatrix):
            if modulus is None:
                raise UsageError("integer matrices need --mod")
            out.append(m.reduce(modulus))
        else:
            if modulus is not None and modulus != m.modulus:
                raise UsageError(f"matrix is mod {m.modulus} but --mod {modulus} was given")
            out.append(m)
    return out


def cmd_verify(args) -> int:
    if args.target == "all":
        names = CHECK_NAMES
    elif args.target in TARGETS:
        names = TARGETS[args.target]
    else:
        raise UsageError(f"unknown target {args.target!r}; choose from all, "
                         f"{', '.join(TARGETS)}")
    report = run_checks(names, seed=args.seed, samples=args.samples, max_len=args.max_len,
                        observe=args.target == "all")
    text = report.to_json() if args.format == "json" else report.to_text()
    _emit(text, args.out)
    return EXIT_OK if report.all_passed else EXIT_FAIL


def cmd_closure(args) -> int:
    mats = _as_modular(_load(args.generators), args.mod)
    try:
        gens = GeneratorSet(tuple(f"g{i + 1}" for i in range(len(mats))), tuple(mats))
    except (ValueError, MatrixError) as exc:
        raise UsageError(str(exc)) from exc
    try:
        group = closure(gens, args.cap)
    except CapExceeded as exc:
        msg = f"cap exceeded: more than {exc.cap} elements (partial count {exc.partial.order})"
        if args.format == "json":
            _emit(json.dumps({"closed": False, "cap": exc.cap,
                              "partial_order": exc.partial.order}) + "\n", args.out)
        else:
            _emit(msg + "\n", args.out)
        return EXIT_FAIL
    if args.dump:
        with open(args.dump, "w") as fh:
            fh.write(format_group_dump(group.dim, group.modulus, group.elements))
    if args.format == "json":
        _emit(json.dumps({"closed": True, "dim": group.dim, "modulus": group.modulus,
                          "order": group.order}) + "\n", args.out)
    else:
        _emit(f"order: {group.order}\n", args.out)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    lines, objs = [], []
    for m in _load(args.matrix):
        cp = charpoly(m.lift() if isinstance(m, ModMatrix) else m)
        if isinstance(m, ModMatrix):
            coeffs = [c % m.modulus for c in cp.descending()]
            lines.append(" ".join(str(c) for c in coeffs)
                         + f"  (mod {m.modulus}, x^{cp.degree} first)")
            objs.append({"modulus": m.modulus, "coefficients": coeffs})
        else:
            lines.append(str(cp))
            objs.append({"modulus": None, "coefficients": list(cp.descending()),
                         "polynomial": str(cp)})
    if args.format == "json":
        _emit(json.dumps(objs) + "\n", args.out)
    else:
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_order(args) -> int:
    results = []
    for m in _load(args.matrix):
        if isinstance(m, ModMatrix) and not m.is_invertible():
            raise UsageError("matrix is not invertible")
        if isinstance(m, IntMatrix) and det(m) not in (1, -1):
            raise UsageError("matrix is not invertible over Z")
        results.append(element_order(m, args.cap))
    if args.format == "json":
        _emit(json.dumps([{"order": k, "cap": args.cap} for k in results]) + "\n", args.out)
    else:
        _emit("".join(f"order: {k}\n" if k is not None else f"infinite (up to {args.cap})\n"
                      for k in results), args.out)
    return EXIT_OK


def cmd_member(args) -> int:
    try:
        with open(args.group) as fh:
            dim, modulus, codes = parse_group_dump(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.group}: {exc.strerror}") from exc
    except FormatError as exc:
        raise UsageError(f"{args.group}: {exc}") from exc
    group = group_from_codes(dim, modulus, codes)
    verdicts = []
    for m in _as_modular(_load(args.matrix), modulus):
        if m.dim != dim:
            raise UsageError(f"matrix has dim {m.dim}, group has dim {dim}")
        verdicts.append(member(group, m))
    if args.format == "json":
        _emit(json.dumps([{"member": v} for v in verdicts]) + "\n", args.out)
    else:
        _emit("".join(f"member: {str(v).lower()}\n" for v in verdicts), args.out)
    return EXIT_OK


def cmd_sporder(args) -> int:
    try:
        order = sp_order(args.n, args.p, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        _emit(json.dumps({"n": args.n, "p": args.p, "k": args.k, "order": order}) + "\n",
              args.out)
    else:
        _emit(f"{order}\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = _Parser(prog="quintic-monodromy", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="run the built-in checks")
    p.add_argument("target", nargs="?", default="all",
                   help=f"all, {', '.join(TARGETS)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="sample count for the sampled checks")
    p.add_argument("--max-len", type=int, help="maximum random word length")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("closure", parents=[common], help="close a set of generators mod m")
    p.add_argument("generators")
    p.add_argument("--mod", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_CLOSURE_CAP)
    p.add_argument("--dump", help="write the canonical group file here")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("order", parents=[common], help="element order up to a cap")
    p.add_argument("matrix")
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("member", parents=[common], help="membership in a dumped group")
    p.add_argument("group")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("sporder", parents=[common], help="|Sp(2n, Z/p^k Z)|")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("k", type=int, nargs="?", default=1)
    p.set_defaults(func=cmd_sporder)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("samples", "max_len", "cap"):
        value = getattr(args, flag, None)
        if value is not None and value < 1:
            print(f"{parser.prog}: error: --{flag.replace('_', '-')} must be positive",
                  file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
