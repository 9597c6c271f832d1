"""Plain-text and JSON serialisation for matrices and group dumps.

Matrix text block::

    4 int            # or "4 5" for a matrix over Z/5Z
    11 8 -5 0
    ...

A file may hold several blocks; blank lines and ``#`` comments are ignored.
JSON form: ``{"dim": 4, "modulus": 5 | null, "entries": [[...], ...]}``,
or a list of such objects.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .matrix_core import IntMatrix, Matrix, ModMatrix


class FormatError(ValueError):
    pass


def format_matrix(a: Matrix) -> str:
    mod = "int" if a.modulus is None else str(a.modulus)
    return f"{a.dim} {mod}\n{a}\n"


def format_matrices(ms: Iterable[Matrix]) -> str:
    return "\n".join(format_matrix(m) for m in ms)


def _meaningful_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_matrices_text(text: str) -> list[Matrix]:
    lines = _meaningful_lines(text)
    out: list[Matrix] = []
    i = 0
    while i < len(lines):
        head = lines[i].split()
        if len(head) != 2:
            raise FormatError(f"bad header line {lines[i]!r}; expected 'dim modulus|int'")
        try:
            dim = int(head[0])
            modulus = None if head[1] == "int" else int(head[1])
        except ValueError as exc:
            raise FormatError(f"bad header line {lines[i]!r}") from exc
        if dim < 1:
            raise FormatError(f"dimension must be positive, got {dim}")
        body = lines[i + 1:i + 1 + dim]
        if len(body) != dim:
            raise FormatError(f"expected {dim} rows after header {lines[i]!r}")
        try:
            rows = [[int(tok) for tok in line.split()] for line in body]
        except ValueError as exc:
            raise FormatError(f"non-integer entry near {lines[i]!r}") from exc
        if any(len(r) != dim for r in rows):
            raise FormatError(f"rows must have {dim} entries")
        if modulus is None:
            out.append(IntMatrix(rows))
        else:
            if modulus < 2:
                raise FormatError(f"modulus must be >= 2, got {modulus}")
            if any(not 0 <= e < modulus for r in rows for e in r):
                raise FormatError("modular entries must be canonical residues")
            out.append(ModMatrix(rows, modulus))
        i += 1 + dim
    return out


def matrix_to_json(a: Matrix) -> dict[str, Any]:
    return {"dim": a.dim, "modulus": a.modulus, "entries": [list(r) for r in a.rows]}


def matrix_from_json(obj: dict[str, Any]) -> Matrix:
    try:
        dim, modulus, entries = obj["dim"], obj["modulus"], obj["entries"]
    except (KeyError, TypeError) as exc:
        raise FormatError("matrix JSON needs 'dim', 'modulus' and 'entries'") from exc
    if len(entries) != dim or any(len(r) != dim for r in entries):
        raise FormatError(f"entries do not form a {dim}x{dim} array")
    if any(not isinstance(e, int) or isinstance(e, bool) for r in entries for e in r):
        raise FormatError("entries must be integers")
    if modulus is None:
        return IntMatrix(entries)
    if any(not 0 <= e < modulus for r in entries for e in r):
        raise FormatError("modular entries must be canonical residues")
    return ModMatrix(entries, modulus)


def parse_matrices(text: str) -> list[Matrix]:
    """Parse either format, deciding by the first non-blank character."""
    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        objs = obj if isinstance(obj, list) else [obj]
        return [matrix_from_json(o) for o in objs]
    return parse_matrices_text(text)


def load_matrices(path: str) -> list[Matrix]:
    with open(path) as fh:
        ms = parse_matrices(fh.read())
    if not ms:
        raise FormatError(f"{path}: no matrices found")
    return ms


def format_group_dump(dim: int, modulus: int, codes: Iterable[int]) -> str:
    codes = sorted(codes)
    return f"{dim} {modulus} {len(codes)}\n" + "".join(f"{c}\n" for c in codes)


def parse_group_dump(text: str) -> tuple[int, int, list[int]]:
    lines = _meaningful_lines(text)
    if not lines:
        raise FormatError("empty group dump")
    try:
        dim, modulus, order = (int(t) for t in lines[0].split())
        codes = [int(line) for line in lines[1:]]
    except ValueError as exc:
        raise FormatError("malformed group dump") from exc
    if len(codes) != order:
        raise FormatError(f"header promises {order} codes, found {len(codes)}")
    if codes != sorted(set(codes)):
        raise FormatError("codes must be strictly ascending")
    return dim, modulus, codes
