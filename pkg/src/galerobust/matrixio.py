"""Reading and writing matrices in the plain 'd n + entries' text format.

The format: an optional run of '#' comment lines, a header with the two
counts d and n, then d*n whitespace-separated integers (arbitrary
magnitude, parsed exactly).  A JSON form is also accepted: either a bare
list of rows or an object with a "matrix" key.
"""

from __future__ import annotations

import json

from .errors import MatrixFormatError
from .intlinalg import IntegerMatrix


def parse_matrix_text(text: str) -> IntegerMatrix:
    tokens: list[str] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    if len(tokens) < 2:
        raise MatrixFormatError("missing 'd n' header")
    try:
        d, n = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise MatrixFormatError(f"bad header: {exc}") from None
    if d < 1 or n < 1:
        raise MatrixFormatError(f"header counts must be positive, got {d} {n}")
    body = tokens[2:]
    if len(body) != d * n:
        raise MatrixFormatError(
            f"expected {d * n} entries for a {d}x{n} matrix, found {len(body)}"
        )
    try:
        values = [int(t) for t in body]
    except ValueError as exc:
        raise MatrixFormatError(f"bad entry: {exc}") from None
    return IntegerMatrix([values[i * n : (i + 1) * n] for i in range(d)])


def parse_matrix_json(text: str) -> IntegerMatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from None
    rows = doc.get("matrix") if isinstance(doc, dict) else doc
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MatrixFormatError("JSON input must be a list of rows or {'matrix': rows}")
    for r in rows:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise MatrixFormatError(f"non-integer entry {x!r}")
    try:
        return IntegerMatrix(rows)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from None


def load_matrix(path: str, json_mode: bool = False) -> IntegerMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_matrix_json(text) if json_mode else parse_matrix_text(text)


def format_matrix(m: IntegerMatrix) -> str:
    lines = [f"{m.nrows} {m.ncols}"]
    lines.extend(" ".join(str(x) for x in row) for row in m.rows)
    return "\n".join(lines) + "\n"
