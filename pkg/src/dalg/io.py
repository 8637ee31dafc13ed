"""Text formats: algebra definition files, operator files, tensor literals.

Algebra files are line oriented::

    field: Q
    dim: 2
    name: L_2
    {{1,1}} = 1 * e1 (x) e2 - 1 * e2 (x) e1

Indices are 1-based, omitted pairs are zero, ``#`` starts a comment.  Scalars
use the field syntax: ``a/b`` or ``a`` over Q, ``a mod p`` over GF(p), and
``(t^2+1)/(t)`` style fractions over GF(p)(t).  Operator files carry the
``field:`` and ``n:`` headers followed by n^2 rows of n^2 comma-separated
scalars.  Both formats round-trip exactly through save/load.
"""

from __future__ import annotations

import re

from .algebra import DoubleAlgebra
from .field import parse_field_tag
from .linalg import MatrixOverField
from .operators import EndOperator
from .tensors import format_tensor2, parse_tensor2

_BRACKET_LINE_RE = re.compile(
    r"^\{\{\s*(\d+)\s*,\s*(\d+)\s*\}\}\s*=\s*(.+)$")


def _strip_lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def format_algebra(V: DoubleAlgebra) -> str:
    lines = [f"field: {V.field.tag}", f"dim: {V.n}"]
    if V.name:
        lines.append(f"name: {V.name}")
    for i in range(V.n):
        for j in range(V.n):
            t = V.constants[i][j]
            if not t.is_zero():
                lines.append(f"{{{{{i + 1},{j + 1}}}}} = {format_tensor2(t)}")
    return "\n".join(lines) + "\n"


def parse_algebra(text: str) -> DoubleAlgebra:
    field = None
    dim = None
    name = None
    pending = []
    for line in _strip_lines(text):
        if line.startswith("field:"):
            field = parse_field_tag(line.split(":", 1)[1])
        elif line.startswith("dim:"):
            dim = int(line.split(":", 1)[1].strip())
        elif line.startswith("name:"):
            name = line.split(":", 1)[1].strip()
        else:
            m = _BRACKET_LINE_RE.match(line)
            if not m:
                raise ValueError(f"cannot parse algebra line {line!r}")
            pending.append((int(m.group(1)), int(m.group(2)), m.group(3)))
    if field is None or dim is None:
        raise ValueError("algebra file needs 'field:' and 'dim:' headers")
    table = {}
    for i, j, body in pending:
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ValueError(f"bracket index ({i},{j}) outside 1..{dim}")
        table[(i - 1, j - 1)] = parse_tensor2(field, dim, body)
    return DoubleAlgebra.from_table(field, dim, table, name=name)


def save_algebra(V: DoubleAlgebra, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_algebra(V))


def load_algebra(path) -> DoubleAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def format_operator(R: EndOperator) -> str:
    lines = [f"field: {R.field.tag}", f"n: {R.n}"]
    for row in R.matrix.rows:
        lines.append(", ".join(R.field.format(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_operator(text: str) -> EndOperator:
    field = None
    n = None
    rows = []
    for line in _strip_lines(text):
        if line.startswith("field:"):
            field = parse_field_tag(line.split(":", 1)[1])
        elif line.startswith("n:"):
            n = int(line.split(":", 1)[1].strip())
        else:
            if field is None:
                raise ValueError("operator file must declare 'field:' before rows")
            rows.append(tuple(field.parse(cell) for cell in line.split(",")))
    if field is None or n is None:
        raise ValueError("operator file needs 'field:' and 'n:' headers")
    if len(rows) != n * n or any(len(r) != n * n for r in rows):
        raise ValueError(f"operator needs {n * n} rows of {n * n} entries")
    return EndOperator(field, n, MatrixOverField(field, rows))


def save_operator(R: EndOperator, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_operator(R))


def load_operator(path) -> EndOperator:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_operator(fh.read())
