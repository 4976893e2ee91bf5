"""
Matrix text formats

Plain `.trop` format:

    3 3
    1 4 -1
    1 0 6
    -4 1 3

The first line holds `m n`; each following line holds n scalar tokens
(`-inf`, integers or `p/q` rationals, `g` suffix for ghosts). Blank
lines and lines starting with `#` are ignored.

Structured (JSON) format:

    {"rows": [[{"v": "1", "g": false}, {"neginf": true}], ...]}
"""

import hashlib
import json
from typing import Any, Dict, List, Union

from exceptions import MatrixParseError, MatrixShapeError
from models import MatrixDocument
from semiring import NEG_INF, Kind, TropScalar, format_scalar, parse_scalar
from tensor import TropMatrix, TropVector

FORMATS = ('plain', 'json')


def parse_matrix(text: str) -> MatrixDocument:
    """
    Parse either format; a leading `{` selects the structured one

    Raises:
        MatrixParseError: With line/column for malformed input
        MatrixShapeError: When a row length disagrees with the shape
    """
    if text.lstrip().startswith('{'):
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise MatrixParseError(f"Invalid JSON: {e.msg}", line=e.lineno, column=e.colno)
        return MatrixDocument(structured_to_matrix(document), 'json')
    return MatrixDocument(_parse_plain(text), 'plain')


def _parse_plain(text: str) -> TropMatrix:
    lines = [
        (number, line) for number, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith('#')
    ]
    if not lines:
        raise MatrixParseError("Empty matrix file", line=1)

    header_line, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() and int(p) > 0 for p in parts):
        raise MatrixParseError("Header must be two positive integers 'm n'", line=header_line, column=1)
    m, n = int(parts[0]), int(parts[1])

    body = lines[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise MatrixParseError(f"Expected {m} rows, found {len(body)}", line=last)

    rows = []
    for number, line in body:
        tokens = _tokens_with_columns(line)
        if len(tokens) != n:
            raise MatrixShapeError(n, len(tokens), line=number)
        row = []
        for column, token in tokens:
            try:
                row.append(parse_scalar(token))
            except MatrixParseError as e:
                raise MatrixParseError(e.message, line=number, column=column)
        rows.append(tuple(row))
    return TropMatrix(tuple(rows))


def _tokens_with_columns(line: str) -> List[tuple]:
    """Whitespace-separated tokens with their 1-based start column"""
    tokens = []
    start = None
    for index, char in enumerate(line + ' '):
        if char.isspace():
            if start is not None:
                tokens.append((start + 1, line[start:index]))
                start = None
        elif start is None:
            start = index
    return tokens


def _cell_to_scalar(cell: Any, row: int, column: int) -> TropScalar:
    if isinstance(cell, dict):
        if cell.get('neginf') is True:
            return NEG_INF
        if 'v' not in cell:
            raise MatrixParseError("Cell needs 'v' or 'neginf'", line=row, column=column)
        value = parse_scalar(str(cell['v']))
        if value.kind is not Kind.REAL:
            raise MatrixParseError("Cell 'v' must be a plain rational", line=row, column=column)
        if cell.get('g', False):
            return TropScalar.ghost(value.magnitude)
        return value
    if isinstance(cell, str):
        return parse_scalar(cell)
    if isinstance(cell, int) and not isinstance(cell, bool):
        return TropScalar.real(cell)
    raise MatrixParseError(f"Unsupported cell {cell!r}", line=row, column=column)


def structured_to_matrix(document: Union[Dict, List]) -> TropMatrix:
    """
    Build a matrix from the structured form

    Cells may also be plain tokens ("2g", "-inf") or integers.
    """
    rows = document.get('rows') if isinstance(document, dict) else None
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise MatrixParseError("Structured matrix needs a non-empty 'rows' array of arrays")
    width = len(rows[0])
    if width == 0:
        raise MatrixParseError("Structured matrix needs at least one column", line=1)

    parsed = []
    for i, row in enumerate(rows, 1):
        if len(row) != width:
            raise MatrixShapeError(width, len(row), line=i)
        try:
            parsed.append(tuple(_cell_to_scalar(cell, i, j) for j, cell in enumerate(row, 1)))
        except MatrixParseError as e:
            if e.line is None:
                raise MatrixParseError(e.message, line=i)
            raise

    shape = document.get('shape')
    if shape is not None and list(shape) != [len(rows), width]:
        raise MatrixParseError(f"Declared shape {shape} does not match {len(rows)}x{width}")
    return TropMatrix(tuple(parsed))


def matrix_to_structured(matrix: TropMatrix) -> Dict:
    def cell(x: TropScalar) -> Dict:
        if x.is_neg_inf:
            return {'neginf': True}
        return {'v': format_scalar(TropScalar.real(x.magnitude)), 'g': x.kind is Kind.GHOST}

    return {'rows': [[cell(x) for x in row] for row in matrix.rows]}


def format_matrix(matrix: TropMatrix, fmt: str = 'plain') -> str:
    """Canonical rendering; parse_matrix(format_matrix(A)) == A"""
    if fmt == 'json':
        return json.dumps(matrix_to_structured(matrix)) + '\n'
    lines = [f"{matrix.m} {matrix.n}"]
    lines.extend(' '.join(row) for row in matrix.to_lists())
    return '\n'.join(lines) + '\n'


def parse_vector(text: str) -> TropVector:
    """Whitespace- or comma-separated scalar tokens"""
    tokens = text.replace(',', ' ').split()
    if not tokens:
        raise MatrixParseError("Empty vector")
    return TropVector(tuple(parse_scalar(t) for t in tokens))


def digest(matrix: TropMatrix) -> str:
    """SHA-256 of the canonical plain rendering"""
    return hashlib.sha256(format_matrix(matrix).encode('utf-8')).hexdigest()
