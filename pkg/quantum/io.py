"""
Text formats for matrices and JSON formats for ensembles.

Matrix files: a "rows cols" header line, then one line per row holding
whitespace-separated complex tokens such as 0.5-0.5j. Serialization writes
17 significant digits so parse(serialize(m)) reproduces m exactly.
"""
import json
import logging

import numpy as np

from . import cmatrix
from .exceptions import MatrixParseError

logger = logging.getLogger(__name__)


def _parse_size(token, line, column):
    try:
        value = int(token)
    except ValueError:
        raise MatrixParseError(f"Expected an integer size, got {token!r}", line, column)
    if value < 1:
        raise MatrixParseError(f"Matrix sizes must be positive, got {value}", line, column)
    return value


def _tokens(text):
    """(token, column) pairs of a line, columns 1-based"""
    tokens = []
    position = 0
    for token in text.split():
        position = text.index(token, position)
        tokens.append((token, position + 1))
        position += len(token)
    return tokens


def parse_complex(token, line, column):
    try:
        value = complex(token.replace('i', 'j'))
    except ValueError:
        raise MatrixParseError(f"Malformed complex number {token!r}", line, column)
    if not np.isfinite(value):
        raise MatrixParseError(f"Non-finite entry {token!r}", line, column)
    return value


def parse_matrix(text):
    """
    Parse the "rows cols" text format

    Raises:
        MatrixParseError: with the line and column of the first malformed token
    """
    lines = [(number, raw) for number, raw in enumerate(text.splitlines(), start=1) if raw.strip()]
    if not lines:
        raise MatrixParseError("Empty matrix text", 1)
    header_line, header = lines[0]
    header_tokens = _tokens(header)
    if len(header_tokens) != 2:
        raise MatrixParseError("Header must read 'rows cols'", header_line)
    rows, cols = (_parse_size(token, header_line, column) for token, column in header_tokens)

    body = lines[1:]
    if len(body) != rows:
        where = body[-1][0] + 1 if body else header_line + 1
        raise MatrixParseError(f"Expected {rows} rows, found {len(body)}", where)
    matrix = np.empty((rows, cols), dtype=np.complex128)
    for r, (number, raw) in enumerate(body):
        tokens = _tokens(raw)
        if len(tokens) != cols:
            column = tokens[cols][1] if len(tokens) > cols else len(raw) + 1
            raise MatrixParseError(f"Expected {cols} entries, found {len(tokens)}", number, column)
        for c, (token, column) in enumerate(tokens):
            matrix[r, c] = parse_complex(token, number, column)
    return cmatrix.as_matrix(matrix)


def format_complex(value):
    value = complex(value)
    return f"{value.real:.17g}{value.imag:+.17g}j"


def serialize_matrix(m):
    matrix = cmatrix.as_matrix(m)
    lines = [f"{matrix.shape[0]} {matrix.shape[1]}"]
    lines.extend(' '.join(format_complex(entry) for entry in row) for row in matrix)
    return '\n'.join(lines) + '\n'


def _load_json(text):
    if not isinstance(text, str):
        return text
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(f"Invalid JSON: {exc.msg}", exc.lineno, exc.colno)


def parse_ensemble(text):
    """
    Ensemble from {"dims": [...], "items": [{"p": 0.95, "vector": [[re, im], ...]}, ...]}

    Members may give "matrix" (rows of [re, im] pairs) instead of "vector".

    Raises:
        rest_framework.serializers.ValidationError: naming the violated invariant
    """
    from .serializers import EnsembleSerializer

    serializer = EnsembleSerializer(data=_load_json(text))
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def _pairs(values):
    return [[float(np.real(v)), float(np.imag(v))] for v in values]


def ensemble_to_dict(ensemble):
    items = []
    for p, state in ensemble.items:
        item = {'p': p}
        if hasattr(state, 'vector'):
            item['vector'] = _pairs(state.vector)
        else:
            item['matrix'] = [_pairs(row) for row in state.matrix]
        items.append(item)
    return {'dims': list(ensemble.dims), 'items': items}


def serialize_ensemble(ensemble):
    return json.dumps(ensemble_to_dict(ensemble), indent=2)
