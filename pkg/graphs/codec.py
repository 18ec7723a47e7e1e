"""
Readers and writers for graph documents: graph6 text and the JSON edge
list. Decoding errors raise `DocumentParseError` carrying the byte offset
(syntax) or the field path (content).
"""

import json
from typing import Any, Union

from utils.base.constants import MAX_GRAPH_VERTICES
from utils.base.exceptions import DocumentParseError
from utils.base.general import first_error

from .models import Graph
from .serializers import GraphSerializer

GRAPH6_HEADER = '>>graph6<<'
_BIAS = 63


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + _BIAS)
    if n <= 258047:
        return '~' + ''.join(chr((n >> s & 63) + _BIAS) for s in (12, 6, 0))
    return '~~' + ''.join(chr((n >> s & 63) + _BIAS) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode in graph6: size prefix, then the column-ordered upper triangle in 6-bit groups"""
    bits = [1 if g.has_edge(i, j) else 0
            for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        body.append(chr(value + _BIAS))
    return (GRAPH6_HEADER if header else '') + _encode_size(g.n) + ''.join(body)


def from_graph6(text: Union[str, bytes], source: str = '') -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode('ascii')
        except UnicodeDecodeError as exc:
            raise DocumentParseError(
                'graph6 text must be ASCII', offset=exc.start, source=source)

    data = text.rstrip('\r\n')
    offset = 0
    if data.startswith(GRAPH6_HEADER):
        offset = len(GRAPH6_HEADER)

    def value_at(pos):
        if pos >= len(data):
            raise DocumentParseError(
                'unexpected end of graph6 text', offset=pos, source=source)
        code = ord(data[pos])
        if not _BIAS <= code <= 126:
            raise DocumentParseError(
                f"invalid graph6 character {data[pos]!r}", offset=pos, source=source)
        return code - _BIAS

    if offset < len(data) and data[offset] == '~':
        if offset + 1 < len(data) and data[offset + 1] == '~':
            width, start = 6, offset + 2
        else:
            width, start = 3, offset + 1
        n = 0
        for pos in range(start, start + width):
            n = n << 6 | value_at(pos)
        offset = start + width
    else:
        n = value_at(offset)
        offset += 1

    if n > MAX_GRAPH_VERTICES:
        raise DocumentParseError(
            f"graph has {n} vertices, the limit is {MAX_GRAPH_VERTICES}",
            offset=0, source=source)

    bit_count = n * (n - 1) // 2
    expected = offset + (bit_count + 5) // 6
    if len(data) > expected:
        raise DocumentParseError(
            'trailing characters after graph6 body', offset=expected, source=source)

    edges = []
    index = 0
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for pos in range(offset, expected):
        value = value_at(pos)
        for shift in range(5, -1, -1):
            set_bit = value >> shift & 1
            if index < bit_count:
                i, j = next(pairs)
                if set_bit:
                    edges.append((i, j))
            elif set_bit:
                raise DocumentParseError(
                    'nonzero padding bits in graph6 body', offset=pos, source=source)
            index += 1
    return Graph.from_edges(n, edges)


def graph_from_data(data: Any, source: str = '') -> Graph:
    """Validate a decoded JSON graph document"""
    serializer = GraphSerializer(data=data)
    if not serializer.is_valid():
        path, message = first_error(serializer.errors)
        raise DocumentParseError(message, path=path, source=source)
    return serializer.save()


def load_json(text: Union[str, bytes], source: str = '') -> Any:
    """json.loads with syntax errors turned into byte-offset parse errors"""
    if isinstance(text, bytes):
        text = text.decode('utf-8')
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[:exc.pos].encode('utf-8'))
        raise DocumentParseError(exc.msg, offset=offset, source=source)


def to_json(g: Graph) -> str:
    return json.dumps(g.to_dict())


def from_json(text: Union[str, bytes], source: str = '') -> Graph:
    return graph_from_data(load_json(text, source), source)


def read_graph(text: Union[str, bytes], source: str = '') -> Graph:
    """Decode either format; JSON documents start with '{'"""
    if isinstance(text, bytes):
        text = text.decode('utf-8', errors='replace')
    if text.lstrip().startswith('{'):
        return from_json(text, source)
    return from_graph6(text.strip(), source)
