"""Stable textual and machine-readable formats.

Multipartition literal grammar: components separated by ``|``, each a
parenthesized comma list of weakly decreasing positive integers; ``()`` and
``(0)`` both denote the empty component, printed back as ``()``.  Rationals
read as ``p/q`` or plain integers; anything float-like is rejected so
exactness is never silently lost.

JSON payloads carry ``"schema": "multiorder/1"``: a multipartition is an
array of arrays of integers, a rational is ``{"num": int, "den": int}``, a
relation table is its universe plus base64-packed row-major bits.
"""
from __future__ import annotations

import base64
import json
import re
from fractions import Fraction

import numpy as np

from .errors import LiteralError
from .orders import KIND_ADJACENCY, KIND_SANDWICH, OrderMatrix
from .partitions import Multipartition, Partition

SCHEMA = "multiorder/1"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise LiteralError(f"not an exact rational: {text!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise LiteralError(f"zero denominator: {text!r}") from None


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_char_vector(text: str) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if not parts or not text.strip():
        raise LiteralError("empty character vector")
    return tuple(parse_rational(p) for p in parts)


def format_char_vector(chi) -> str:
    return ",".join(format_rational(x) for x in chi)


def _parse_component(text: str, offset: int) -> Partition:
    stripped = text.strip()
    pad = offset + (len(text) - len(text.lstrip()))
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise LiteralError("component must be parenthesized", pad)
    inner = stripped[1:-1].strip()
    if inner in ("", "0"):
        return Partition(())
    rows = []
    pos = pad + 1
    for piece in inner.split(","):
        token = piece.strip()
        if not token.isdigit() or int(token) == 0:
            raise LiteralError(f"bad row length {piece!r}", pos)
        rows.append(int(token))
        pos += len(piece) + 1
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise LiteralError("row lengths must be weakly decreasing", pad)
    return Partition(tuple(rows))


def parse_multipartition(text: str) -> Multipartition:
    components = []
    offset = 0
    for piece in text.split("|"):
        components.append(_parse_component(piece, offset))
        offset += len(piece) + 1
    return Multipartition(tuple(components))


def format_multipartition(mp: Multipartition) -> str:
    return str(mp)


def rational_json(value: Fraction) -> dict:
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def rational_from_json(obj) -> Fraction:
    return Fraction(obj["num"], obj["den"])


def multipartition_json(mp: Multipartition) -> list:
    return [list(c.rows) for c in mp.components]


def multipartition_from_json(obj) -> Multipartition:
    return Multipartition(tuple(Partition(tuple(rows)) for rows in obj))


def order_matrix_json(matrix: OrderMatrix) -> dict:
    if matrix.kind == KIND_SANDWICH:
        bits = matrix.tags.tobytes()
    else:
        bits = np.packbits(matrix.rel, axis=None).tobytes()
    out = {
        "schema": SCHEMA,
        "kind": matrix.kind,
        "universe": [multipartition_json(m) for m in matrix.universe],
        "bits": base64.b64encode(bits).decode("ascii"),
    }
    if matrix.chi is not None:
        out["chi"] = [rational_json(x) for x in matrix.chi]
    return out


def order_matrix_dot(matrix: OrderMatrix, geq_reduction=None) -> str:
    """Deterministic DOT rendering.

    Order kinds draw the Hasse diagram (transitive reduction); the sandwich
    kind draws the reduction of the dominance order with each covering edge
    colored by its classification; the adjacency kind draws its raw
    undirected graph.
    """
    labels = [format_multipartition(m) for m in matrix.universe]
    lines = ["digraph order {"]
    for label in labels:
        lines.append(f'  "{label}";')
    if matrix.kind == KIND_ADJACENCY:
        rel = matrix.rel
        for a in range(len(labels)):
            for b in range(a + 1, len(labels)):
                if rel[a, b]:
                    lines.append(f'  "{labels[a]}" -> "{labels[b]}" [dir=none];')
    elif matrix.kind == KIND_SANDWICH:
        if geq_reduction is None:
            raise ValueError("sandwich rendering needs the dominance reduction")
        for a in range(len(labels)):
            for b in range(len(labels)):
                if not geq_reduction[a, b]:
                    continue
                tag = matrix.tag_name(a, b)
                color = "black" if tag == "forced-above" else "gray"
                style = "solid" if tag == "forced-above" else "dashed"
                lines.append(
                    f'  "{labels[a]}" -> "{labels[b]}" '
                    f'[color={color}, style={style}, tag="{tag}"];'
                )
    else:
        red = matrix.reduction()
        for a in range(len(labels)):
            for b in range(len(labels)):
                if red[a, b]:
                    lines.append(f'  "{labels[a]}" -> "{labels[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_json(report) -> dict:
    """CounterexampleReport as a stable JSON object."""
    return {
        "schema": SCHEMA,
        "n": report.n,
        "r": report.r,
        "chi": [rational_json(x) for x in report.chi],
        "lam": multipartition_json(report.lam),
        "mu": multipartition_json(report.mu),
        "adjacent_below": [
            {"mp": multipartition_json(m), "relation_to_mu": rel}
            for m, rel in report.adjacent_below
        ],
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
