"""File formats and report emission.

Instance files: a `k n` header line, then one line of k*n space-separated
labels in circular order; `#` starts a comment.  2-factor files: one `u v`
edge per line with 0-based positions, order-insensitive.  Structured
reports are JSON lines with sorted keys; REPORT_SCHEMA describes every
record shape.
"""

from __future__ import annotations

import json
from typing import Any

from convexcycles.crossings import TwoFactor
from convexcycles.distance import BoundReport, DistanceResult, ScanReport
from convexcycles.instance import ConvexInstance, InputError, Transposition
from convexcycles.solver import SolveResult
from convexcycles.transforms import UnwindResult


def _data_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _parse_int(token: str, lineno: int, pos: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(
            f"line {lineno}, token {pos}: {token!r} is not an integer"
        ) from None


def parse_instance(text: str) -> ConvexInstance:
    """Parse and validate the instance text format."""
    lines = _data_lines(text)
    if not lines:
        raise InputError("empty instance: expected a 'k n' header line")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise InputError(f"line {lineno}: expected 'k n', found {len(parts)} tokens")
    k = _parse_int(parts[0], lineno, 1)
    n = _parse_int(parts[1], lineno, 2)
    if len(lines) < 2:
        raise InputError(f"line {lineno}: missing the line of {k * n} labels")
    if len(lines) > 2:
        raise InputError(f"line {lines[2][0]}: unexpected extra content")
    lineno, body = lines[1]
    tokens = body.split()
    if len(tokens) != k * n:
        raise InputError(
            f"line {lineno}: expected {k * n} labels, found {len(tokens)}"
        )
    colors = [_parse_int(tok, lineno, pos) for pos, tok in enumerate(tokens, 1)]
    return ConvexInstance.of(k, n, colors)


def serialize_instance(inst: ConvexInstance) -> str:
    return f"{inst.k} {inst.n}\n{' '.join(str(c) for c in inst.colors)}\n"


def parse_two_factor(text: str, inst: ConvexInstance) -> TwoFactor:
    """Parse an edge-per-line 2-factor file against its instance."""
    edges = []
    for lineno, line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', found {len(parts)} tokens")
        u = _parse_int(parts[0], lineno, 1)
        v = _parse_int(parts[1], lineno, 2)
        edges.append((u, v))
    return TwoFactor.from_edges(inst, edges)


def serialize_two_factor(tf: TwoFactor) -> str:
    return "".join(f"{u} {v}\n" for u, v in tf.edges)


def parse_transpositions(text: str) -> list[Transposition]:
    """Parse a swap-per-line sequence file (`a b` positions)."""
    seq = []
    for lineno, line in _data_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'a b', found {len(parts)} tokens")
        a = _parse_int(parts[0], lineno, 1)
        b = _parse_int(parts[1], lineno, 2)
        seq.append(Transposition(a, b))
    return seq


def serialize_transpositions(seq) -> str:
    return "".join(f"{t.a} {t.b}\n" for t in seq)


def _instance_doc(inst: ConvexInstance) -> dict[str, Any]:
    return {"k": inst.k, "n": inst.n, "colors": list(inst.colors)}


def _edge_list(edges) -> list[list[int]]:
    return [[u, v] for u, v in edges]


def two_factor_record(tf: TwoFactor) -> dict[str, Any]:
    return {
        "type": "two-factor",
        "instance": _instance_doc(tf.instance),
        "crossings": tf.crossing_count,
        "edges": _edge_list(tf.edges),
        "cycles": [list(c) for c in tf.cycles()],
    }


def _bound_fields(report: BoundReport) -> dict[str, Any]:
    return {
        "exact_min": report.exact_min,
        "distance": report.distance,
        "bound_generic": report.bound_generic,
        "bound_k3": report.bound_k3,
        "bound_closed_form": report.bound_closed_form,
        "ok_generic": report.ok_generic,
        "ok_k3": report.ok_k3,
        "ok_closed_form": report.ok_closed_form,
    }


def report_records(obj) -> list[dict[str, Any]]:
    """Structured records for any result object, one dict per output line."""
    if isinstance(obj, SolveResult):
        return [
            {
                "type": "solve",
                "instance": _instance_doc(obj.witness.instance),
                "minimum": obj.minimum,
                "witness_edges": _edge_list(obj.witness.edges),
                "optima_count": obj.optima_count,
                "explored": obj.explored,
                "optimal": obj.optimal,
            }
        ]
    if isinstance(obj, DistanceResult):
        return [
            {
                "type": "distance",
                "distance": obj.distance,
                "witness": [[t.a, t.b] for t in obj.witness],
            }
        ]
    if isinstance(obj, BoundReport):
        record = {"type": "bounds", "instance": _instance_doc(obj.instance)}
        record.update(_bound_fields(obj))
        return [record]
    if isinstance(obj, UnwindResult):
        return [
            {
                "type": "unwind",
                "instance": _instance_doc(obj.two_factor.instance),
                "crossings": obj.two_factor.crossing_count,
                "edges": _edge_list(obj.two_factor.edges),
                "total_budget": obj.total_budget,
                "steps": [
                    {
                        "swap": [s.transposition.a, s.transposition.b],
                        "budget": s.budget,
                        "inserted": s.inserted,
                        "fallback": s.fallback,
                        "crossings_after": s.crossings_after,
                    }
                    for s in obj.steps
                ],
            }
        ]
    if isinstance(obj, ScanReport):
        records: list[dict[str, Any]] = []
        for rec in obj.records:
            entry = {
                "type": "scan-record",
                "sequence": list(rec.colors),
                "canonical": list(rec.canonical),
                "witness_edges": _edge_list(rec.witness_edges),
            }
            entry.update(_bound_fields(rec.report))
            records.append(entry)
        records.append(
            {
                "type": "scan-summary",
                "k": obj.k,
                "n": obj.n,
                "sequences_total": obj.sequences_total,
                "classes": len({rec.canonical for rec in obj.records}),
                "max_min": obj.max_min,
                "all_bounds_hold": obj.all_bounds_hold,
                "equality_classes": [list(c) for c in obj.equality_classes],
                "unique_extremal": obj.unique_extremal,
            }
        )
        return records
    if isinstance(obj, TwoFactor):
        return [two_factor_record(obj)]
    raise InputError(f"cannot emit a report for {type(obj).__name__}")


def _text_lines(obj) -> list[str]:
    if isinstance(obj, SolveResult):
        inst = obj.witness.instance
        lines = [
            f"instance: k={inst.k} n={inst.n} colors={' '.join(map(str, inst.colors))}",
            f"minimum crossings: {obj.minimum}",
            f"witness edges: {' '.join(f'({u},{v})' for u, v in obj.witness.edges)}",
            f"explored: {obj.explored}",
        ]
        if obj.optima_count is not None:
            lines.append(f"optimal 2-factors: {obj.optima_count}")
        if not obj.optimal:
            lines.append("WARNING: node budget exhausted; minimum is best-found only")
        return lines
    if isinstance(obj, DistanceResult):
        swaps = " ".join(f"({t.a},{t.b})" for t in obj.witness) or "(none)"
        return [f"transposition distance: {obj.distance}", f"witness swaps: {swaps}"]
    if isinstance(obj, BoundReport):
        inst = obj.instance
        lines = [
            f"instance: k={inst.k} n={inst.n} colors={' '.join(map(str, inst.colors))}",
            f"exact minimum: {obj.exact_min}",
            f"transposition distance: {obj.distance}",
            f"bound 4*distance = {obj.bound_generic}: {'ok' if obj.ok_generic else 'VIOLATED'}",
        ]
        if obj.bound_k3 is not None:
            lines.append(
                f"bound 3*distance = {obj.bound_k3}: {'ok' if obj.ok_k3 else 'VIOLATED'}"
            )
        if obj.bound_closed_form is not None:
            lines.append(
                f"bound 3n(n-1)/2 = {obj.bound_closed_form}:"
                f" {'ok' if obj.ok_closed_form else 'VIOLATED'}"
            )
        return lines
    if isinstance(obj, UnwindResult):
        tf = obj.two_factor
        lines = [
            f"crossings: {tf.crossing_count} (budget {obj.total_budget})",
            f"edges: {' '.join(f'({u},{v})' for u, v in tf.edges)}",
        ]
        if obj.fallback_steps:
            lines.append(f"generic-budget fallback at steps: {list(obj.fallback_steps)}")
        return lines
    if isinstance(obj, ScanReport):
        lines = [
            f"scan k={obj.k} n={obj.n}: {obj.sequences_total} sequences"
            f" in {len({rec.canonical for rec in obj.records})} canonical classes",
            f"max of exact minima: {obj.max_min}",
            f"all bounds hold: {'yes' if obj.all_bounds_hold else 'NO'}",
        ]
        if obj.unique_extremal is not None:
            lines.append(
                "closed-form bound tight only on the contiguous-block class: "
                + ("yes" if obj.unique_extremal else "NO")
            )
        return lines
    if isinstance(obj, TwoFactor):
        return [
            f"crossings: {obj.crossing_count}",
            f"edges: {' '.join(f'({u},{v})' for u, v in obj.edges)}",
            f"cycles: {' '.join('-'.join(map(str, c)) for c in obj.cycles())}",
        ]
    raise InputError(f"cannot emit a report for {type(obj).__name__}")


def emit_report(obj, format: str = "text") -> str:
    """Render a result as human-readable text or as JSON lines."""
    if format == "text":
        return "\n".join(_text_lines(obj)) + "\n"
    if format in ("structured", "json"):
        return "".join(
            json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n"
            for rec in report_records(obj)
        )
    raise InputError(f"unknown report format {format!r}")


_INSTANCE_SCHEMA = {
    "type": "object",
    "properties": {
        "k": {"type": "integer", "minimum": 3},
        "n": {"type": "integer", "minimum": 1},
        "colors": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
    "required": ["k", "n", "colors"],
}

_EDGES_SCHEMA = {
    "type": "array",
    "items": {
        "type": "array",
        "items": {"type": "integer", "minimum": 0},
        "minItems": 2,
        "maxItems": 2,
    },
}

_BOUND_PROPS = {
    "exact_min": {"type": "integer", "minimum": 0},
    "distance": {"type": "integer", "minimum": 0},
    "bound_generic": {"type": "integer", "minimum": 0},
    "bound_k3": {"type": ["integer", "null"]},
    "bound_closed_form": {"type": ["integer", "null"]},
    "ok_generic": {"type": "boolean"},
    "ok_k3": {"type": ["boolean", "null"]},
    "ok_closed_form": {"type": ["boolean", "null"]},
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "type": {"const": "solve"},
                "instance": _INSTANCE_SCHEMA,
                "minimum": {"type": "integer", "minimum": 0},
                "witness_edges": _EDGES_SCHEMA,
                "optima_count": {"type": ["integer", "null"]},
                "explored": {"type": "integer", "minimum": 0},
                "optimal": {"type": "boolean"},
            },
            "required": ["type", "instance", "minimum", "witness_edges", "explored"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "type": {"const": "distance"},
                "distance": {"type": "integer", "minimum": 0},
                "witness": _EDGES_SCHEMA,
            },
            "required": ["type", "distance", "witness"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "type": {"const": "bounds"},
                "instance": _INSTANCE_SCHEMA,
                **_BOUND_PROPS,
            },
            "required": ["type", "instance", "exact_min", "distance"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "type": {"const": "unwind"},
                "instance": _INSTANCE_SCHEMA,
                "crossings": {"type": "integer", "minimum": 0},
                "edges": _EDGES_SCHEMA,
                "total_budget": {"type": "integer", "minimum": 0},
                "steps": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "properties": {
                            "swap": {"type": "array"},
                            "budget": {"type": "integer"},
                            "inserted": {"type": "boolean"},
                            "fallback": {"type": "boolean"},
                            "crossings_after": {"type": "integer", "minimum": 0},
                        },
                        "required": ["swap", "budget", "crossings_after"],
                    },
                },
            },
            "required": ["type", "instance", "crossings", "edges", "total_budget"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "type": {"const": "scan-record"},
                "sequence": {"type": "array", "items": {"type": "integer"}},
                "canonical": {"type": "array", "items": {"type": "integer"}},
                "witness_edges": _EDGES_SCHEMA,
                **_BOUND_PROPS,
            },
            "required": ["type", "sequence", "canonical", "exact_min", "distance"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "type": {"const": "scan-summary"},
                "k": {"type": "integer"},
                "n": {"type": "integer"},
                "sequences_total": {"type": "integer"},
                "classes": {"type": "integer"},
                "max_min": {"type": "integer"},
                "all_bounds_hold": {"type": "boolean"},
                "equality_classes": {"type": "array"},
                "unique_extremal": {"type": ["boolean", "null"]},
            },
            "required": ["type", "k", "n", "sequences_total", "all_bounds_hold"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "type": {"const": "two-factor"},
                "instance": _INSTANCE_SCHEMA,
                "crossings": {"type": "integer", "minimum": 0},
                "edges": _EDGES_SCHEMA,
                "cycles": {"type": "array"},
            },
            "required": ["type", "instance", "crossings", "edges"],
            "additionalProperties": False,
        },
    ],
}
